#include <doctest.h>

#include <random>

#include "nanoword/param_expr.hpp"
#include "nanoword/render.hpp"

using namespace nanoword;

namespace {

RingElem random_ring(std::mt19937_64& rng) {
    RingElem e;
    int terms = static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        long long num = static_cast<long long>(rng() % 11) - 5;
        long long den = 1 + static_cast<long long>(rng() % 4);
        e += RingElem::monomial(static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                                Rational::of(num, den));
    }
    return e;
}

}  // namespace

TEST_CASE("rational arithmetic and parsing") {
    CHECK(Rational::of(2, 4) == Rational::of(1, 2));
    CHECK(Rational::of(-2, -4) == Rational::of(1, 2));
    CHECK(Rational::of(2, -4) == Rational::of(-1, 2));
    CHECK((Rational::of(1, 3) + Rational::of(1, 6)) == Rational::of(1, 2));
    CHECK((Rational::of(1, 2) * Rational::of(2, 3)) == Rational::of(1, 3));
    CHECK(Rational::of(7, 2).str() == "7/2");
    CHECK(Rational(-4).str() == "-4");
    CHECK(Rational::parse("-3/9") == Rational::of(-1, 3));
    CHECK(Rational::parse("12") == Rational(12));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::of(1, 0), std::domain_error);
}

TEST_CASE("ring axioms hold on random elements") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        RingElem a = random_ring(rng), b = random_ring(rng), c = random_ring(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == RingElem());
    }
}

TEST_CASE("specialize is a homomorphism") {
    std::mt19937_64 rng(11);
    std::map<std::string, Rational> params{{"s", Rational::of(-1, 2)}, {"t", Rational(3)}};
    std::map<std::string, Rational> ring{{"a+", Rational(-1)}, {"a-", Rational::of(2, 3)}};
    for (int trial = 0; trial < 100; ++trial) {
        ParamExpr e1 = ParamExpr(random_ring(rng)) + ParamExpr::param("s", random_ring(rng)) +
                       ParamExpr::param("t", random_ring(rng));
        ParamExpr e2 = ParamExpr(random_ring(rng)) + ParamExpr::param("s", random_ring(rng));
        CHECK(specialize(e1 + e2, params, ring) ==
              specialize(e1, params, ring) + specialize(e2, params, ring));
        RingElem c = random_ring(rng);
        CHECK(specialize(expr_scale(c, e1), params, ring) ==
              c.evaluate(ring.at("a+"), ring.at("a-")) * specialize(e1, params, ring));
    }
}

TEST_CASE("specialize examples") {
    // 2s - 3t at s = -1/2, t = 1.
    ParamExpr e = ParamExpr::param("s", RingElem(Rational(2))) +
                  ParamExpr::param("t", RingElem(Rational(-3)));
    CHECK(specialize(e, {{"s", Rational::of(-1, 2)}, {"t", Rational(1)}}) == Rational(-4));

    // a+a- v at v = 1, a+ = a- = -1.
    ParamExpr f = ParamExpr::param("v", RingElem::monomial(1, 1));
    CHECK(specialize(f, {{"v", Rational(1)}}, {{"a+", Rational(-1)}, {"a-", Rational(-1)}}) ==
          Rational(1));

    CHECK(specialize(ParamExpr(Rational::of(7, 2)), {}) == Rational::of(7, 2));
    CHECK_THROWS_AS(specialize(f, {}, {{"a+", Rational(1)}, {"a-", Rational(1)}}),
                    std::invalid_argument);
}

TEST_CASE("expression substitution and ring specialization") {
    ParamExpr gl = ParamExpr::param("x1", RingElem(Rational(2))) + ParamExpr(Rational(5));
    std::map<std::string, ParamExpr> subs{
        {"x1", ParamExpr::param("s") - ParamExpr::param("t", RingElem(Rational(1)))}};
    ParamExpr sub = expr_substitute(gl, subs);
    CHECK(specialize(sub, {{"s", Rational(1)}, {"t", Rational(4)}}) == Rational(-1));

    ParamExpr g = ParamExpr::param("t", RingElem::monomial(2, 0) + RingElem::monomial(0, 2));
    ParamExpr spec = specialize_ring(g, Rational(-1), Rational(-1));
    CHECK(spec == ParamExpr::param("t", RingElem(Rational(2))));
}

TEST_CASE("json rendering of expressions") {
    CHECK(ring_to_json(RingElem()).dump() == "{\"1\":\"0\"}");
    RingElem r = RingElem::monomial(2, 1, Rational::of(1, 2));
    CHECK(ring_to_json(r).dump() == "{\"a+^2 a-\":\"1/2\"}");

    // CI2 on the figure eight renders as s + t/2 with no u coefficient.
    ParamExpr e = ParamExpr::param("s") + ParamExpr::param("t", RingElem(Rational::of(1, 2)));
    CHECK(expr_to_json(e).dump() ==
          "{\"coeffs\":{\"s\":{\"1\":\"1\"},\"t\":{\"1\":\"1/2\"}},\"const\":{\"1\":\"0\"}}");
}
