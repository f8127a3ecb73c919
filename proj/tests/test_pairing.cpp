#include <doctest.h>

#include <random>

#include "nanoword/fuzz.hpp"
#include "nanoword/word_io.hpp"
#include "oracles.hpp"

using namespace nanoword;

namespace {

EtaleWord smooth(const std::string& tokens) {
    return parse_word("class closed\nindex 0\nword " + tokens + "\n");
}

RingElem pairing(const std::string& pattern, const EtaleWord& w,
                 PairingMode mode = PairingMode::sign) {
    return pattern_weight_sums({parse_pattern(pattern)}, w, mode)[0];
}

}  // namespace

TEST_CASE("match counting examples") {
    CHECK(find_matches(parse_pattern("XXYY"), smooth("A:+ A B:+ B")).size() == 1);
    CHECK(find_matches(parse_pattern("XXYY"), smooth("A:+ B:+ A B")).empty());
    CHECK(find_matches(parse_pattern("XYXY"), smooth("A:+ B:+ A B")).size() == 1);
    // The assignment is forced and kind-respecting.
    Match m = find_matches(parse_pattern("XYXY"), smooth("A:+ B:- A B"))[0];
    CHECK(m.role_to_letter == std::vector<int>{0, 1});
}

TEST_CASE("pairing weight examples") {
    CHECK(pairing("XXYY", smooth("A:+ A B:+ B")) == RingElem(Rational(1)));
    CHECK(pairing("XXYY", smooth("A:+ A B:- B")) == RingElem(Rational(-1)));
    // The dotted single-role pattern counts crossings regardless of signs.
    CHECK(pairing("X.X.", smooth("A:+ A B:- B")) == RingElem(Rational(2)));
    CHECK(pairing("X.X.", smooth("A:- A B:- B")) == RingElem(Rational(2)));

    EtaleWord cusps = parse_word("class front\nindex 0\nword ^K1:a+ ^K2:b-\n");
    CHECK(pairing("K1K2", cusps, PairingMode::rho) ==
          -(RingElem::a_plus() * RingElem::a_minus()));
    CHECK_THROWS_AS(pairing("XXYY", smooth("A:+ A"), PairingMode::rho), std::invalid_argument);
}

TEST_CASE("pairing agrees with the brute-force oracle") {
    std::mt19937_64 rng(41);
    std::vector<std::string> pats = {"XX",    "XXYY", "XYYX", "XYXY",  "X.X.",  "X.X.YY",
                                     "XYZXYZ", "XXYZZY", "KXX", "XKX",  "XXK",   "K1K2",
                                     "XKXYY", "XXK1K2", "K.XX", "KX.X.", "K1.K2", "K1K2K3"};
    for (int trial = 0; trial < 60; ++trial) {
        EtaleWord w = trial % 2 ? random_front_word(4, 2, rng)
                                : random_smooth_word(5, CurveClass::closed, rng);
        for (const std::string& lit : pats) {
            Pattern p = parse_pattern(lit);
            if (p.cusp_roles() > 0 && w.curve_class() != CurveClass::front) continue;
            for (PairingMode mode : {PairingMode::sign, PairingMode::rho}) {
                if (mode == PairingMode::rho && w.curve_class() != CurveClass::front) continue;
                CHECK(pattern_weight_sums({p}, w, mode)[0] ==
                      oracle::brute_force_pairing(p, w, mode));
            }
        }
    }
}

TEST_CASE("pairing is isomorphism invariant") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 50; ++trial) {
        EtaleWord w = random_smooth_word(6, CurveClass::closed, rng);
        EtaleWord c = canonicalize(w);
        for (const char* lit : {"XXYY", "XYXY", "XYZXYZ"})
            CHECK(pairing(lit, w) == pairing(lit, c));
    }
}

TEST_CASE("square bracket examples") {
    CyclicClass xxyy = cyclic_class(parse_pattern("XXYY"), ClassFlavor::plain);
    CHECK(square_bracket(xxyy, smooth("A:+ A B:+ B"), PairingMode::sign) ==
          ParamExpr(Rational(1)));
    CHECK(square_bracket(xxyy, smooth("A:+ B:+ B A"), PairingMode::sign) ==
          ParamExpr(Rational(-1)));
    CHECK(square_bracket(xxyy, smooth("A:+ B:- B A"), PairingMode::sign) ==
          ParamExpr(Rational(1)));
    CHECK(square_bracket(xxyy, EtaleWord::empty(CurveClass::closed, 0), PairingMode::sign) ==
          ParamExpr());
}

TEST_CASE("square bracket is base-point invariant on every word") {
    std::mt19937_64 rng(47);
    std::vector<CyclicClass> classes = {
        cyclic_class(parse_pattern("XXYY"), ClassFlavor::plain),
        cyclic_class(parse_pattern("XYXYZZ"), ClassFlavor::plain),
        cyclic_class(parse_pattern("XXYYZZ"), ClassFlavor::plain),
        cyclic_class(parse_pattern("X.X.YY"), ClassFlavor::marked)};
    for (int trial = 0; trial < 80; ++trial) {
        EtaleWord w = random_smooth_word(6, CurveClass::closed, rng);
        if (w.length() == 0) continue;
        EtaleWord m = base_point_move(w);
        for (const CyclicClass& c : classes)
            CHECK(square_bracket(c, m, PairingMode::sign) ==
                  square_bracket(c, w, PairingMode::sign));
    }
    // Front flavor, both modes, including cusp classes.
    std::vector<CyclicClass> front_classes = {
        cyclic_class(parse_pattern("XKXYY"), ClassFlavor::front),
        cyclic_class(parse_pattern("KXXYY"), ClassFlavor::front),
        cyclic_class(parse_pattern("XXK1K2"), ClassFlavor::front),
        cyclic_class(parse_pattern("K1K2K3"), ClassFlavor::front),
        cyclic_class(parse_pattern("K.XX"), ClassFlavor::front),
        cyclic_class(parse_pattern("K1.K2"), ClassFlavor::front)};
    for (int trial = 0; trial < 80; ++trial) {
        EtaleWord w = random_front_word(3, 2, rng);
        if (w.length() == 0) continue;
        EtaleWord m = base_point_move(w);
        for (const CyclicClass& c : front_classes) {
            CHECK(square_bracket(c, m, PairingMode::sign) ==
                  square_bracket(c, w, PairingMode::sign));
            CHECK(square_bracket(c, m, PairingMode::rho) ==
                  square_bracket(c, w, PairingMode::rho));
        }
    }
}

TEST_CASE("index-squared identity on arbitrary smooth words") {
    FuzzReport r = check_lemma_identity(300, 8, 2024);
    INFO(r.failure);
    CHECK(r.ok);
}
