#include <doctest.h>

#include <random>

#include "nanoword/base_curves.hpp"
#include "nanoword/fuzz.hpp"
#include "nanoword/word_io.hpp"

using namespace nanoword;

TEST_CASE("involutions square to the identity") {
    for (Proj p : {Proj::minus_one, Proj::plus_one}) {
        CHECK(tau(tau(p)) == p);
        CHECK(sign_of(tau(p)) == -sign_of(p));
    }
    for (Proj p : {Proj::a_plus, Proj::a_minus, Proj::b_plus, Proj::b_minus}) {
        CHECK(tau1(tau1(p)) == p);
        CHECK(tau2(tau2(p)) == p);
        CHECK(sign_of(tau1(p)) == -sign_of(p));
        CHECK(sign_of(tau2(p)) == -sign_of(p));
        CHECK(subscript_of(tau1(p)) == subscript_of(p));
        CHECK(subscript_of(tau2(p)) == -subscript_of(p));
    }
}

TEST_CASE("parse examples") {
    EtaleWord w = parse_word("class closed\nindex 0\nword A:+ A\n");
    CHECK(w.curve_class() == CurveClass::closed);
    CHECK(w.length() == 2);
    CHECK(w.index() == 0);
    CHECK(w.letters()[0].proj == Proj::plus_one);

    EtaleWord e = parse_word("class long\nword\n");
    CHECK(e.length() == 0);

    CHECK_THROWS_AS(parse_word("class long\nword A:+ B:- A\n"), ParseError);  // B once
    CHECK_THROWS_AS(parse_word("class long\nindex 1\nword\n"), ParseError);
    CHECK_THROWS_AS(parse_word("class closed\nword A:+ A\n"), ParseError);
    CHECK_THROWS_AS(parse_word("class closed\nindex 0\nword A:+ A:- \n"), ParseError);
    CHECK_THROWS_AS(parse_word("class long\nword ^K:a+ \n"), ParseError);  // cusp outside front
    CHECK_THROWS_AS(parse_word("class front\nindex 0\nword A:+ A\n"), ParseError);
    CHECK_THROWS_AS(parse_word("class front\nindex 0\nword ^K:a+\n"), ParseError);  // odd cusps
    CHECK_THROWS_AS(parse_word("class closed\nindex 0\nword A A:+\n"), ParseError);
}

TEST_CASE("comments and spacing are tolerated") {
    EtaleWord w = parse_word("# a figure eight\nclass closed\nindex 0  # header\n\nword A:+ A\n");
    CHECK(w.length() == 2);
}

TEST_CASE("serialize examples") {
    CHECK(serialize_word(EtaleWord::empty(CurveClass::long_curve, std::nullopt)) ==
          "class long\nword\n");
    EtaleWord w = parse_word("class closed\nindex 0\nword A:+ A\n");
    CHECK(serialize_word(w) == "class closed\nindex 0\nword A:+ A\n");

    EtaleWord f = parse_word("class front\nindex 1\nword ^Q:a+ B:b- ^R:b- B\n");
    CHECK(serialize_word(f) == "class front\nindex 1\nword ^K1:a+ A:b- ^K2:b- A\n");
}

TEST_CASE("round trip is the identity up to renaming") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        EtaleWord w = trial % 2 ? random_smooth_word(6, CurveClass::closed, rng)
                                : random_front_word(4, 2, rng);
        EtaleWord back = parse_word(serialize_word(w));
        CHECK(isomorphic(w, back));
        CHECK(serialize_word(back) == serialize_word(w));
    }
}

TEST_CASE("base point move") {
    EtaleWord aa = parse_word("class closed\nindex 0\nword A:+ A\n");
    CHECK(serialize_word(base_point_move(aa)) == "class closed\nindex 0\nword A:- A\n");

    EtaleWord abab = parse_word("class closed\nindex 0\nword A:+ B:- A B\n");
    CHECK(serialize_word(base_point_move(abab)) ==
          "class closed\nindex 0\nword A:- B:- A B\n");  // BABA renamed

    EtaleWord front = parse_word("class front\nindex 0\nword ^K:a+ A:b- A ^Q:a-\n");
    CHECK(serialize_word(base_point_move(front)) ==
          "class front\nindex 0\nword A:b- A ^K1:a- ^K2:a+\n");

    CHECK_THROWS_AS(base_point_move(EtaleWord::empty(CurveClass::long_curve, std::nullopt)),
                    std::invalid_argument);
}

TEST_CASE("base point move cycles back after one full turn") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        EtaleWord w = trial % 2 ? random_smooth_word(5, CurveClass::closed, rng)
                                : random_front_word(3, 1, rng);
        EtaleWord m = w;
        for (int k = 0; k < w.length(); ++k) m = base_point_move(m);
        CHECK(isomorphic(m, w));
    }
}

TEST_CASE("reverse and reflect") {
    EtaleWord aa_long = parse_word("class long\nword A:+ A\n");
    CHECK(aa_long.index() == 1);
    EtaleWord rev = reverse_orientation(aa_long);
    CHECK(rev.index() == -1);
    CHECK(serialize_word(rev) == "class long\nword A:- A\n");
    CHECK(serialize_word(reflect(aa_long)) == "class long\nword A:- A\n");

    EtaleWord abab = parse_word("class long\nword A:+ B:- A B\n");
    CHECK(serialize_word(reflect(abab)) == "class long\nword A:- B:+ A B\n");
    CHECK(serialize_word(reverse_orientation(parse_word("class long\nword A:+ A B:+ B\n"))) ==
          "class long\nword A:- A B:- B\n");

    EtaleWord front = parse_word("class front\nindex 0\nword ^K1:a+ ^K2:a- \n");
    CHECK_THROWS_AS(reverse_orientation(front), std::invalid_argument);
    CHECK_THROWS_AS(reflect(front), std::invalid_argument);

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        EtaleWord w = random_smooth_word(6, trial % 2 ? CurveClass::closed : CurveClass::long_curve,
                                         rng);
        CHECK(isomorphic(reverse_orientation(reverse_orientation(w)), w));
        CHECK(isomorphic(reflect(reflect(w)), w));
        if (w.curve_class() == CurveClass::long_curve) {
            CHECK(reverse_orientation(w).index() == -w.index());
            CHECK(reflect(w).index() == -w.index());
        }
    }
}

TEST_CASE("base curves") {
    EtaleWord k0 = base_curve(BaseFamily::K, 0);
    CHECK(serialize_word(k0) == "class closed\nindex 0\nword A:+ A\n");
    EtaleWord k1 = base_curve(BaseFamily::K, 1);
    CHECK(k1.length() == 0);
    CHECK(k1.index() == 1);
    EtaleWord k3 = base_curve(BaseFamily::K, 3);
    CHECK(k3.length() == 4);

    EtaleWord lm2 = base_curve(BaseFamily::L, -2);
    CHECK(serialize_word(lm2) == "class long\nword A:- A B:- B\n");
    CHECK(lm2.index() == -2);
    CHECK(base_curve(BaseFamily::L, 3).index() == 3);

    EtaleWord kf10 = base_curve(BaseFamily::KF, 1, 0);
    CHECK(kf10.length() == 0);
    CHECK(kf10.index() == 1);
    EtaleWord kf01 = base_curve(BaseFamily::KF, 0, 1);
    CHECK(kf01.cusp_count() == 2);

    CHECK_THROWS_AS(base_curve(BaseFamily::K, -1), std::invalid_argument);
    CHECK_THROWS_AS(base_curve(BaseFamily::KF, 0, -1), std::invalid_argument);
}
