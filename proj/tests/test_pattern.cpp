#include <doctest.h>

#include <set>

#include "nanoword/pairing.hpp"

using namespace nanoword;

TEST_CASE("pattern literals") {
    Pattern p = parse_pattern("X.X.YY");
    CHECK(p.roles.size() == 2);
    CHECK(p.roles[0].dim == 2);
    CHECK(p.roles[1].dim == 1);
    CHECK(p.degree() == 3);
    CHECK(pattern_str(p) == "X.X.YY");

    Pattern q = parse_pattern("XKXYY");
    CHECK(q.degree() == 3);
    CHECK(q.cusp_roles() == 1);
    CHECK(pattern_str(q) == "XKXYY");

    CHECK(parse_pattern("K1.K2").degree() == 3);
    CHECK(parse_pattern("K1K2").degree() == 2);
    CHECK(parse_pattern("X.X.").degree() == 2);

    CHECK_THROWS_AS(parse_pattern("XY"), std::invalid_argument);     // X and Y occur once
    CHECK_THROWS_AS(parse_pattern("KXKX"), std::invalid_argument);   // cusp twice
    CHECK_THROWS_AS(parse_pattern("K.K"), std::invalid_argument);    // same cusp twice
    CHECK_THROWS_AS(parse_pattern("xyxy"), std::invalid_argument);
}

TEST_CASE("pattern enumeration counts are double factorials") {
    CHECK(enumerate_patterns(1).size() == 1);
    CHECK(enumerate_patterns(2).size() == 3);
    CHECK(enumerate_patterns(3).size() == 15);
    CHECK(enumerate_patterns(4).size() == 105);

    std::set<std::string> two;
    for (const Pattern& p : enumerate_patterns(2)) two.insert(pattern_str(p));
    CHECK(two == std::set<std::string>{"XXYY", "XYYX", "XYXY"});
}

TEST_CASE("degree-3 enumeration matches the named pattern list") {
    const char* names[15] = {"XYXYZZ", "XYXZZY", "XYZZXY", "XYYZXZ", "XXYZYZ",
                             "XYZYZX", "XYYXZZ", "XXYZZY", "XYZZYX", "XYZYXZ",
                             "XYXZYZ", "XYZXZY", "XYZXYZ", "XXYYZZ", "XYYZZX"};
    std::set<std::string> expect(names, names + 15);
    std::set<std::string> got;
    for (const Pattern& p : enumerate_patterns(3)) got.insert(pattern_str(p));
    CHECK(got == expect);
}

TEST_CASE("cyclic class of XYXYZZ has the six alternating terms") {
    CyclicClass c = cyclic_class(parse_pattern("XYXYZZ"), ClassFlavor::plain);
    REQUIRE(c.terms.size() == 6);
    // Rotations in order, canonically renamed, with alternating signs.
    const char* expect[6] = {"XYXYZZ", "XYXZZY", "XYZZXY", "XYYZXZ", "XXYZYZ", "XYZYZX"};
    for (int i = 0; i < 6; ++i) {
        CHECK(c.terms[i].first == (i % 2 == 0 ? 1 : -1));
        CHECK(pattern_str(c.terms[i].second) == expect[i]);
    }
}

TEST_CASE("cyclic class of XXYYZZ has two terms") {
    CyclicClass c = cyclic_class(parse_pattern("XXYYZZ"), ClassFlavor::plain);
    REQUIRE(c.terms.size() == 2);
    CHECK(c.terms[0].first == 1);
    CHECK(pattern_str(c.terms[0].second) == "XXYYZZ");
    CHECK(c.terms[1].first == -1);
    CHECK(pattern_str(c.terms[1].second) == "XYYZZX");
}

TEST_CASE("classes that meet their negative collapse to zero") {
    CHECK(cyclic_class(parse_pattern("XX"), ClassFlavor::plain).is_zero());
    CHECK(cyclic_class(parse_pattern("XYXY"), ClassFlavor::plain).is_zero());
    CHECK_FALSE(cyclic_class(parse_pattern("XXYY"), ClassFlavor::plain).is_zero());
}

TEST_CASE("front classes rotate cusps freely") {
    CyclicClass c = cyclic_class(parse_pattern("K1K2K3"), ClassFlavor::front);
    REQUIRE(c.terms.size() == 1);
    CHECK(c.terms[0].first == 1);

    CyclicClass d = cyclic_class(parse_pattern("K1.K2"), ClassFlavor::front);
    CHECK(d.terms.size() == 2);  // dotted-first and dotted-second differ
}

TEST_CASE("marked classes rotate dotted roles freely") {
    CyclicClass c = cyclic_class(parse_pattern("X.X.YY"), ClassFlavor::marked);
    REQUIRE(c.terms.size() == 4);
    CHECK(pattern_str(c.terms[0].second) == "X.X.YY");
    CHECK(c.terms[0].first == 1);
    // The plain rule rejects dotted roles, the marked rule rejects cusps.
    CHECK_THROWS_AS(cyclic_class(parse_pattern("X.X.YY"), ClassFlavor::plain),
                    std::invalid_argument);
    CHECK_THROWS_AS(cyclic_class(parse_pattern("KK"), ClassFlavor::marked),
                    std::invalid_argument);
}

TEST_CASE("class terms stay closed under rotation") {
    for (const char* lit : {"XXYY", "XYXYZZ", "XXYYZZ", "XYZXYZ"}) {
        CyclicClass c = cyclic_class(parse_pattern(lit), ClassFlavor::plain);
        std::map<std::string, int> signs;
        for (const auto& [coeff, pat] : c.terms) signs[pattern_key(pat)] = coeff;
        for (const auto& [coeff, pat] : c.terms) {
            Pattern rot = pat;
            const PatternRole& lead = rot.roles[rot.seq.front()];
            int rot_sign = lead.kind == LetterKind::crossing && lead.dim == 1 ? -1 : 1;
            std::rotate(rot.seq.begin(), rot.seq.begin() + 1, rot.seq.end());
            auto it = signs.find(pattern_key(canonical_pattern(rot)));
            REQUIRE(it != signs.end());
            CHECK(it->second == coeff * rot_sign);
        }
    }
}
