#include <doctest.h>

#include <random>

#include "nanoword/base_curves.hpp"
#include "nanoword/fuzz.hpp"
#include "nanoword/genus.hpp"
#include "nanoword/word_io.hpp"
#include "oracles.hpp"

using namespace nanoword;

TEST_CASE("pinned genus values") {
    CHECK(genus(EtaleWord::empty(CurveClass::closed, 0)) == 0);
    CHECK(genus(parse_word("class closed\nindex 0\nword A:+ A\n")) == 0);
    CHECK(genus(parse_word("class closed\nindex 0\nword A:- A\n")) == 0);
    CHECK(genus(parse_word("class closed\nindex 0\nword A:+ B:- A B\n")) == 1);
    CHECK(genus(parse_word("class closed\nindex 0\nword A:+ B:+ A B\n")) == 1);
    CHECK(is_planar(parse_word("class closed\nindex 0\nword A:+ B:+ B A\n")));
    // Trefoil shadow: plane curve, so genus 0 with its realizable signs.
    CHECK(genus(parse_word("class closed\nindex 0\nword A:+ B:- C:+ A B C\n")) == 0);
}

TEST_CASE("base curves are planar") {
    for (int i = 0; i <= 4; ++i) CHECK(is_planar(base_curve(BaseFamily::K, i)));
    for (int i = -3; i <= 3; ++i) CHECK(is_planar(base_curve(BaseFamily::L, i)));
    for (int i = 0; i <= 2; ++i)
        for (int k = 0; k <= 2; ++k) CHECK(is_planar(base_curve(BaseFamily::KF, i, k)));
}

TEST_CASE("exhaustive agreement with the side-walk oracle up to 3 letters") {
    for (int n = 0; n <= 3; ++n) {
        for (const Pattern& p : enumerate_patterns(n)) {
            for (int mask = 0; mask < (1 << n); ++mask) {
                std::vector<Letter> letters;
                for (int i = 0; i < n; ++i)
                    letters.push_back({"A" + std::to_string(i), LetterKind::crossing,
                                       (mask >> i) & 1 ? Proj::plus_one : Proj::minus_one});
                EtaleWord w = EtaleWord::make(CurveClass::closed, letters, p.seq, 0);
                GenusResult g = genus_detail(w);
                CHECK(g.genus == oracle::side_walk_genus(w));
                CHECK(g.faces == oracle::side_walk_faces(w));
                // Euler parity: the genus formula divides evenly.
                CHECK((2 - (g.faces - n)) % 2 == 0);
                CHECK(g.genus >= 0);
            }
        }
    }
}

TEST_CASE("genus is isomorphism and base-point invariant") {
    std::mt19937_64 rng(2718);
    for (int trial = 0; trial < 200; ++trial) {
        EtaleWord w = random_smooth_word(6, CurveClass::closed, rng);
        CHECK(genus(w) == genus(canonicalize(w)));
        if (w.length() > 0) CHECK(genus(base_point_move(w)) == genus(w));
        CHECK(genus(w) == oracle::side_walk_genus(w));
    }
}

TEST_CASE("fronts drop cusps, long words close at infinity") {
    EtaleWord f = parse_word("class front\nindex 0\nword A:a+ ^K1:a+ A B:b- ^K2:a- B\n");
    CHECK(genus(f) == 0);
    EtaleWord l = parse_word("class long\nword A:+ B:- A B\n");
    CHECK(genus(l) == 1);
}
