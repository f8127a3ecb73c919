#include "nanoword/base_curves.hpp"

#include <cstdlib>

namespace nanoword {

namespace {

// n kinks: A1 A1 A2 A2 ... An An, all with the given projection.
void append_kinks(int n, Proj proj, std::vector<Letter>& letters, std::vector<int>& occ) {
    for (int i = 0; i < n; ++i) {
        int id = static_cast<int>(letters.size());
        letters.push_back({"A" + std::to_string(i + 1), LetterKind::crossing, proj});
        occ.push_back(id);
        occ.push_back(id);
    }
}

}  // namespace

EtaleWord base_curve(BaseFamily family, long long index, int cusps) {
    if (cusps < 0) throw std::invalid_argument("negative cusp count");
    if (family != BaseFamily::KF && cusps != 0)
        throw std::invalid_argument("cusp count applies to the KF family only");

    std::vector<Letter> letters;
    std::vector<int> occ;

    switch (family) {
        case BaseFamily::K: {
            if (index < 0) throw std::invalid_argument("K family needs index >= 0");
            if (index == 0) {
                // Figure eight.
                letters.push_back({"A", LetterKind::crossing, Proj::plus_one});
                occ = {0, 0};
            } else {
                append_kinks(static_cast<int>(index) - 1, Proj::plus_one, letters, occ);
            }
            return EtaleWord::make(CurveClass::closed, std::move(letters), std::move(occ), index);
        }
        case BaseFamily::L: {
            Proj proj = index >= 0 ? Proj::plus_one : Proj::minus_one;
            append_kinks(static_cast<int>(std::llabs(index)), proj, letters, occ);
            return EtaleWord::make(CurveClass::long_curve, std::move(letters), std::move(occ),
                                   std::nullopt);
        }
        case BaseFamily::KF: {
            if (index < 0) throw std::invalid_argument("KF family needs index >= 0");
            if (index == 0) {
                letters.push_back({"A", LetterKind::crossing, Proj::b_plus});
                occ = {0, 0};
            } else {
                append_kinks(static_cast<int>(index) - 1, Proj::b_plus, letters, occ);
            }
            for (int j = 0; j < 2 * cusps; ++j) {
                int id = static_cast<int>(letters.size());
                letters.push_back({"K" + std::to_string(j + 1), LetterKind::cusp,
                                   j % 2 == 0 ? Proj::b_plus : Proj::a_plus});
                occ.push_back(id);
            }
            return EtaleWord::make(CurveClass::front, std::move(letters), std::move(occ), index);
        }
    }
    throw std::invalid_argument("unknown base family");
}

}  // namespace nanoword
