#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "nanoword/base_curves.hpp"
#include "nanoword/invariants.hpp"
#include "nanoword/moves.hpp"

namespace nanoword {

struct FuzzReport {
    bool ok = true;
    long long checks = 0;
    std::string failure;  // what broke plus a serialized counterexample
    std::map<std::string, long long> edge_kinds;  // edges checked, per move kind

    void merge(const FuzzReport& o) {
        checks += o.checks;
        for (const auto& [k, n] : o.edge_kinds) edge_kinds[k] += n;
        if (ok && !o.ok) {
            ok = false;
            failure = o.failure;
        }
    }
};

/// Uniform random Gauss word with up to `max_letters` crossings, random
/// projections (arbitrary word, not necessarily realizable).
EtaleWord random_smooth_word(int max_letters, CurveClass cls, std::mt19937_64& rng);

/// Random fake nanoword: up to `max_crossings` crossings, up to
/// `max_cusp_pairs` cusp pairs, random front projections.
EtaleWord random_front_word(int max_crossings, int max_cusp_pairs, std::mt19937_64& rng);

/// Every trajectory edge must shift (J+, J-, St) exactly per the jump
/// table of its move kind.
FuzzReport check_delta_laws(BaseFamily family, long long index, int cusps, int trials,
                            int steps, std::uint64_t seed);

/// Along long-curve trajectories, J+3 is constant across II- and III
/// edges and St3 across II+ and II- edges (symbolic equality).
FuzzReport check_degree3_stability(long long index, int trials, int steps, std::uint64_t seed);

/// Invariant presets are unchanged by the base point move at every
/// position of move-reachable words (closed: CI2, CI3, GCI3 and the bare
/// XYXY pairing; fronts: FI2, FI3, GFI3, FI2~).
FuzzReport check_basepoint_invariance(BaseFamily family, long long index, int cusps, int words,
                                      int steps, std::uint64_t seed);

/// CI2(reverse) = CI2, CI3(reverse) = -CI3 on closed walks;
/// LI2(reflect) = LI2, LI3(reflect) = -LI3 on long walks.
FuzzReport check_symmetries(int words, int steps, std::uint64_t seed);

/// (sum of signs)^2 equals the X.X. + 2XXYY + 2XYYX + 2XYXY pairing on
/// arbitrary random smooth words; LI2(1/2,1,1,1) vanishes on long walks.
FuzzReport check_lemma_identity(int words, int max_letters, std::uint64_t seed);

/// J+ - J- = n on smooth walks and n+ - n- - c on front walks.
FuzzReport check_relations(int words, int steps, std::uint64_t seed);

/// Specializing a+ = a- = -1 in FI2~ reproduces FI2 (after the parameter
/// renaming x,z,v,r -> r,s,u,v) on random front words.
FuzzReport check_ring_specialization(int words, std::uint64_t seed);

/// A pair of realizable front words with identical symbolic FI2 but
/// different FI2~, found by exhaustive search over small fronts.
std::optional<std::pair<EtaleWord, EtaleWord>> find_fi2_tilde_witness();

}  // namespace nanoword
