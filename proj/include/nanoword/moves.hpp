#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nanoword/rational.hpp"
#include "nanoword/word.hpp"

namespace nanoword {

/// Smooth words take II+/II-/III; front words take the S/D split of the
/// tangency moves plus cusp crossing (PI) and cusp birth (LAMBDA).
enum class MoveKind {
    II_plus,
    II_minus,
    III,
    SII_plus,
    SII_minus,
    DII_plus,
    DII_minus,
    PI_plus,
    PI_minus,
    LAMBDA
};

enum class MoveDir { positive, negative };

std::string move_kind_name(MoveKind k);
std::optional<MoveKind> move_kind_from_name(const std::string& s);
inline const char* move_dir_name(MoveDir d) { return d == MoveDir::positive ? "+" : "-"; }

/// An applicable move occurrence. Creations carry insertion gaps and the
/// projections of the letters to create; deletions carry the occurrence
/// positions to remove. PI sites also locate the cusp; `variant`
/// distinguishes whether the cusp sits in the first or second factor.
struct MoveSite {
    MoveKind kind = MoveKind::II_plus;
    MoveDir dir = MoveDir::positive;
    bool creates = false;
    int gap1 = -1, gap2 = -1;      // creation gaps (gap1 <= gap2 for II kinds)
    int cusp_pos = -1;             // PI: cusp position; LAMBDA deletion: block start
    int variant = 0;               // PI: 1 or 2
    std::vector<int> remove_pos;   // deletion: positions, ascending
    std::vector<Proj> projs;       // created letters, or expected letters on deletion

    std::string describe() const;
};

/// All sites of one kind and direction, in deterministic order.
/// Front kinds on smooth words (and vice versa) yield an empty list.
std::vector<MoveSite> enumerate_sites(const EtaleWord& w, MoveKind kind, MoveDir dir);

/// Applies a site produced for `w` (validated; throws on a stale site).
/// Created letters get fresh names and the result is canonicalized.
EtaleWord apply_move(const EtaleWord& w, const MoveSite& site);

enum class BasicInvariant { j_plus, j_minus, st };

/// The axiom table: how each basic invariant jumps under a move of the
/// given kind and direction on the given curve class.
Rational expected_delta(MoveKind kind, MoveDir dir, BasicInvariant inv, CurveClass cls);

struct TrajectoryStep {
    MoveSite site;
    EtaleWord word;  // word after the move, canonicalized
};

struct Trajectory {
    EtaleWord start;
    std::vector<TrajectoryStep> steps;
    std::uint64_t seed = 0;
    std::string truncated_reason;  // empty if the walk ran to completion
};

struct WalkOptions {
    std::map<MoveKind, int> kind_weights;  // empty: uniform over the class's kinds
    int length_soft_cap = 14;              // prefer shrinking moves above this
    bool require_rho_consistency = false;  // restrict to ring-consistent words
};

/// Deterministic random walk through move-reachable words. Every candidate
/// move is filtered so the underlying curve stays planar, which keeps the
/// visited words realizable — the hypothesis of the invariance laws. With
/// `require_rho_consistency` the walk further restricts to words whose
/// crossings satisfy the ring-refined interleave cancellation; the
/// ring-valued front invariant is base-point independent exactly there
/// (cusp-crossing insertions of a tau2 pair always break it, so such
/// walks take no PI+ edges).
Trajectory random_walk(const EtaleWord& start, int steps, std::uint64_t seed,
                       const WalkOptions& options = {});

/// The walk filter: the smooth shadow of the word is planar.
bool walk_admissible(const EtaleWord& w);

/// For every crossing A, the letters interleaved with A cancel in
/// Q[a+, a-] (counting a first occurrence inside A's span positively and
/// a second negatively). Holds automatically in the sign specialization
/// on planar words; the ring refinement is an extra constraint that the
/// ring-valued pairing needs for base-point independence.
bool rho_consistent(const EtaleWord& w);

}  // namespace nanoword
