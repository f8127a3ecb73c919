#pragma once

#include <vector>

#include "nanoword/param_expr.hpp"
#include "nanoword/pattern.hpp"

namespace nanoword {

/// sign: weights are sign(|A|)^dim, values in Q.
/// rho:  weights are rho(|A|)^dim in Q[a+, a-]; front words only.
enum class PairingMode { sign, rho };

enum class ClassFlavor { plain, marked, front };

/// Order-preserving injective assignment of pattern roles to letters of
/// the target word: restricting the word to the assigned letters (both
/// occurrences of crossings, the single occurrence of cusps) reproduces
/// the pattern sequence.
struct Match {
    std::vector<int> role_to_letter;  // indexed by role id of the query pattern
};

std::vector<Match> find_matches(const Pattern& v, const EtaleWord& w);

/// Total matched weight of each pattern in w: sum over matches of the
/// product over roles of weight(matched letter)^dim. One subset pass per
/// role-count signature, shared across all patterns with that signature.
std::vector<RingElem> pattern_weight_sums(const std::vector<Pattern>& patterns,
                                          const EtaleWord& w, PairingMode mode);

/// Sum over (coefficient, pattern) terms of coefficient x weight-sum.
ParamExpr angle_bracket(const std::vector<std::pair<ParamExpr, Pattern>>& terms,
                        const EtaleWord& w, PairingMode mode);

/// Signed expansion of the rotation class of a pattern. Rotating a
/// leading 1-dimensional crossing occurrence to the end costs a sign;
/// 2-dimensional and cusp occurrences rotate freely. If the orbit
/// identifies a pattern with its negative the class collapses to zero.
struct CyclicClass {
    ClassFlavor flavor = ClassFlavor::plain;
    std::vector<std::pair<int, Pattern>> terms;  // coefficient in {+1, -1}

    bool is_zero() const { return terms.empty(); }
};

CyclicClass cyclic_class(const Pattern& v, ClassFlavor flavor);

/// Bracket of a class: angle_bracket of its signed expansion.
ParamExpr square_bracket(const CyclicClass& c, const EtaleWord& w, PairingMode mode);

}  // namespace nanoword
