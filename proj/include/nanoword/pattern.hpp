#pragma once

#include <string>
#include <vector>

#include "nanoword/word.hpp"

namespace nanoword {

struct PatternRole {
    LetterKind kind = LetterKind::crossing;
    int dim = 1;  // 1 or 2; dimension-2 roles are written with a trailing dot
};

/// Abstract (fake) Gauss word: crossing roles occur exactly twice, cusp
/// roles exactly once. Carries no projections; matching binds them from
/// the target word.
struct Pattern {
    std::vector<PatternRole> roles;
    std::vector<int> seq;  // occurrence list of role ids

    int degree() const {
        int d = 0;
        for (const PatternRole& r : roles) d += r.dim;
        return d;
    }
    int crossing_roles() const {
        int n = 0;
        for (const PatternRole& r : roles) n += r.kind == LetterKind::crossing;
        return n;
    }
    int cusp_roles() const { return static_cast<int>(roles.size()) - crossing_roles(); }

    friend bool operator==(const Pattern& a, const Pattern& b) = default;
};

/// Parses literals like "XXYY", "X.X.YY" (dotted = dimension 2), "XKXYY"
/// (K-initial names are cusp roles), "K.K" (dotted cusp). Validates the
/// fake-Gauss occurrence counts.
Pattern parse_pattern(const std::string& literal);

/// Renames roles in order of first occurrence (validates counts).
Pattern canonical_pattern(const Pattern& p);

/// Key identifying the pattern up to role renaming.
std::string pattern_key(const Pattern& p);

/// Display form: crossings X, Y, Z, W, ...; cusps K, K1, ...; trailing
/// dots on dimension-2 roles.
std::string pattern_str(const Pattern& p);

/// All Gauss patterns with n 1-dimensional crossing roles, up to
/// isomorphism, in lexicographic order of the canonical sequence.
/// Count is (2n-1)!!.
std::vector<Pattern> enumerate_patterns(int n);

}  // namespace nanoword
