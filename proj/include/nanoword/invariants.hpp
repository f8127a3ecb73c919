#pragma once

#include <array>
#include <string>
#include <vector>

#include "nanoword/pairing.hpp"

namespace nanoword {

struct CountSummary {
    int n = 0;        // crossing letters
    int n_plus = 0;   // crossings with positive subscript (front words)
    int n_minus = 0;  // crossings with negative subscript (front words)
    int c = 0;        // half the cusp count
    long long i = 0;  // index (metadata, or sum of signs for long words)
    int mu = 0;       // Maslov index (signed cusp count; 0 for smooth words)
};

CountSummary counts(const EtaleWord& w);

/// Which scalar a preset term multiplies.
enum class CountKind { one, n, n_plus, n_minus, c, i, i_squared };

struct ScalarTerm {
    std::string param;  // empty: contributes to the constant
    Rational mult;
    CountKind kind;
};

struct PatternTerm {
    std::string param;
    Rational mult;
    Pattern pattern;
};

/// A named invariant: an affine combination of counts and pattern
/// brackets, evaluated in sign or rho mode on one curve class.
struct InvariantPreset {
    std::string name;
    CurveClass cls = CurveClass::closed;
    std::vector<std::string> params;
    PairingMode mode = PairingMode::sign;
    std::vector<ScalarTerm> scalars;
    std::vector<PatternTerm> patterns;
};

/// Registry of the built-in presets: CI2, CI3, GCI3, LI2, LI3, GLI3,
/// FI2, FI3, GFI3, FI2~. Throws on unknown names.
const InvariantPreset& preset(const std::string& name);
std::vector<std::string> preset_names();

ParamExpr evaluate(const InvariantPreset& preset, const EtaleWord& w);

struct ArnoldTriple {
    Rational j_plus, j_minus, st;
    friend bool operator==(const ArnoldTriple&, const ArnoldTriple&) = default;
};

ArnoldTriple arnold_closed(const EtaleWord& w);
ArnoldTriple arnold_long(const EtaleWord& w);
ArnoldTriple arnold_front(const EtaleWord& w);

/// Dispatch by curve class.
ArnoldTriple arnold(const EtaleWord& w);

enum class Degree3Kind { j_plus_3, st_3 };

/// Degree-3 refinements of the long-curve invariants: the 21-slot
/// combination evaluated at the substitution that makes it stable under
/// the stated moves (II- and III for J+3; II+ and II- for St3), with the
/// free parameters kept symbolic.
ParamExpr arnold_degree3(const EtaleWord& w, Degree3Kind which);

/// Free parameter names of the degree-3 substitution.
std::vector<std::string> degree3_params(Degree3Kind which);

}  // namespace nanoword
