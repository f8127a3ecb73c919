#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nanoword/ring.hpp"

namespace nanoword {

enum class CurveClass { closed, long_curve, front };

/// Crossing/cusp type. Smooth words use {minus_one, plus_one}; front
/// words use {a_plus, a_minus, b_plus, b_minus}.
enum class Proj { minus_one, plus_one, a_plus, a_minus, b_plus, b_minus };

enum class LetterKind { crossing, cusp };

inline bool is_front_proj(Proj p) { return p != Proj::minus_one && p != Proj::plus_one; }

/// -1 for {-1, a+, a-}, +1 for {+1, b+, b-}; total on both alphabets.
inline int sign_of(Proj p) {
    switch (p) {
        case Proj::minus_one:
        case Proj::a_plus:
        case Proj::a_minus: return -1;
        default: return +1;
    }
}

/// +1 for projections with a positive subscript (a+, b+), -1 for a-, b-.
/// Only meaningful on the front alphabet.
inline int subscript_of(Proj p) {
    switch (p) {
        case Proj::a_plus:
        case Proj::b_plus: return +1;
        case Proj::a_minus:
        case Proj::b_minus: return -1;
        default: throw std::invalid_argument("subscript_of: smooth projection");
    }
}

/// Involution on the smooth alphabet: -1 <-> +1.
inline Proj tau(Proj p) {
    switch (p) {
        case Proj::minus_one: return Proj::plus_one;
        case Proj::plus_one: return Proj::minus_one;
        default: throw std::invalid_argument("tau: front projection");
    }
}

/// a+ <-> b+, a- <-> b- (keeps the subscript).
inline Proj tau1(Proj p) {
    switch (p) {
        case Proj::a_plus: return Proj::b_plus;
        case Proj::b_plus: return Proj::a_plus;
        case Proj::a_minus: return Proj::b_minus;
        case Proj::b_minus: return Proj::a_minus;
        default: throw std::invalid_argument("tau1: smooth projection");
    }
}

/// a+ <-> b-, a- <-> b+ (flips letter class and subscript).
inline Proj tau2(Proj p) {
    switch (p) {
        case Proj::a_plus: return Proj::b_minus;
        case Proj::b_minus: return Proj::a_plus;
        case Proj::a_minus: return Proj::b_plus;
        case Proj::b_plus: return Proj::a_minus;
        default: throw std::invalid_argument("tau2: smooth projection");
    }
}

/// Image of a projection in Q[a+, a-]: a_e -> a_e, b_e -> -a_e.
RingElem rho(Proj p);

std::string proj_code(Proj p);              // "+", "-", "a+", ...
std::optional<Proj> proj_from_code(const std::string& code);

struct Letter {
    std::string name;
    LetterKind kind = LetterKind::crossing;
    Proj proj = Proj::plus_one;
};

/// A concrete curve encoding: a sequence of letter occurrences where
/// every crossing letter occurs exactly twice and every cusp letter
/// exactly once. Value type; all operations build new words.
class EtaleWord {
public:
    /// Validates and constructs. `occurrences` holds indices into `letters`.
    static EtaleWord make(CurveClass cls, std::vector<Letter> letters,
                          std::vector<int> occurrences,
                          std::optional<long long> index_meta);

    static EtaleWord empty(CurveClass cls, std::optional<long long> index_meta);

    CurveClass curve_class() const { return cls_; }
    const std::vector<Letter>& letters() const { return letters_; }
    const std::vector<int>& occurrences() const { return occ_; }
    int length() const { return static_cast<int>(occ_.size()); }

    const Letter& letter_at(int pos) const { return letters_[occ_[pos]]; }

    /// Index: stored metadata for closed/front words, sum of crossing
    /// signs for long words.
    long long index() const;

    std::optional<long long> index_meta() const { return index_meta_; }

    int crossing_count() const;
    int cusp_count() const;

    /// Occurrence positions of letter id: two entries for crossings,
    /// one for cusps.
    std::vector<std::vector<int>> positions_by_letter() const;

    bool is_smooth() const { return cls_ != CurveClass::front; }

private:
    CurveClass cls_ = CurveClass::closed;
    std::vector<Letter> letters_;
    std::vector<int> occ_;
    std::optional<long long> index_meta_;
};

/// Renames letters to the canonical scheme (crossings A, B, ..., Z, AA, ...;
/// cusps K1, K2, ... in order of first occurrence).
EtaleWord canonicalize(const EtaleWord& w);

/// Key capturing the word up to letter renaming (class, index,
/// occurrence structure, kinds, projections).
std::string canonical_key(const EtaleWord& w);

inline bool isomorphic(const EtaleWord& a, const EtaleWord& b) {
    return canonical_key(a) == canonical_key(b);
}

/// Slides the base point past the first occurrence. Crossing first
/// letter: AxAy -> xA'yA' with |A'| = tau(|A|) (smooth) or tau1(|A|)
/// (front). Cusp first letter: Kxy -> xyK, projection kept.
EtaleWord base_point_move(const EtaleWord& w);

/// Reverses traversal: occurrence order reversed, tau applied to every
/// projection; index negates. Smooth words only.
EtaleWord reverse_orientation(const EtaleWord& w);

/// Mirror image: occurrence order kept, tau applied to every
/// projection; index negates. Smooth words only.
EtaleWord reflect(const EtaleWord& w);

}  // namespace nanoword
