#include "nanoword/moves.hpp"

#include <algorithm>
#include <random>

#include "nanoword/genus.hpp"

namespace nanoword {

std::string move_kind_name(MoveKind k) {
    switch (k) {
        case MoveKind::II_plus: return "II+";
        case MoveKind::II_minus: return "II-";
        case MoveKind::III: return "III";
        case MoveKind::SII_plus: return "SII+";
        case MoveKind::SII_minus: return "SII-";
        case MoveKind::DII_plus: return "DII+";
        case MoveKind::DII_minus: return "DII-";
        case MoveKind::PI_plus: return "PI+";
        case MoveKind::PI_minus: return "PI-";
        case MoveKind::LAMBDA: return "LAMBDA";
    }
    return "?";
}

std::optional<MoveKind> move_kind_from_name(const std::string& s) {
    for (MoveKind k : {MoveKind::II_plus, MoveKind::II_minus, MoveKind::III, MoveKind::SII_plus,
                       MoveKind::SII_minus, MoveKind::DII_plus, MoveKind::DII_minus,
                       MoveKind::PI_plus, MoveKind::PI_minus, MoveKind::LAMBDA})
        if (move_kind_name(k) == s) return k;
    return std::nullopt;
}

std::string MoveSite::describe() const {
    std::string s = move_kind_name(kind);
    s += dir == MoveDir::positive ? "/+" : "/-";
    if (kind == MoveKind::III) {
        s += " swap pairs at (";
        for (size_t i = 0; i < remove_pos.size(); ++i)
            s += (i ? "," : "") + std::to_string(remove_pos[i]);
        s += ")";
        return s;
    }
    if (creates) {
        s += " insert at gaps (" + std::to_string(gap1) + "," + std::to_string(gap2) + ")";
        if (cusp_pos >= 0) s += " cusp@" + std::to_string(cusp_pos);
    } else {
        s += " remove positions (";
        for (size_t i = 0; i < remove_pos.size(); ++i)
            s += (i ? "," : "") + std::to_string(remove_pos[i]);
        s += ")";
        if (cusp_pos >= 0 && kind != MoveKind::LAMBDA) s += " cusp@" + std::to_string(cusp_pos);
    }
    if (variant) s += " v" + std::to_string(variant);
    s += " [";
    for (size_t i = 0; i < projs.size(); ++i) s += (i ? " " : "") + proj_code(projs[i]);
    s += "]";
    return s;
}

namespace {

bool smooth_kind(MoveKind k) {
    return k == MoveKind::II_plus || k == MoveKind::II_minus || k == MoveKind::III;
}

bool kind_matches_class(MoveKind k, CurveClass cls) {
    if (k == MoveKind::III) return true;
    return smooth_kind(k) == (cls != CurveClass::front);
}

// Interleaved insertions write AB...AB, nested ones AB...BA.
enum class Shape { interleaved, nested };

struct IIKindSpec {
    Shape shape;
    bool create_on_positive;
    int subscript = 0;  // front kinds: required subscript of the pair; 0 = smooth
};

std::optional<IIKindSpec> ii_spec(MoveKind k) {
    switch (k) {
        case MoveKind::II_plus: return IIKindSpec{Shape::interleaved, true, 0};
        case MoveKind::II_minus: return IIKindSpec{Shape::nested, true, 0};
        // The S/D split of the front tangency moves: the dangerous moves
        // shift J+ (positive-subscript pairs when creating, negative when
        // deleting), the safe ones shift J-. These pairings are the only
        // ones consistent with the jump table.
        case MoveKind::DII_plus: return IIKindSpec{Shape::interleaved, true, +1};
        case MoveKind::SII_plus: return IIKindSpec{Shape::interleaved, false, -1};
        case MoveKind::SII_minus: return IIKindSpec{Shape::nested, true, +1};
        case MoveKind::DII_minus: return IIKindSpec{Shape::nested, false, -1};
        default: return std::nullopt;
    }
}

std::vector<Proj> pair_choices_smooth() { return {Proj::plus_one, Proj::minus_one}; }

std::vector<Proj> pair_choices_front(int subscript) {
    if (subscript > 0) return {Proj::a_plus, Proj::b_plus};
    return {Proj::a_minus, Proj::b_minus};
}

Proj partner(const EtaleWord& w, Proj a) {
    return w.curve_class() == CurveClass::front ? tau1(a) : tau(a);
}

bool is_crossing_at(const EtaleWord& w, int pos) {
    return w.letter_at(pos).kind == LetterKind::crossing;
}

// Projections with the given sign on the front alphabet.
std::vector<Proj> front_with_sign(int sign) {
    if (sign < 0) return {Proj::a_plus, Proj::a_minus};
    return {Proj::b_plus, Proj::b_minus};
}

void enumerate_ii(const EtaleWord& w, MoveKind kind, MoveDir dir, const IIKindSpec& spec,
                  std::vector<MoveSite>& out) {
    bool create = spec.create_on_positive == (dir == MoveDir::positive);
    int L = w.length();
    if (create) {
        std::vector<Proj> choices = spec.subscript == 0 ? pair_choices_smooth()
                                                        : pair_choices_front(spec.subscript);
        for (int g1 = 0; g1 <= L; ++g1)
            for (int g2 = g1; g2 <= L; ++g2)
                for (Proj a : choices) {
                    MoveSite s;
                    s.kind = kind;
                    s.dir = dir;
                    s.creates = true;
                    s.gap1 = g1;
                    s.gap2 = g2;
                    s.projs = {a, partner(w, a)};
                    out.push_back(std::move(s));
                }
        return;
    }
    // Deletion: two disjoint adjacent factors holding the pair.
    for (int i = 0; i + 1 < L; ++i) {
        for (int j = i + 2; j + 1 < L; ++j) {
            int a = w.occurrences()[i], b = w.occurrences()[i + 1];
            if (a == b) continue;
            bool match = spec.shape == Shape::interleaved
                             ? w.occurrences()[j] == a && w.occurrences()[j + 1] == b
                             : w.occurrences()[j] == b && w.occurrences()[j + 1] == a;
            if (!match) continue;
            if (!is_crossing_at(w, i) || !is_crossing_at(w, i + 1)) continue;
            Proj pa = w.letters()[a].proj, pb = w.letters()[b].proj;
            if (partner(w, pa) != pb) continue;
            if (spec.subscript != 0 && subscript_of(pa) != spec.subscript) continue;
            MoveSite s;
            s.kind = kind;
            s.dir = dir;
            s.creates = false;
            s.remove_pos = {i, i + 1, j, j + 1};
            s.projs = {pa, pb};
            out.push_back(std::move(s));
        }
    }
}

bool iii_signs_ok(const EtaleWord& w, int a, int b, int c) {
    Proj pa = w.letters()[a].proj, pb = w.letters()[b].proj, pc = w.letters()[c].proj;
    if (w.curve_class() == CurveClass::front) {
        // All three types in the same letter class (a or b), any subscripts.
        return sign_of(pa) == sign_of(pb) && sign_of(pb) == sign_of(pc);
    }
    return pa == pb && pb == pc;
}

void enumerate_iii(const EtaleWord& w, MoveDir dir, std::vector<MoveSite>& out) {
    int L = w.length();
    const std::vector<int>& occ = w.occurrences();
    for (int i = 0; i + 1 < L; ++i)
        for (int j = i + 2; j + 1 < L; ++j)
            for (int k = j + 2; k + 1 < L; ++k) {
                int a, b, c;
                if (dir == MoveDir::positive) {
                    // xAByACzBCt: A at i,j; B at i+1,k; C at j+1,k+1.
                    a = occ[i];
                    b = occ[i + 1];
                    c = occ[j + 1];
                    if (occ[j] != a || occ[k] != b || occ[k + 1] != c) continue;
                } else {
                    // xBAyCAzCBt: A at i+1,j+1; B at i,k+1; C at j,k.
                    a = occ[i + 1];
                    b = occ[i];
                    c = occ[j];
                    if (occ[j + 1] != a || occ[k] != c || occ[k + 1] != b) continue;
                }
                if (a == b || a == c || b == c) continue;
                if (!is_crossing_at(w, i) || !is_crossing_at(w, i + 1) ||
                    !is_crossing_at(w, j + 1))
                    continue;
                if (!iii_signs_ok(w, a, b, c)) continue;
                MoveSite s;
                s.kind = MoveKind::III;
                s.dir = dir;
                s.creates = false;
                s.remove_pos = {i, j, k};  // pair starts; applying swaps each pair
                s.projs = {w.letters()[a].proj, w.letters()[b].proj, w.letters()[c].proj};
                out.push_back(std::move(s));
            }
}

// PI creation: a new pair crossing over a cusp. Interleaved (PI+) with
// sign(A) = sign(K) when the cusp sits in the first factor and
// sign(A) = -sign(K) when in the second; nested (PI-) with the outer
// letter's sign opposite the cusp's. These sign pairings are forced by
// the jump table, like the S/D split above.
void enumerate_pi_create(const EtaleWord& w, MoveKind kind, MoveDir dir,
                         std::vector<MoveSite>& out) {
    bool interleaved = kind == MoveKind::PI_plus;
    int L = w.length();
    for (int pos = 0; pos < L; ++pos) {
        if (w.letter_at(pos).kind != LetterKind::cusp) continue;
        int ksign = sign_of(w.letter_at(pos).proj);
        for (int variant : {1, 2}) {
            int asign = interleaved ? (variant == 1 ? ksign : -ksign) : -ksign;
            for (Proj a : front_with_sign(asign)) {
                int lo = variant == 1 ? pos + 1 : 0;
                int hi = variant == 1 ? L : pos;
                for (int g = lo; g <= hi; ++g) {
                    MoveSite s;
                    s.kind = kind;
                    s.dir = dir;
                    s.creates = true;
                    s.cusp_pos = pos;
                    s.variant = variant;
                    s.gap1 = g;
                    s.gap2 = g;
                    s.projs = {a, tau2(a)};
                    out.push_back(std::move(s));
                }
            }
        }
    }
}

void enumerate_pi_delete(const EtaleWord& w, MoveKind kind, MoveDir dir,
                         std::vector<MoveSite>& out) {
    bool interleaved = kind == MoveKind::PI_plus;
    int L = w.length();
    const std::vector<int>& occ = w.occurrences();
    auto consider = [&](int variant, int p, int q, int cusp, int a_first, int b_first,
                        std::vector<int> remove) {
        // a_first/b_first: positions of A and B inside the factor holding the
        // cusp (used for the sign conditions); p/q kept for readability.
        (void)p;
        (void)q;
        int a = occ[a_first];
        int b = occ[b_first];
        if (a == b) return;
        if (w.letters()[a].kind != LetterKind::crossing ||
            w.letters()[b].kind != LetterKind::crossing)
            return;
        Proj pa = w.letters()[a].proj, pb = w.letters()[b].proj;
        if (tau2(pa) != pb) return;
        int ksign = sign_of(w.letter_at(cusp).proj);
        int asign = sign_of(pa);
        if (interleaved) {
            if (variant == 1 && asign != ksign) return;
            if (variant == 2 && asign != -ksign) return;
        } else {
            if (asign != -ksign) return;
        }
        MoveSite s;
        s.kind = kind;
        s.dir = dir;
        s.creates = false;
        s.cusp_pos = cusp;
        s.variant = variant;
        s.remove_pos = std::move(remove);
        s.projs = {pa, pb};
        out.push_back(std::move(s));
    };
    for (int p = 0; p + 2 < L; ++p) {
        // Factor A K B at p..p+2.
        if (w.letter_at(p + 1).kind == LetterKind::cusp && is_crossing_at(w, p) &&
            is_crossing_at(w, p + 2)) {
            int a = occ[p], b = occ[p + 2];
            for (int q = p + 3; q + 1 < L; ++q) {
                if (interleaved) {
                    // xAKByABz
                    if (occ[q] == a && occ[q + 1] == b)
                        consider(1, p, q, p + 1, p, p + 2, {p, p + 2, q, q + 1});
                } else {
                    // xAKByBAz
                    if (occ[q] == b && occ[q + 1] == a)
                        consider(1, p, q, p + 1, p, p + 2, {p, p + 2, q, q + 1});
                }
            }
        }
    }
    // Second-factor variants: AB ... AKB (PI+) and AB ... BKA (PI-).
    for (int p = 0; p + 1 < L; ++p) {
        if (!is_crossing_at(w, p) || !is_crossing_at(w, p + 1)) continue;
        int first = occ[p], second = occ[p + 1];
        for (int q = p + 2; q + 2 < L; ++q) {
            if (w.letter_at(q + 1).kind != LetterKind::cusp) continue;
            if (interleaved) {
                // A at p and q, B at p+1 and q+2.
                if (occ[q] == first && occ[q + 2] == second)
                    consider(2, p, q, q + 1, q, q + 2, {p, p + 1, q, q + 2});
            } else {
                // xAByBKAz: A at p and q+2, B at p+1 and q.
                if (occ[q] == second && occ[q + 2] == first)
                    consider(2, p, q, q + 1, q + 2, q, {p, p + 1, q, q + 2});
            }
        }
    }
}

// LAMBDA creation: a kink carrying a fresh cusp pair, xy -> xAK1K2Ay.
// The cusps keep opposite subscripts in one letter class and the crossing
// takes the positive subscript of the other class; anything else breaks
// the jump table.
void enumerate_lambda(const EtaleWord& w, MoveDir dir, std::vector<MoveSite>& out) {
    int L = w.length();
    if (dir == MoveDir::positive) {
        for (int g = 0; g <= L; ++g)
            for (Proj k1 : {Proj::a_plus, Proj::a_minus, Proj::b_plus, Proj::b_minus}) {
                Proj k2 = tau1(tau2(k1));  // subscript flip, same letter class
                Proj a = sign_of(k1) < 0 ? Proj::b_plus : Proj::a_plus;
                MoveSite s;
                s.kind = MoveKind::LAMBDA;
                s.dir = dir;
                s.creates = true;
                s.gap1 = g;
                s.gap2 = g;
                s.projs = {a, k1, k2};
                out.push_back(std::move(s));
            }
        return;
    }
    const std::vector<int>& occ = w.occurrences();
    for (int p = 0; p + 3 < L; ++p) {
        if (occ[p] != occ[p + 3]) continue;
        if (!is_crossing_at(w, p)) continue;
        if (w.letter_at(p + 1).kind != LetterKind::cusp ||
            w.letter_at(p + 2).kind != LetterKind::cusp)
            continue;
        Proj a = w.letter_at(p).proj;
        Proj k1 = w.letter_at(p + 1).proj, k2 = w.letter_at(p + 2).proj;
        if (tau1(tau2(k1)) != k2) continue;
        if (sign_of(k1) == sign_of(a)) continue;
        if (subscript_of(a) != +1) continue;
        MoveSite s;
        s.kind = MoveKind::LAMBDA;
        s.dir = dir;
        s.creates = false;
        s.cusp_pos = p;
        s.remove_pos = {p, p + 1, p + 2, p + 3};
        s.projs = {a, k1, k2};
        out.push_back(std::move(s));
    }
}

std::string fresh_name(const std::vector<Letter>& letters, const std::string& base) {
    std::string name = base;
    int suffix = 0;
    auto taken = [&letters](const std::string& n) {
        for (const Letter& l : letters)
            if (l.name == n) return true;
        return false;
    };
    while (taken(name)) name = base + std::to_string(++suffix);
    return name;
}

}  // namespace

std::vector<MoveSite> enumerate_sites(const EtaleWord& w, MoveKind kind, MoveDir dir) {
    std::vector<MoveSite> out;
    if (!kind_matches_class(kind, w.curve_class())) return out;
    if (kind == MoveKind::III && w.curve_class() == CurveClass::front) {
        enumerate_iii(w, dir, out);
        return out;
    }
    if (auto spec = ii_spec(kind)) {
        enumerate_ii(w, kind, dir, *spec, out);
        return out;
    }
    switch (kind) {
        case MoveKind::III: enumerate_iii(w, dir, out); break;
        case MoveKind::PI_plus:
        case MoveKind::PI_minus:
            if (dir == MoveDir::positive)
                enumerate_pi_create(w, kind, dir, out);
            else
                enumerate_pi_delete(w, kind, dir, out);
            break;
        case MoveKind::LAMBDA: enumerate_lambda(w, dir, out); break;
        default: break;
    }
    return out;
}

namespace {

EtaleWord build_from(const EtaleWord& w, std::vector<Letter> letters, std::vector<int> occ) {
    return canonicalize(
        EtaleWord::make(w.curve_class(), std::move(letters), std::move(occ), w.index_meta()));
}

EtaleWord apply_deletion(const EtaleWord& w, const MoveSite& site) {
    std::vector<int> occ = w.occurrences();
    std::vector<int> remove = site.remove_pos;
    std::sort(remove.begin(), remove.end());
    for (auto it = remove.rbegin(); it != remove.rend(); ++it) {
        if (*it < 0 || *it >= static_cast<int>(occ.size()))
            throw std::invalid_argument("stale move site");
        occ.erase(occ.begin() + *it);
    }
    // Drop letters that no longer occur; remap ids.
    std::vector<int> uses(w.letters().size(), 0);
    for (int id : occ) ++uses[id];
    std::vector<Letter> letters;
    std::vector<int> remap(w.letters().size(), -1);
    for (size_t id = 0; id < w.letters().size(); ++id)
        if (uses[id] > 0) {
            remap[id] = static_cast<int>(letters.size());
            letters.push_back(w.letters()[id]);
        }
    for (int& id : occ) id = remap[id];
    return build_from(w, std::move(letters), std::move(occ));
}

}  // namespace

EtaleWord apply_move(const EtaleWord& w, const MoveSite& site) {
    if (!kind_matches_class(site.kind, w.curve_class()))
        throw std::invalid_argument("move kind does not match curve class");

    // Re-derive the sites and require the given one among them; a site from
    // a previous word state must not be applied silently.
    {
        bool found = false;
        for (const MoveSite& s : enumerate_sites(w, site.kind, site.dir)) {
            if (s.creates == site.creates && s.gap1 == site.gap1 && s.gap2 == site.gap2 &&
                s.cusp_pos == site.cusp_pos && s.variant == site.variant &&
                s.remove_pos == site.remove_pos && s.projs == site.projs) {
                found = true;
                break;
            }
        }
        if (!found) throw std::invalid_argument("stale move site");
    }

    if (site.kind == MoveKind::III) {
        std::vector<int> occ = w.occurrences();
        for (int start : site.remove_pos) std::swap(occ[start], occ[start + 1]);
        return build_from(w, w.letters(), std::move(occ));
    }

    if (!site.creates) return apply_deletion(w, site);

    std::vector<Letter> letters = w.letters();
    std::vector<int> occ = w.occurrences();

    if (site.kind == MoveKind::LAMBDA) {
        int a = static_cast<int>(letters.size());
        letters.push_back({fresh_name(letters, "N"), LetterKind::crossing, site.projs[0]});
        int k1 = static_cast<int>(letters.size());
        letters.push_back({fresh_name(letters, "NK"), LetterKind::cusp, site.projs[1]});
        int k2 = static_cast<int>(letters.size());
        letters.push_back({fresh_name(letters, "NL"), LetterKind::cusp, site.projs[2]});
        occ.insert(occ.begin() + site.gap1, {a, k1, k2, a});
        return build_from(w, std::move(letters), std::move(occ));
    }

    int a = static_cast<int>(letters.size());
    letters.push_back({fresh_name(letters, "N"), LetterKind::crossing, site.projs[0]});
    int b = static_cast<int>(letters.size());
    letters.push_back({fresh_name(letters, "M"), LetterKind::crossing, site.projs[1]});

    if (site.kind == MoveKind::PI_plus || site.kind == MoveKind::PI_minus) {
        bool interleaved = site.kind == MoveKind::PI_plus;
        int pos = site.cusp_pos;
        int g = site.gap1;
        if (site.variant == 1) {
            // Cusp factor first: AKB ... AB (PI+) or AKB ... BA (PI-).
            std::vector<int> tail = interleaved ? std::vector<int>{a, b}
                                                : std::vector<int>{b, a};
            occ.insert(occ.begin() + g, tail.begin(), tail.end());
            occ.insert(occ.begin() + pos + 1, b);
            occ.insert(occ.begin() + pos, a);
        } else {
            // Pair factor first: AB ... AKB (PI+) or AB ... BKA (PI-).
            occ.insert(occ.begin() + pos + 1, interleaved ? b : a);
            occ.insert(occ.begin() + pos, interleaved ? a : b);
            occ.insert(occ.begin() + g, {a, b});
        }
        return build_from(w, std::move(letters), std::move(occ));
    }

    auto spec = ii_spec(site.kind);
    // Insert the later factor first so the earlier gap stays valid.
    std::vector<int> second = spec->shape == Shape::interleaved ? std::vector<int>{a, b}
                                                                : std::vector<int>{b, a};
    occ.insert(occ.begin() + site.gap2, second.begin(), second.end());
    occ.insert(occ.begin() + site.gap1, {a, b});
    return build_from(w, std::move(letters), std::move(occ));
}

Rational expected_delta(MoveKind kind, MoveDir dir, BasicInvariant inv, CurveClass cls) {
    Rational d(0);
    if (cls == CurveClass::front) {
        if (inv == BasicInvariant::j_plus &&
            (kind == MoveKind::DII_plus || kind == MoveKind::DII_minus))
            d = Rational(2);
        if (inv == BasicInvariant::j_minus &&
            (kind == MoveKind::SII_plus || kind == MoveKind::SII_minus))
            d = Rational(-2);
        if (inv == BasicInvariant::st) {
            if (kind == MoveKind::III) d = Rational(1);
            if (kind == MoveKind::PI_plus) d = Rational::of(1, 2);
            if (kind == MoveKind::PI_minus) d = Rational::of(-1, 2);
        }
    } else {
        if (inv == BasicInvariant::j_plus && kind == MoveKind::II_plus) d = Rational(2);
        if (inv == BasicInvariant::j_minus && kind == MoveKind::II_minus) d = Rational(-2);
        if (inv == BasicInvariant::st && kind == MoveKind::III) d = Rational(1);
    }
    return dir == MoveDir::positive ? d : -d;
}

bool walk_admissible(const EtaleWord& w) { return genus(w) == 0; }

bool rho_consistent(const EtaleWord& w) {
    if (w.curve_class() != CurveClass::front) return true;
    auto pos = w.positions_by_letter();
    for (size_t a = 0; a < w.letters().size(); ++a) {
        if (w.letters()[a].kind != LetterKind::crossing) continue;
        int p = pos[a][0], q = pos[a][1];
        RingElem sum;
        for (size_t b = 0; b < w.letters().size(); ++b) {
            if (b == a || w.letters()[b].kind != LetterKind::crossing) continue;
            int b1 = pos[b][0], b2 = pos[b][1];
            bool first_inside = b1 > p && b1 < q;
            bool second_inside = b2 > p && b2 < q;
            if (first_inside && !second_inside)
                sum += rho(w.letters()[b].proj);
            else if (!first_inside && second_inside)
                sum -= rho(w.letters()[b].proj);
        }
        if (!sum.is_zero()) return false;
    }
    return true;
}

namespace {

std::vector<MoveKind> kinds_for_class(CurveClass cls) {
    if (cls == CurveClass::front)
        return {MoveKind::SII_plus, MoveKind::SII_minus, MoveKind::DII_plus, MoveKind::DII_minus,
                MoveKind::III,      MoveKind::PI_plus,   MoveKind::PI_minus, MoveKind::LAMBDA};
    return {MoveKind::II_plus, MoveKind::II_minus, MoveKind::III};
}

// Sites that do not grow the word (deletions and the length-neutral III).
bool non_growing(const MoveSite& s) { return !s.creates; }

}  // namespace

Trajectory random_walk(const EtaleWord& start, int steps, std::uint64_t seed,
                       const WalkOptions& options) {
    Trajectory traj;
    traj.start = canonicalize(start);
    traj.seed = seed;
    auto admissible = [&options](const EtaleWord& w) {
        return walk_admissible(w) && (!options.require_rho_consistency || rho_consistent(w));
    };
    if (!admissible(traj.start))
        throw std::invalid_argument("random walk must start from a realizable word");

    std::mt19937_64 rng(seed);
    auto pick = [&rng](size_t n) { return static_cast<size_t>(rng() % n); };

    std::vector<MoveKind> kinds = kinds_for_class(start.curve_class());
    std::vector<int> weights;
    int total_weight = 0;
    for (MoveKind k : kinds) {
        auto it = options.kind_weights.find(k);
        weights.push_back(it == options.kind_weights.end() ? 1 : it->second);
        total_weight += weights.back();
    }
    if (total_weight == 0) throw std::invalid_argument("all kind weights are zero");

    EtaleWord cur = traj.start;
    for (int step = 0; step < steps; ++step) {
        bool moved = false;
        bool over_cap = cur.length() >= options.length_soft_cap;
        // Over the cap, spend a first pass on non-growing sites only; the
        // second pass (and the only pass otherwise) considers everything.
        for (int pass = over_cap ? 0 : 1; pass < 2 && !moved; ++pass) {
            // Weighted sampling of (kind, direction) combos without
            // replacement, so the walk only stalls when nothing applies.
            struct Combo {
                MoveKind kind;
                MoveDir dir;
                int weight;
            };
            std::vector<Combo> combos;
            for (size_t i = 0; i < kinds.size(); ++i)
                for (MoveDir dir : {MoveDir::positive, MoveDir::negative})
                    if (weights[i] > 0) combos.push_back({kinds[i], dir, weights[i]});
            int remaining = 0;
            for (const Combo& c : combos) remaining += c.weight;
            while (!combos.empty() && !moved) {
                int roll = static_cast<int>(rng() % remaining);
                size_t chosen = combos.size() - 1;
                for (size_t i = 0; i < combos.size(); ++i) {
                    roll -= combos[i].weight;
                    if (roll < 0) {
                        chosen = i;
                        break;
                    }
                }
                Combo combo = combos[chosen];
                combos.erase(combos.begin() + chosen);
                remaining -= combo.weight;

                std::vector<MoveSite> sites = enumerate_sites(cur, combo.kind, combo.dir);
                if (pass == 0)
                    std::erase_if(sites, [](const MoveSite& s) { return !non_growing(s); });
                while (!sites.empty() && !moved) {
                    size_t i = pick(sites.size());
                    MoveSite site = sites[i];
                    sites.erase(sites.begin() + i);
                    EtaleWord next = apply_move(cur, site);
                    if (!admissible(next)) continue;
                    traj.steps.push_back({std::move(site), next});
                    cur = std::move(next);
                    moved = true;
                }
            }
        }
        if (!moved) {
            traj.truncated_reason = "no admissible site at step " + std::to_string(step);
            break;
        }
    }
    return traj;
}

}  // namespace nanoword
