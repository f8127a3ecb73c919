#include "nanoword/pairing.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace nanoword {

namespace {

// Letters of one kind, ordered by first occurrence.
std::vector<int> letters_of_kind(const EtaleWord& w, LetterKind kind) {
    std::vector<int> ids;
    std::vector<bool> seen(w.letters().size(), false);
    for (int id : w.occurrences()) {
        if (!seen[id]) {
            seen[id] = true;
            if (w.letters()[id].kind == kind) ids.push_back(id);
        }
    }
    return ids;
}

// Restriction of the word to a letter subset, encoded like pattern_key:
// distinct letters renamed by first appearance. Also reports the distinct
// letters in that order.
std::string restriction_key(const EtaleWord& w, const std::vector<int>& chosen,
                            std::vector<int>& distinct) {
    distinct.clear();
    std::string digits;
    for (int id : w.occurrences()) {
        if (std::find(chosen.begin(), chosen.end(), id) == chosen.end()) continue;
        auto it = std::find(distinct.begin(), distinct.end(), id);
        size_t idx = it - distinct.begin();
        if (it == distinct.end()) distinct.push_back(id);
        digits += static_cast<char>('0' + idx);
    }
    std::string kinds;
    for (int id : distinct) {
        kinds += w.letters()[id].kind == LetterKind::cusp ? 'k' : 'x';
        kinds += '1';  // dimension placeholder; stripped before comparison
    }
    return digits + "|" + kinds;
}

// Key of a pattern with dimensions erased; matching ignores dimensions,
// they only enter the weight.
std::string dimless_key(const Pattern& canon) {
    std::string key;
    for (int id : canon.seq) key += static_cast<char>('0' + id);
    key += '|';
    for (const PatternRole& r : canon.roles) {
        key += r.kind == LetterKind::cusp ? 'k' : 'x';
        key += '1';
    }
    return key;
}

void combinations(int n, int k, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    while (true) {
        emit(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct CompiledGroup {
    int rc = 0, rk = 0;
    // dimless restriction key -> indices of patterns with that shape
    std::map<std::string, std::vector<int>> by_key;
};

RingElem weight_of(const EtaleWord& w, const std::vector<int>& distinct,
                   const Pattern& canon, PairingMode mode) {
    if (mode == PairingMode::sign) {
        int s = 1;
        for (size_t i = 0; i < distinct.size(); ++i)
            if (canon.roles[i].dim == 1) s *= sign_of(w.letters()[distinct[i]].proj);
        return RingElem(Rational(s));
    }
    RingElem prod = RingElem(Rational(1));
    for (size_t i = 0; i < distinct.size(); ++i) {
        RingElem r = rho(w.letters()[distinct[i]].proj);
        prod *= r;
        if (canon.roles[i].dim == 2) prod *= r;
    }
    return prod;
}

}  // namespace

std::vector<RingElem> pattern_weight_sums(const std::vector<Pattern>& patterns,
                                          const EtaleWord& w, PairingMode mode) {
    if (mode == PairingMode::rho && w.curve_class() != CurveClass::front)
        throw std::invalid_argument("rho pairing is defined on front words only");

    std::vector<Pattern> canon;
    canon.reserve(patterns.size());
    for (const Pattern& p : patterns) canon.push_back(canonical_pattern(p));

    std::map<std::pair<int, int>, CompiledGroup> groups;
    for (size_t i = 0; i < canon.size(); ++i) {
        auto sig = std::make_pair(canon[i].crossing_roles(), canon[i].cusp_roles());
        CompiledGroup& g = groups[sig];
        g.rc = sig.first;
        g.rk = sig.second;
        g.by_key[dimless_key(canon[i])].push_back(static_cast<int>(i));
    }

    std::vector<RingElem> sums(patterns.size());
    std::vector<int> crossings = letters_of_kind(w, LetterKind::crossing);
    std::vector<int> cusps = letters_of_kind(w, LetterKind::cusp);

    for (auto& [sig, group] : groups) {
        if (group.rc > static_cast<int>(crossings.size()) ||
            group.rk > static_cast<int>(cusps.size()))
            continue;
        std::vector<int> chosen, distinct;
        auto handle = [&]() {
            std::string key = restriction_key(w, chosen, distinct);
            auto it = group.by_key.find(key);
            if (it == group.by_key.end()) return;
            for (int pi : it->second)
                sums[pi] += weight_of(w, distinct, canon[pi], mode);
        };
        combinations(static_cast<int>(crossings.size()), group.rc,
                     [&](const std::vector<int>& ci) {
            chosen.clear();
            for (int i : ci) chosen.push_back(crossings[i]);
            if (group.rk == 0) {
                handle();
                return;
            }
            size_t base = chosen.size();
            combinations(static_cast<int>(cusps.size()), group.rk,
                         [&](const std::vector<int>& ki) {
                chosen.resize(base);
                for (int i : ki) chosen.push_back(cusps[i]);
                handle();
            });
        });
    }
    return sums;
}

std::vector<Match> find_matches(const Pattern& v, const EtaleWord& w) {
    Pattern canon = canonical_pattern(v);
    // Role id of the query for each canonical role index.
    std::vector<int> original_role(canon.roles.size());
    {
        std::vector<int> new_id(v.roles.size(), -1);
        int next = 0;
        for (int id : v.seq)
            if (new_id[id] < 0) {
                new_id[id] = next++;
            }
        for (size_t id = 0; id < v.roles.size(); ++id)
            if (new_id[id] >= 0) original_role[new_id[id]] = static_cast<int>(id);
    }

    std::string want = dimless_key(canon);
    std::vector<int> crossings = letters_of_kind(w, LetterKind::crossing);
    std::vector<int> cusps = letters_of_kind(w, LetterKind::cusp);
    int rc = canon.crossing_roles(), rk = canon.cusp_roles();

    std::vector<Match> out;
    if (rc > static_cast<int>(crossings.size()) || rk > static_cast<int>(cusps.size()))
        return out;

    std::vector<int> chosen, distinct;
    auto handle = [&]() {
        if (restriction_key(w, chosen, distinct) != want) return;
        Match m;
        m.role_to_letter.assign(v.roles.size(), -1);
        for (size_t i = 0; i < distinct.size(); ++i)
            m.role_to_letter[original_role[i]] = distinct[i];
        out.push_back(std::move(m));
    };
    combinations(static_cast<int>(crossings.size()), rc, [&](const std::vector<int>& ci) {
        chosen.clear();
        for (int i : ci) chosen.push_back(crossings[i]);
        if (rk == 0) {
            handle();
            return;
        }
        size_t base = chosen.size();
        combinations(static_cast<int>(cusps.size()), rk, [&](const std::vector<int>& ki) {
            chosen.resize(base);
            for (int i : ki) chosen.push_back(cusps[i]);
            handle();
        });
    });
    return out;
}

ParamExpr angle_bracket(const std::vector<std::pair<ParamExpr, Pattern>>& terms,
                        const EtaleWord& w, PairingMode mode) {
    std::vector<Pattern> pats;
    pats.reserve(terms.size());
    for (const auto& [coeff, pat] : terms) pats.push_back(pat);
    std::vector<RingElem> sums = pattern_weight_sums(pats, w, mode);
    ParamExpr total;
    for (size_t i = 0; i < terms.size(); ++i) total += expr_scale(sums[i], terms[i].first);
    return total;
}

CyclicClass cyclic_class(const Pattern& v, ClassFlavor flavor) {
    Pattern p = canonical_pattern(v);
    for (const PatternRole& r : p.roles) {
        if (flavor == ClassFlavor::plain && (r.kind == LetterKind::cusp || r.dim != 1))
            throw std::invalid_argument("plain classes take 1-dimensional crossing roles only");
        if (flavor == ClassFlavor::marked && r.kind == LetterKind::cusp)
            throw std::invalid_argument("marked classes take crossing roles only");
    }

    CyclicClass cls;
    cls.flavor = flavor;
    if (p.seq.empty()) return cls;

    std::map<std::string, int> sign_by_key;
    std::vector<std::pair<int, Pattern>> terms;
    Pattern cur = p;
    int sign = 1;
    for (int step = 0; step < static_cast<int>(p.seq.size()); ++step) {
        Pattern canon = canonical_pattern(cur);
        std::string key = pattern_key(canon);
        auto it = sign_by_key.find(key);
        if (it == sign_by_key.end()) {
            sign_by_key[key] = sign;
            terms.emplace_back(sign, canon);
        } else if (it->second != sign) {
            return cls;  // orbit identifies v with -v: zero class
        }
        const PatternRole& lead = cur.roles[cur.seq.front()];
        if (lead.kind == LetterKind::crossing && lead.dim == 1) sign = -sign;
        std::rotate(cur.seq.begin(), cur.seq.begin() + 1, cur.seq.end());
    }
    cls.terms = std::move(terms);
    return cls;
}

ParamExpr square_bracket(const CyclicClass& c, const EtaleWord& w, PairingMode mode) {
    std::vector<std::pair<ParamExpr, Pattern>> terms;
    terms.reserve(c.terms.size());
    for (const auto& [coeff, pat] : c.terms)
        terms.emplace_back(ParamExpr(Rational(coeff)), pat);
    return angle_bracket(terms, w, mode);
}

}  // namespace nanoword
