#include "nanoword/word.hpp"

#include <algorithm>
#include <map>

namespace nanoword {

RingElem rho(Proj p) {
    switch (p) {
        case Proj::a_plus: return RingElem::a_plus();
        case Proj::a_minus: return RingElem::a_minus();
        case Proj::b_plus: return -RingElem::a_plus();
        case Proj::b_minus: return -RingElem::a_minus();
        default: throw std::invalid_argument("rho: smooth projection");
    }
}

std::string proj_code(Proj p) {
    switch (p) {
        case Proj::minus_one: return "-";
        case Proj::plus_one: return "+";
        case Proj::a_plus: return "a+";
        case Proj::a_minus: return "a-";
        case Proj::b_plus: return "b+";
        case Proj::b_minus: return "b-";
    }
    return "?";
}

std::optional<Proj> proj_from_code(const std::string& code) {
    if (code == "+") return Proj::plus_one;
    if (code == "-") return Proj::minus_one;
    if (code == "a+") return Proj::a_plus;
    if (code == "a-") return Proj::a_minus;
    if (code == "b+") return Proj::b_plus;
    if (code == "b-") return Proj::b_minus;
    return std::nullopt;
}

EtaleWord EtaleWord::make(CurveClass cls, std::vector<Letter> letters,
                          std::vector<int> occurrences,
                          std::optional<long long> index_meta) {
    bool front = cls == CurveClass::front;
    if (cls == CurveClass::long_curve) {
        if (index_meta) throw std::invalid_argument("long words carry no index header");
    } else if (!index_meta) {
        throw std::invalid_argument("closed and front words require an index");
    }

    std::map<std::string, int> seen_names;
    std::vector<int> uses(letters.size(), 0);
    for (size_t i = 0; i < letters.size(); ++i) {
        const Letter& l = letters[i];
        if (l.name.empty()) throw std::invalid_argument("empty letter name");
        if (!seen_names.emplace(l.name, i).second)
            throw std::invalid_argument("duplicate letter name: " + l.name);
        if (l.kind == LetterKind::cusp && !front)
            throw std::invalid_argument("cusp letter in a non-front word: " + l.name);
        if (is_front_proj(l.proj) != front)
            throw std::invalid_argument("projection alphabet does not match curve class for " +
                                        l.name);
    }
    for (int id : occurrences) {
        if (id < 0 || id >= static_cast<int>(letters.size()))
            throw std::invalid_argument("occurrence refers to unknown letter");
        ++uses[id];
    }
    int cusps = 0;
    for (size_t i = 0; i < letters.size(); ++i) {
        int expect = letters[i].kind == LetterKind::crossing ? 2 : 1;
        if (uses[i] != expect)
            throw std::invalid_argument("letter " + letters[i].name + " occurs " +
                                        std::to_string(uses[i]) + " times, expected " +
                                        std::to_string(expect));
        if (letters[i].kind == LetterKind::cusp) ++cusps;
    }
    if (front && cusps % 2 != 0)
        throw std::invalid_argument("front words need an even number of cusps");

    EtaleWord w;
    w.cls_ = cls;
    w.letters_ = std::move(letters);
    w.occ_ = std::move(occurrences);
    w.index_meta_ = index_meta;
    return w;
}

EtaleWord EtaleWord::empty(CurveClass cls, std::optional<long long> index_meta) {
    return make(cls, {}, {}, index_meta);
}

long long EtaleWord::index() const {
    if (cls_ != CurveClass::long_curve) return *index_meta_;
    long long sum = 0;
    for (const Letter& l : letters_)
        if (l.kind == LetterKind::crossing) sum += sign_of(l.proj);
    return sum;
}

int EtaleWord::crossing_count() const {
    int n = 0;
    for (const Letter& l : letters_)
        if (l.kind == LetterKind::crossing) ++n;
    return n;
}

int EtaleWord::cusp_count() const {
    return static_cast<int>(letters_.size()) - crossing_count();
}

std::vector<std::vector<int>> EtaleWord::positions_by_letter() const {
    std::vector<std::vector<int>> pos(letters_.size());
    for (int p = 0; p < length(); ++p) pos[occ_[p]].push_back(p);
    return pos;
}

namespace {

std::string nth_crossing_name(int n) {
    // A..Z, then AA, AB, ... (bijective base 26).
    std::string s;
    ++n;
    while (n > 0) {
        --n;
        s.insert(s.begin(), static_cast<char>('A' + n % 26));
        n /= 26;
    }
    return s;
}

}  // namespace

EtaleWord canonicalize(const EtaleWord& w) {
    std::vector<int> order;  // letter ids in order of first occurrence
    std::vector<bool> seen(w.letters().size(), false);
    for (int id : w.occurrences()) {
        if (!seen[id]) {
            seen[id] = true;
            order.push_back(id);
        }
    }
    std::vector<int> new_id(w.letters().size(), -1);
    std::vector<Letter> letters;
    int crossings = 0, cusps = 0;
    for (int id : order) {
        Letter l = w.letters()[id];
        l.name = l.kind == LetterKind::crossing ? nth_crossing_name(crossings++)
                                                : "K" + std::to_string(++cusps);
        new_id[id] = static_cast<int>(letters.size());
        letters.push_back(std::move(l));
    }
    std::vector<int> occ;
    occ.reserve(w.occurrences().size());
    for (int id : w.occurrences()) occ.push_back(new_id[id]);
    return EtaleWord::make(w.curve_class(), std::move(letters), std::move(occ), w.index_meta());
}

std::string canonical_key(const EtaleWord& w) {
    EtaleWord c = canonicalize(w);
    std::string key;
    switch (w.curve_class()) {
        case CurveClass::closed: key = "closed;"; break;
        case CurveClass::long_curve: key = "long;"; break;
        case CurveClass::front: key = "front;"; break;
    }
    if (c.index_meta()) key += "i=" + std::to_string(*c.index_meta());
    key += ";";
    for (int id : c.occurrences()) {
        const Letter& l = c.letters()[id];
        key += std::to_string(id) + (l.kind == LetterKind::cusp ? "k" : "x") +
               proj_code(l.proj) + " ";
    }
    return key;
}

EtaleWord base_point_move(const EtaleWord& w) {
    if (w.curve_class() == CurveClass::long_curve)
        throw std::invalid_argument("long words have no base point to move");
    if (w.length() == 0) throw std::invalid_argument("base point move on empty word");

    std::vector<Letter> letters = w.letters();
    std::vector<int> occ = w.occurrences();
    int first = occ.front();
    occ.erase(occ.begin());
    occ.push_back(first);
    if (letters[first].kind == LetterKind::crossing) {
        // AxAy -> xA'yA': the inner occurrence stays put, the moved one
        // goes to the end, and the type flips.
        letters[first].proj = w.curve_class() == CurveClass::front
                                  ? tau1(letters[first].proj)
                                  : tau(letters[first].proj);
    }
    // Cusp case Kxy -> xyK keeps the projection.
    return EtaleWord::make(w.curve_class(), std::move(letters), std::move(occ), w.index_meta());
}

EtaleWord reverse_orientation(const EtaleWord& w) {
    if (!w.is_smooth())
        throw std::invalid_argument("orientation reversal is defined for smooth words only");
    std::vector<Letter> letters = w.letters();
    for (Letter& l : letters) l.proj = tau(l.proj);
    std::vector<int> occ(w.occurrences().rbegin(), w.occurrences().rend());
    std::optional<long long> idx = w.index_meta();
    if (idx) idx = -*idx;
    return EtaleWord::make(w.curve_class(), std::move(letters), std::move(occ), idx);
}

EtaleWord reflect(const EtaleWord& w) {
    if (!w.is_smooth())
        throw std::invalid_argument("reflection is defined for smooth words only");
    std::vector<Letter> letters = w.letters();
    for (Letter& l : letters) l.proj = tau(l.proj);
    std::optional<long long> idx = w.index_meta();
    if (idx) idx = -*idx;
    return EtaleWord::make(w.curve_class(), std::move(letters), w.occurrences(), idx);
}

}  // namespace nanoword
