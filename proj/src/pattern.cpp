#include "nanoword/pattern.hpp"

#include <cctype>
#include <map>

namespace nanoword {

namespace {

void validate_counts(const Pattern& p) {
    std::vector<int> uses(p.roles.size(), 0);
    for (int id : p.seq) {
        if (id < 0 || id >= static_cast<int>(p.roles.size()))
            throw std::invalid_argument("pattern occurrence refers to unknown role");
        ++uses[id];
    }
    for (size_t i = 0; i < p.roles.size(); ++i) {
        int expect = p.roles[i].kind == LetterKind::crossing ? 2 : 1;
        if (uses[i] != expect)
            throw std::invalid_argument("pattern role occurs " + std::to_string(uses[i]) +
                                        " times, expected " + std::to_string(expect));
    }
}

}  // namespace

Pattern parse_pattern(const std::string& literal) {
    Pattern p;
    std::map<std::string, int> by_name;
    size_t i = 0;
    while (i < literal.size()) {
        char c = literal[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (!std::isupper(static_cast<unsigned char>(c)))
            throw std::invalid_argument("bad pattern literal near '" + literal.substr(i) + "'");
        std::string name(1, c);
        ++i;
        while (i < literal.size() && std::isdigit(static_cast<unsigned char>(literal[i])))
            name += literal[i++];
        bool dotted = i < literal.size() && literal[i] == '.';
        if (dotted) ++i;

        LetterKind kind = name[0] == 'K' ? LetterKind::cusp : LetterKind::crossing;
        auto it = by_name.find(name);
        int id;
        if (it == by_name.end()) {
            id = static_cast<int>(p.roles.size());
            by_name[name] = id;
            p.roles.push_back({kind, dotted ? 2 : 1});
        } else {
            id = it->second;
            if (dotted) p.roles[id].dim = 2;
        }
        p.seq.push_back(id);
    }
    validate_counts(p);
    return p;
}

Pattern canonical_pattern(const Pattern& p) {
    validate_counts(p);
    std::vector<int> new_id(p.roles.size(), -1);
    Pattern c;
    for (int id : p.seq) {
        if (new_id[id] < 0) {
            new_id[id] = static_cast<int>(c.roles.size());
            c.roles.push_back(p.roles[id]);
        }
        c.seq.push_back(new_id[id]);
    }
    return c;
}

std::string pattern_key(const Pattern& p) {
    Pattern c = canonical_pattern(p);
    std::string key;
    for (int id : c.seq) key += static_cast<char>('0' + id);
    key += '|';
    for (const PatternRole& r : c.roles) {
        key += r.kind == LetterKind::cusp ? 'k' : 'x';
        key += static_cast<char>('0' + r.dim);
    }
    return key;
}

std::string pattern_str(const Pattern& p) {
    Pattern c = canonical_pattern(p);
    static const char* crossing_names[] = {"X", "Y", "Z", "W", "V", "U", "T", "S"};
    std::vector<std::string> names(c.roles.size());
    int total_cusps = c.cusp_roles();
    int crossings = 0, cusps = 0;
    for (size_t i = 0; i < c.roles.size(); ++i) {
        if (c.roles[i].kind == LetterKind::crossing) {
            names[i] = crossings < 8 ? crossing_names[crossings] : "X" + std::to_string(crossings);
            ++crossings;
        } else {
            names[i] = total_cusps == 1 ? "K" : "K" + std::to_string(++cusps);
        }
    }
    std::string out;
    for (int id : c.seq) {
        out += names[id];
        if (c.roles[id].dim == 2) out += '.';
    }
    return out;
}

namespace {

// Extends a partial chord sequence; roles appear in first-occurrence order
// so every produced sequence is canonical and each isomorphism class shows
// up exactly once.
void extend(std::vector<int>& seq, std::vector<int>& open, int placed, int n,
            std::vector<Pattern>& out) {
    if (static_cast<int>(seq.size()) == 2 * n) {
        Pattern p;
        p.roles.assign(n, PatternRole{LetterKind::crossing, 1});
        p.seq = seq;
        out.push_back(std::move(p));
        return;
    }
    // Close an open role (all choices), or open the next fresh one.
    for (size_t i = 0; i < open.size(); ++i) {
        int id = open[i];
        open.erase(open.begin() + i);
        seq.push_back(id);
        extend(seq, open, placed, n, out);
        seq.pop_back();
        open.insert(open.begin() + i, id);
    }
    if (placed < n) {
        open.push_back(placed);
        seq.push_back(placed);
        extend(seq, open, placed + 1, n, out);
        seq.pop_back();
        open.pop_back();
    }
}

}  // namespace

std::vector<Pattern> enumerate_patterns(int n) {
    if (n < 0 || n > 6) throw std::invalid_argument("pattern enumeration supports 0 <= n <= 6");
    std::vector<Pattern> out;
    std::vector<int> seq, open;
    if (n == 0) {
        out.push_back(Pattern{});
        return out;
    }
    // First position always opens role 0.
    seq.push_back(0);
    open.push_back(0);
    extend(seq, open, 1, n, out);
    return out;
}

}  // namespace nanoword
