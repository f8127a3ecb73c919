#include "nanoword/word_io.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace nanoword {

namespace {

struct Line {
    int no;
    std::vector<std::string> tokens;
};

std::vector<Line> significant_lines(const std::string& text) {
    std::vector<Line> out;
    std::istringstream in(text);
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        Line line{no, {}};
        std::string tok;
        while (ls >> tok) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
    }
    return out;
}

bool valid_name(const std::string& s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

}  // namespace

EtaleWord parse_word(const std::string& text) {
    auto lines = significant_lines(text);
    size_t cursor = 0;
    auto next_line = [&]() -> const Line& {
        if (cursor >= lines.size())
            throw ParseError(lines.empty() ? 1 : lines.back().no, "unexpected end of input");
        return lines[cursor++];
    };

    const Line& cls_line = next_line();
    if (cls_line.tokens.size() != 2 || cls_line.tokens[0] != "class")
        throw ParseError(cls_line.no, "expected 'class closed|long|front'");
    CurveClass cls;
    if (cls_line.tokens[1] == "closed") cls = CurveClass::closed;
    else if (cls_line.tokens[1] == "long") cls = CurveClass::long_curve;
    else if (cls_line.tokens[1] == "front") cls = CurveClass::front;
    else throw ParseError(cls_line.no, "unknown curve class '" + cls_line.tokens[1] + "'");

    std::optional<long long> index_meta;
    if (cls != CurveClass::long_curve) {
        const Line& idx_line = next_line();
        if (idx_line.tokens.size() != 2 || idx_line.tokens[0] != "index")
            throw ParseError(idx_line.no, "expected 'index <integer>' for this curve class");
        try {
            size_t used = 0;
            index_meta = std::stoll(idx_line.tokens[1], &used);
            if (used != idx_line.tokens[1].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(idx_line.no, "bad index '" + idx_line.tokens[1] + "'");
        }
    }

    const Line& word_line = next_line();
    if (word_line.tokens.empty() || word_line.tokens[0] != "word")
        throw ParseError(word_line.no,
                         cls == CurveClass::long_curve
                             ? "expected 'word ...' (long words carry no index header)"
                             : "expected 'word ...'");
    if (cursor != lines.size())
        throw ParseError(lines[cursor].no, "trailing content after word line");

    std::vector<Letter> letters;
    std::vector<int> occ;
    std::map<std::string, int> by_name;
    int lno = word_line.no;
    for (size_t t = 1; t < word_line.tokens.size(); ++t) {
        std::string tok = word_line.tokens[t];
        bool cusp = !tok.empty() && tok[0] == '^';
        if (cusp) tok.erase(0, 1);
        auto colon = tok.find(':');
        std::string name = colon == std::string::npos ? tok : tok.substr(0, colon);
        if (!valid_name(name)) throw ParseError(lno, "bad letter name '" + name + "'");
        std::optional<Proj> proj;
        if (colon != std::string::npos) {
            std::string code = tok.substr(colon + 1);
            proj = proj_from_code(code);
            if (!proj) throw ParseError(lno, "bad projection code '" + code + "'");
            if (is_front_proj(*proj) != (cls == CurveClass::front))
                throw ParseError(lno, "projection code '" + code +
                                          "' does not match curve class");
        }

        auto it = by_name.find(name);
        if (it == by_name.end()) {
            if (!proj)
                throw ParseError(lno, "first occurrence of '" + name + "' needs a code");
            Letter l{name, cusp ? LetterKind::cusp : LetterKind::crossing, *proj};
            by_name[name] = static_cast<int>(letters.size());
            occ.push_back(static_cast<int>(letters.size()));
            letters.push_back(std::move(l));
        } else {
            Letter& l = letters[it->second];
            if (cusp != (l.kind == LetterKind::cusp))
                throw ParseError(lno, "letter '" + name + "' used both with and without ^");
            if (proj && *proj != l.proj)
                throw ParseError(lno, "inconsistent projection codes for '" + name + "'");
            occ.push_back(it->second);
        }
    }

    try {
        return EtaleWord::make(cls, std::move(letters), std::move(occ), index_meta);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lno, e.what());
    }
}

std::string serialize_word(const EtaleWord& w) {
    EtaleWord c = canonicalize(w);
    std::string out;
    switch (c.curve_class()) {
        case CurveClass::closed: out = "class closed\n"; break;
        case CurveClass::long_curve: out = "class long\n"; break;
        case CurveClass::front: out = "class front\n"; break;
    }
    if (c.index_meta()) out += "index " + std::to_string(*c.index_meta()) + "\n";
    out += "word";
    std::vector<bool> seen(c.letters().size(), false);
    for (int id : c.occurrences()) {
        const Letter& l = c.letters()[id];
        out += ' ';
        if (!seen[id]) {
            seen[id] = true;
            if (l.kind == LetterKind::cusp) out += '^';
            out += l.name + ":" + proj_code(l.proj);
        } else {
            out += l.name;
        }
    }
    out += "\n";
    return out;
}

}  // namespace nanoword
