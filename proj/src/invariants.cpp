#include "nanoword/invariants.hpp"

#include <map>
#include <stdexcept>

namespace nanoword {

CountSummary counts(const EtaleWord& w) {
    CountSummary s;
    for (const Letter& l : w.letters()) {
        if (l.kind == LetterKind::crossing) {
            ++s.n;
            if (is_front_proj(l.proj)) (subscript_of(l.proj) > 0 ? s.n_plus : s.n_minus)++;
        } else {
            ++s.c;  // counted in cusp units below
            s.mu += subscript_of(l.proj);
        }
    }
    s.c /= 2;
    s.i = w.index();
    return s;
}

namespace {

Rational half() { return Rational::of(1, 2); }

void add_patterns(InvariantPreset& p, const std::string& param, const std::string& literal,
                  Rational mult = Rational(1)) {
    p.patterns.push_back({param, std::move(mult), parse_pattern(literal)});
}

void add_class(InvariantPreset& p, const std::string& param, const std::string& literal,
               ClassFlavor flavor) {
    CyclicClass cls = cyclic_class(parse_pattern(literal), flavor);
    for (const auto& [coeff, pat] : cls.terms)
        p.patterns.push_back({param, Rational(coeff), pat});
}

InvariantPreset make_ci2() {
    InvariantPreset p{"CI2", CurveClass::closed, {"s", "t", "u"}, PairingMode::sign, {}, {}};
    p.scalars = {{"s", Rational(1), CountKind::n},
                 {"t", half(), CountKind::one},
                 {"t", -half(), CountKind::i_squared}};
    add_patterns(p, "t", "XXYY");
    add_patterns(p, "t", "XYYX", Rational(-1));
    add_patterns(p, "u", "XYXY");
    return p;
}

InvariantPreset make_ci3() {
    InvariantPreset p{"CI3", CurveClass::closed, {"s", "t"}, PairingMode::sign, {}, {}};
    p.scalars = {{"", Rational(1), CountKind::i}};
    add_class(p, "s", "XYXYZZ", ClassFlavor::plain);
    add_class(p, "t", "XXYYZZ", ClassFlavor::plain);
    return p;
}

InvariantPreset make_gci3() {
    InvariantPreset p = make_ci3();
    p.name = "GCI3";
    p.params = {"s", "t", "u"};
    add_class(p, "u", "X.X.YY", ClassFlavor::marked);
    return p;
}

InvariantPreset make_li2() {
    InvariantPreset p{"LI2", CurveClass::long_curve, {"s", "t", "u", "v"}, PairingMode::sign,
                      {}, {}};
    p.scalars = {{"s", Rational(1), CountKind::n}, {"t", -half(), CountKind::i_squared}};
    add_patterns(p, "t", "XXYY");
    add_patterns(p, "u", "XYYX");
    add_patterns(p, "v", "XYXY");
    return p;
}

const std::array<const char*, 15> kDegree3Patterns = {
    "XYXYZZ", "XYXZZY", "XYZZXY", "XYYZXZ", "XXYZYZ",
    "XYZYZX", "XYYXZZ", "XXYZZY", "XYZZYX", "XYZYXZ",
    "XYXZYZ", "XYZXZY", "XYZXYZ", "XXYYZZ", "XYYZZX"};

const std::array<const char*, 6> kDegree3Dotted = {
    "X.X.YY", "X.YYX.", "XXY.Y.", "XY.Y.X", "XY.XY.", "X.YX.Y"};

InvariantPreset make_li3() {
    InvariantPreset p{"LI3", CurveClass::long_curve, {}, PairingMode::sign, {}, {}};
    p.scalars = {{"", Rational(1), CountKind::i}};
    for (int k = 0; k < 15; ++k) {
        std::string name = "x" + std::to_string(k + 1);
        p.params.push_back(name);
        add_patterns(p, name, kDegree3Patterns[k]);
    }
    return p;
}

InvariantPreset make_gli3() {
    InvariantPreset p = make_li3();
    p.name = "GLI3";
    for (int k = 0; k < 6; ++k) {
        std::string name = "x" + std::to_string(k + 16);
        p.params.push_back(name);
        add_patterns(p, name, kDegree3Dotted[k]);
    }
    return p;
}

void add_fi2_shape(InvariantPreset& p, const char* np, const char* nm, const char* r,
                   const char* s, const char* t, const char* u, const char* c) {
    p.scalars = {{np, Rational(1), CountKind::n_plus},
                 {nm, Rational(1), CountKind::n_minus},
                 {c, Rational(1), CountKind::c},
                 {r, half(), CountKind::one},
                 {r, -half(), CountKind::i_squared}};
    add_patterns(p, r, "XXYY");
    add_patterns(p, r, "XYYX", Rational(-1));
    add_patterns(p, s, "XYXY");
    add_patterns(p, t, "KXX");
    add_patterns(p, t, "XXK");
    add_patterns(p, t, "XKX", Rational(-1));
    add_patterns(p, u, "K1K2");
}

InvariantPreset make_fi2() {
    InvariantPreset p{"FI2", CurveClass::front, {"p", "q", "r", "s", "t", "u", "v"},
                      PairingMode::sign, {}, {}};
    add_fi2_shape(p, "p", "q", "r", "s", "t", "u", "v");
    return p;
}

InvariantPreset make_fi2_tilde() {
    InvariantPreset p{"FI2~", CurveClass::front, {"p", "q", "x", "z", "t", "v", "r"},
                      PairingMode::rho, {}, {}};
    add_fi2_shape(p, "p", "q", "x", "z", "t", "v", "r");
    return p;
}

InvariantPreset make_fi3() {
    // The smooth degree-3 part takes x and y; z is accepted for interface
    // compatibility but has no term.
    InvariantPreset p{"FI3", CurveClass::front, {"x", "y", "z", "p", "q", "r", "s", "t"},
                      PairingMode::sign, {}, {}};
    p.scalars = {{"", Rational(1), CountKind::i}};
    add_class(p, "x", "XYXYZZ", ClassFlavor::front);
    add_class(p, "y", "XXYYZZ", ClassFlavor::front);
    add_class(p, "p", "XKXYY", ClassFlavor::front);
    add_class(p, "q", "KXXYY", ClassFlavor::front);
    add_class(p, "r", "XKYXY", ClassFlavor::front);
    add_class(p, "s", "XXK1K2", ClassFlavor::front);
    add_class(p, "t", "K1K2K3", ClassFlavor::front);
    return p;
}

InvariantPreset make_gfi3() {
    InvariantPreset p{"GFI3", CurveClass::front,
                      {"x", "y", "z", "p", "q", "r", "s", "t", "u", "v", "h"},
                      PairingMode::sign, {}, {}};
    p.scalars = {{"", Rational(1), CountKind::i}};
    add_class(p, "x", "XYXYZZ", ClassFlavor::front);
    add_class(p, "y", "XXYYZZ", ClassFlavor::front);
    add_class(p, "z", "X.X.YY", ClassFlavor::front);
    add_class(p, "p", "XKXYY", ClassFlavor::front);
    add_class(p, "q", "KXXYY", ClassFlavor::front);
    add_class(p, "r", "XKYXY", ClassFlavor::front);
    add_class(p, "s", "K1K2K3", ClassFlavor::front);
    add_class(p, "t", "XXK1K2", ClassFlavor::front);
    add_class(p, "u", "K.XX", ClassFlavor::front);
    add_class(p, "v", "KX.X.", ClassFlavor::front);
    add_class(p, "h", "K1.K2", ClassFlavor::front);
    return p;
}

const std::map<std::string, InvariantPreset>& registry() {
    static const std::map<std::string, InvariantPreset> presets = [] {
        std::map<std::string, InvariantPreset> m;
        for (InvariantPreset p : {make_ci2(), make_ci3(), make_gci3(), make_li2(), make_li3(),
                                  make_gli3(), make_fi2(), make_fi3(), make_gfi3(),
                                  make_fi2_tilde()})
            m.emplace(p.name, std::move(p));
        return m;
    }();
    return presets;
}

}  // namespace

const InvariantPreset& preset(const std::string& name) {
    const auto& m = registry();
    auto it = m.find(name);
    if (it == m.end()) throw std::invalid_argument("unknown preset: " + name);
    return it->second;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const auto& [name, p] : registry()) names.push_back(name);
    return names;
}

ParamExpr evaluate(const InvariantPreset& preset, const EtaleWord& w) {
    if (w.curve_class() != preset.cls)
        throw std::invalid_argument(preset.name + " applies to a different curve class");
    CountSummary cs = counts(w);
    auto count_of = [&cs](CountKind k) -> Rational {
        switch (k) {
            case CountKind::one: return Rational(1);
            case CountKind::n: return Rational(cs.n);
            case CountKind::n_plus: return Rational(cs.n_plus);
            case CountKind::n_minus: return Rational(cs.n_minus);
            case CountKind::c: return Rational(cs.c);
            case CountKind::i: return Rational(cs.i);
            case CountKind::i_squared: return Rational(cs.i) * Rational(cs.i);
        }
        return Rational(0);
    };

    ParamExpr result;
    for (const ScalarTerm& t : preset.scalars) {
        RingElem v(t.mult * count_of(t.kind));
        if (t.param.empty())
            result += ParamExpr(v);
        else
            result.add_coeff(t.param, v);
    }

    std::vector<Pattern> pats;
    pats.reserve(preset.patterns.size());
    for (const PatternTerm& t : preset.patterns) pats.push_back(t.pattern);
    std::vector<RingElem> sums = pattern_weight_sums(pats, w, preset.mode);
    for (size_t k = 0; k < preset.patterns.size(); ++k) {
        const PatternTerm& t = preset.patterns[k];
        RingElem v = RingElem(t.mult) * sums[k];
        if (t.param.empty())
            result += ParamExpr(v);
        else
            result.add_coeff(t.param, v);
    }
    return result;
}

namespace {

ArnoldTriple specialize_triple(const ParamExpr& e, const std::vector<std::string>& params,
                               std::array<std::vector<Rational>, 3> tuples) {
    ArnoldTriple t;
    Rational* out[3] = {&t.j_plus, &t.j_minus, &t.st};
    for (int k = 0; k < 3; ++k) {
        std::map<std::string, Rational> assign;
        for (size_t i = 0; i < params.size(); ++i) assign[params[i]] = tuples[k][i];
        *out[k] = specialize(e, assign);
    }
    return t;
}

}  // namespace

ArnoldTriple arnold_closed(const EtaleWord& w) {
    ParamExpr e = evaluate(preset("CI2"), w);
    return specialize_triple(e, {"s", "t", "u"},
                             {{{Rational::of(-1, 2), 1, -3},
                               {Rational::of(-3, 2), 1, -3},
                               {Rational::of(1, 4), Rational::of(-1, 2), Rational::of(1, 2)}}});
}

ArnoldTriple arnold_long(const EtaleWord& w) {
    ParamExpr e = evaluate(preset("LI2"), w);
    return specialize_triple(
        e, {"s", "t", "u", "v"},
        {{{Rational::of(-1, 2), 1, -1, -3},
          {Rational::of(-3, 2), 1, -1, -3},
          {Rational::of(1, 4), Rational::of(-1, 2), Rational::of(1, 2), Rational::of(1, 2)}}});
}

ArnoldTriple arnold_front(const EtaleWord& w) {
    ParamExpr e = evaluate(preset("FI2"), w);
    return specialize_triple(
        e, {"p", "q", "r", "s", "t", "u", "v"},
        {{{Rational::of(-1, 2), Rational::of(-3, 2), 1, -3, Rational::of(1, 2),
           Rational::of(1, 4), Rational::of(-3, 4)},
          {Rational::of(-3, 2), Rational::of(-1, 2), 1, -3, Rational::of(1, 2),
           Rational::of(1, 4), Rational::of(1, 4)},
          {Rational::of(1, 4), Rational::of(1, 4), Rational::of(-1, 2), Rational::of(1, 2),
           Rational::of(-1, 4), Rational::of(-1, 8), Rational::of(3, 8)}}});
}

ArnoldTriple arnold(const EtaleWord& w) {
    switch (w.curve_class()) {
        case CurveClass::closed: return arnold_closed(w);
        case CurveClass::long_curve: return arnold_long(w);
        case CurveClass::front: return arnold_front(w);
    }
    throw std::invalid_argument("unknown curve class");
}

namespace {

ParamExpr lin(std::initializer_list<std::pair<const char*, Rational>> terms) {
    ParamExpr e;
    for (const auto& [name, c] : terms) e += ParamExpr::param(name, RingElem(c));
    return e;
}

// Substitutions making the 21-slot combination move-stable. Derived by
// solving the linear conditions that each move's new matches cancel; the
// slot-by-slot conditions are:
//   II- :  x7=2c16, x8=2c18, x9=2c17=2c19, x10=2c21, x12=2c20
//   II+ :  x1=2c16, x5=2c18, x3=2c17, x6=2c19, x13=2c20=2c21
//   III :  ten exchange relations among x1..x15 plus one tying the dotted
//          block to x11-x6.
std::map<std::string, ParamExpr> jplus3_subst() {
    Rational h = Rational::of(1, 2);
    std::map<std::string, ParamExpr> m;
    auto set = [&m](int k, ParamExpr e) { m["x" + std::to_string(k)] = std::move(e); };
    set(1, lin({{"s", 1}, {"t", 1}, {"v", -1}}));
    set(2, lin({{"s", 1}, {"t", -1}, {"u", 1}}));
    set(3, lin({{"s", -1}, {"t", 1}, {"v", 1}}));
    set(4, lin({{"s", -1}, {"t", 3}, {"u", -1}}));
    set(5, lin({{"s", 1}, {"t", 1}, {"v", -1}}));
    set(6, lin({{"t", 2}, {"v", -1}}));
    set(7, lin({{"s", 1}}));
    set(8, lin({{"s", 1}}));
    set(9, lin({{"t", 1}}));
    set(10, lin({{"u", 1}}));
    set(11, lin({{"t", 2}, {"v", -1}}));
    set(12, lin({{"s", -2}, {"t", 4}, {"u", -1}}));
    set(13, lin({{"s", -2}, {"t", 2}, {"v", 1}}));
    set(14, lin({{"s", 1}, {"t", -1}, {"v", 1}}));
    set(15, lin({{"v", 1}}));
    set(16, lin({{"s", h}}));
    set(17, lin({{"t", h}}));
    set(18, lin({{"s", h}}));
    set(19, lin({{"t", h}}));
    set(20, lin({{"s", -1}, {"t", 2}, {"u", -h}}));
    set(21, lin({{"u", h}}));
    return m;
}

std::map<std::string, ParamExpr> st3_subst() {
    std::map<std::string, ParamExpr> m;
    auto set = [&m](int k, ParamExpr e) { m["x" + std::to_string(k)] = std::move(e); };
    set(1, lin({{"u", 2}}));
    set(2, lin({{"p", 1}}));
    set(3, lin({{"y", 2}}));
    set(4, lin({{"q", 1}}));
    set(5, lin({{"x", 2}}));
    set(6, lin({{"y", 2}}));
    set(7, lin({{"u", 2}}));
    set(8, lin({{"x", 2}}));
    set(9, lin({{"y", 2}}));
    set(10, lin({{"z", 2}}));
    set(11, lin({{"r", 1}}));
    set(12, lin({{"z", 2}}));
    set(13, lin({{"z", 2}}));
    set(14, lin({{"s", 1}}));
    set(15, lin({{"t", 1}}));
    set(16, lin({{"u", 1}}));
    set(17, lin({{"y", 1}}));
    set(18, lin({{"x", 1}}));
    set(19, lin({{"y", 1}}));
    set(20, lin({{"z", 1}}));
    set(21, lin({{"z", 1}}));
    return m;
}

}  // namespace

ParamExpr arnold_degree3(const EtaleWord& w, Degree3Kind which) {
    ParamExpr e = evaluate(preset("GLI3"), w);
    return expr_substitute(e, which == Degree3Kind::j_plus_3 ? jplus3_subst() : st3_subst());
}

std::vector<std::string> degree3_params(Degree3Kind which) {
    if (which == Degree3Kind::j_plus_3) return {"s", "t", "u", "v"};
    return {"p", "q", "r", "s", "t", "u", "x", "y", "z"};
}

}  // namespace nanoword
