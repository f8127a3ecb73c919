#include <doctest.h>

#include <cctype>

#include "nanoword/base_curves.hpp"
#include "nanoword/invariants.hpp"
#include "nanoword/render.hpp"

using namespace nanoword;

namespace {

// Minimal reader for the compact symbolic form with rational coefficients
// ("2 s - 3 t + 1/2"), enough to check that the TSV rendering carries the
// same content as the JSON one.
ParamExpr parse_compact(const std::string& text) {
    ParamExpr out;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && text[i] == ' ') ++i; };
    while (true) {
        skip_ws();
        if (i >= text.size()) break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        }
        std::string num;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
            num += text[i++];
        skip_ws();
        std::string name;
        while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i]))))
            name += text[i++];
        Rational coeff = num.empty() ? Rational(1) : Rational::parse(num);
        coeff = Rational(sign) * coeff;
        if (name.empty())
            out += ParamExpr(coeff);
        else
            out += ParamExpr::param(name, RingElem(coeff));
    }
    return out;
}

ParamExpr from_json(const nlohmann::json& j) {
    auto ring = [](const nlohmann::json& r) {
        RingElem e;
        for (auto it = r.begin(); it != r.end(); ++it) {
            REQUIRE(it.key() == "1");  // rational-coefficient cases only
            e += RingElem(Rational::parse(it.value().get<std::string>()));
        }
        return e;
    };
    ParamExpr out(ring(j.at("const")));
    for (auto it = j.at("coeffs").begin(); it != j.at("coeffs").end(); ++it)
        out.add_coeff(it.key(), ring(it.value()));
    return out;
}

}  // namespace

TEST_CASE("compact string and json renderings agree after parsing") {
    struct Case {
        const char* preset_name;
        BaseFamily family;
        long long index;
    } cases[] = {{"CI2", BaseFamily::K, 0},  {"CI2", BaseFamily::K, 3},
                 {"CI3", BaseFamily::K, 4},  {"LI2", BaseFamily::L, -2},
                 {"LI3", BaseFamily::L, 3},  {"GLI3", BaseFamily::L, 2}};
    for (const Case& c : cases) {
        ParamExpr value = evaluate(preset(c.preset_name), base_curve(c.family, c.index));
        CHECK(parse_compact(value.str()) == value);
        CHECK(from_json(expr_to_json(value)) == value);
    }
}

TEST_CASE("compact rendering of signs and fractions") {
    ParamExpr e = ParamExpr::param("s", RingElem(Rational(-2))) +
                  ParamExpr::param("t", RingElem(Rational::of(1, 2))) + ParamExpr(Rational(-1));
    CHECK(e.str() == "-2 s + 1/2 t - 1");
    CHECK(parse_compact(e.str()) == e);
    CHECK(ParamExpr().str() == "0");
}
