#include "nanoword/render.hpp"

namespace nanoword {

nlohmann::json ring_to_json(const RingElem& e) {
    nlohmann::json j = nlohmann::json::object();
    if (e.is_zero()) {
        j["1"] = "0";
        return j;
    }
    for (const auto& [m, c] : e.terms()) j[RingElem::monomial_key(m)] = c.str();
    return j;
}

nlohmann::json expr_to_json(const ParamExpr& e) {
    nlohmann::json j;
    j["const"] = ring_to_json(e.constant());
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [name, c] : e.coeffs()) coeffs[name] = ring_to_json(c);
    j["coeffs"] = coeffs;
    return j;
}

}  // namespace nanoword
