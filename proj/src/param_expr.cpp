#include "nanoword/param_expr.hpp"

namespace nanoword {

std::string ParamExpr::str() const {
    if (is_zero()) return "0";
    std::string out;
    auto append = [&out](const RingElem& c, const std::string& name) {
        std::string cs = c.str();
        bool neg = cs.size() > 1 && cs[0] == '-';
        // Wrap multi-term ring coefficients so the rendering stays unambiguous.
        bool sum = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
        if (out.empty()) {
            if (neg && !sum) {
                out += "-";
                cs = cs.substr(1);
            }
        } else {
            if (neg && !sum) {
                out += " - ";
                cs = cs.substr(1);
            } else {
                out += " + ";
            }
        }
        if (name.empty()) {
            out += sum ? "(" + cs + ")" : cs;
            return;
        }
        if (sum) {
            out += "(" + cs + ") " + name;
        } else if (cs == "1") {
            out += name;
        } else {
            out += cs + " " + name;
        }
    };
    for (const auto& [name, c] : coeffs_) append(c, name);
    if (!const_.is_zero()) append(const_, "");
    return out;
}

ParamExpr expr_scale(const RingElem& c, const ParamExpr& e) {
    if (c.is_zero()) return ParamExpr();
    ParamExpr r(c * e.constant());
    for (const auto& [name, coeff] : e.coeffs()) r.add_coeff(name, c * coeff);
    return r;
}

ParamExpr expr_substitute(const ParamExpr& e, const std::map<std::string, ParamExpr>& subs) {
    ParamExpr r(e.constant());
    for (const auto& [name, coeff] : e.coeffs()) {
        auto it = subs.find(name);
        if (it == subs.end()) {
            r.add_coeff(name, coeff);
        } else {
            r += expr_scale(coeff, it->second);
        }
    }
    return r;
}

ParamExpr specialize_ring(const ParamExpr& e, const Rational& a_plus, const Rational& a_minus) {
    ParamExpr r(RingElem(e.constant().evaluate(a_plus, a_minus)));
    for (const auto& [name, coeff] : e.coeffs())
        r.add_coeff(name, RingElem(coeff.evaluate(a_plus, a_minus)));
    return r;
}

Rational specialize(const ParamExpr& e, const std::map<std::string, Rational>& params,
                    const std::map<std::string, Rational>& ring_vals) {
    auto ring_value = [&ring_vals](const RingElem& c) {
        if (c.terms().size() == 1 && c.terms().begin()->first == RingElem::Monomial{0, 0})
            return c.terms().begin()->second;
        if (c.is_zero()) return Rational(0);
        auto ap = ring_vals.find("a+");
        auto am = ring_vals.find("a-");
        if (ap == ring_vals.end() || am == ring_vals.end())
            throw std::invalid_argument("unassigned ring variable (need a+ and a-)");
        return c.evaluate(ap->second, am->second);
    };
    Rational total = ring_value(e.constant());
    for (const auto& [name, coeff] : e.coeffs()) {
        auto it = params.find(name);
        if (it == params.end()) throw std::invalid_argument("unassigned parameter: " + name);
        total += it->second * ring_value(coeff);
    }
    return total;
}

}  // namespace nanoword
