#pragma once

#include <map>
#include <string>

#include "nanoword/ring.hpp"

namespace nanoword {

/// Affine expression over named parameters with RingElem coefficients.
/// This is the value type of every invariant: evaluating a preset with
/// symbolic parameters yields one of these; specializing collapses it
/// to an exact Rational.
class ParamExpr {
public:
    ParamExpr() = default;
    ParamExpr(RingElem constant) : const_(std::move(constant)) {}  // NOLINT
    ParamExpr(Rational constant) : const_(RingElem(std::move(constant))) {}  // NOLINT

    static ParamExpr param(const std::string& name, RingElem coeff = RingElem(Rational(1))) {
        ParamExpr e;
        if (!coeff.is_zero()) e.coeffs_[name] = std::move(coeff);
        return e;
    }

    const RingElem& constant() const { return const_; }
    const std::map<std::string, RingElem>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.empty(); }
    bool is_zero() const { return const_.is_zero() && coeffs_.empty(); }

    ParamExpr& operator+=(const ParamExpr& o) {
        const_ += o.const_;
        for (const auto& [name, c] : o.coeffs_) add_coeff(name, c);
        return *this;
    }
    ParamExpr& operator-=(const ParamExpr& o) {
        const_ -= o.const_;
        for (const auto& [name, c] : o.coeffs_) add_coeff(name, -c);
        return *this;
    }
    friend ParamExpr operator+(ParamExpr a, const ParamExpr& b) { return a += b; }
    friend ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a -= b; }
    ParamExpr operator-() const {
        ParamExpr r(-const_);
        for (const auto& [name, c] : coeffs_) r.coeffs_[name] = -c;
        return r;
    }

    friend bool operator==(const ParamExpr& a, const ParamExpr& b) {
        return a.const_ == b.const_ && a.coeffs_ == b.coeffs_;
    }

    void add_coeff(const std::string& name, const RingElem& c) {
        auto it = coeffs_.find(name);
        if (it == coeffs_.end()) {
            if (!c.is_zero()) coeffs_[name] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }

    std::string str() const;

private:
    RingElem const_;
    std::map<std::string, RingElem> coeffs_;
};

/// Coefficient-wise sum (free-function spelling of operator+).
inline ParamExpr expr_add(const ParamExpr& a, const ParamExpr& b) { return a + b; }

/// Scales constant and every coefficient by a ring element.
ParamExpr expr_scale(const RingElem& c, const ParamExpr& e);

/// Substitutes parameters by expressions (used by the degree-3 presets,
/// where each slot parameter becomes an affine form in the free ones).
ParamExpr expr_substitute(const ParamExpr& e, const std::map<std::string, ParamExpr>& subs);

/// Replaces the ring generators a+ and a- by rational values, keeping
/// parameters symbolic.
ParamExpr specialize_ring(const ParamExpr& e, const Rational& a_plus, const Rational& a_minus);

/// Fully evaluates: every parameter of `e` must appear in `params`, and
/// if `e` has ring content both generators must be given.
Rational specialize(const ParamExpr& e, const std::map<std::string, Rational>& params,
                    const std::map<std::string, Rational>& ring_vals = {});

}  // namespace nanoword
