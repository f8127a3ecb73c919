#pragma once

#include <map>
#include <string>
#include <utility>

#include "nanoword/rational.hpp"

namespace nanoword {

/// Element of Q[a+, a-], the coefficient ring for front invariants.
///
/// The crossing/cusp types b+ and b- are never stored: evaluation maps
/// b+ to -a+ and b- to -a-, so two commuting generators suffice.
/// Keys are monomials a+^p a-^q; zero coefficients are pruned.
class RingElem {
public:
    using Monomial = std::pair<int, int>;  // (power of a+, power of a-)

    RingElem() = default;
    RingElem(Rational c) {  // NOLINT: implicit constant embedding
        if (!c.is_zero()) terms_[{0, 0}] = std::move(c);
    }
    static RingElem monomial(int p, int q, Rational c = Rational(1)) {
        RingElem e;
        if (!c.is_zero()) e.terms_[{p, q}] = std::move(c);
        return e;
    }
    static RingElem a_plus() { return monomial(1, 0); }
    static RingElem a_minus() { return monomial(0, 1); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    /// Rational content of a constant element; throws if a generator survives.
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        if (terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0})
            return terms_.begin()->second;
        throw std::domain_error("ring element is not a constant");
    }

    RingElem& operator+=(const RingElem& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    RingElem& operator-=(const RingElem& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend RingElem operator+(RingElem a, const RingElem& b) { return a += b; }
    friend RingElem operator-(RingElem a, const RingElem& b) { return a -= b; }
    RingElem operator-() const {
        RingElem r;
        for (const auto& [m, c] : terms_) r.terms_[m] = -c;
        return r;
    }

    friend RingElem operator*(const RingElem& a, const RingElem& b) {
        RingElem r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                r.add_term({ma.first + mb.first, ma.second + mb.second}, ca * cb);
        return r;
    }
    RingElem& operator*=(const RingElem& o) { return *this = *this * o; }

    friend bool operator==(const RingElem& a, const RingElem& b) { return a.terms_ == b.terms_; }

    /// Substitutes rational values for a+ and a-.
    Rational evaluate(const Rational& ap, const Rational& am) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (int i = 0; i < m.first; ++i) v *= ap;
            for (int i = 0; i < m.second; ++i) v *= am;
            total += v;
        }
        return total;
    }

    /// Monomial key as used in JSON output: "1", "a+", "a+^2 a-", ...
    static std::string monomial_key(const Monomial& m) {
        if (m.first == 0 && m.second == 0) return "1";
        std::string s;
        auto part = [&s](const char* gen, int pow) {
            if (pow == 0) return;
            if (!s.empty()) s += ' ';
            s += gen;
            if (pow > 1) s += "^" + std::to_string(pow);
        };
        part("a+", m.first);
        part("a-", m.second);
        return s;
    }

    /// Human-readable rendering, e.g. "2 a+ a- - 1/2".
    std::string str() const;

private:
    void add_term(const Monomial& m, const Rational& c) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_[m] = c;
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::map<Monomial, Rational> terms_;
};

inline std::string RingElem::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        bool neg = c < Rational(0);
        Rational mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        std::string key = monomial_key(m);
        if (key == "1") {
            out += mag.str();
        } else {
            if (!(mag == Rational(1))) out += mag.str() + " ";
            out += key;
        }
    }
    return out;
}

}  // namespace nanoword
