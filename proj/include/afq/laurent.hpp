/**
 * @file laurent.hpp
 * @brief Exact Laurent polynomials in q over the rationals, plus the
 *        q-integers, q-factorials and q-binomial coefficients built on them.
 *
 * Coefficients are arbitrary-precision rationals; every operation is exact.
 * Equality is coefficient-wise and tolerance-free.
 */
#ifndef AFQ_LAURENT_HPP
#define AFQ_LAURENT_HPP

#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace afq {

using Rational = boost::multiprecision::cpp_rational;

/// Finitely supported map exponent -> coefficient, zero coefficients never stored.
class LaurentPoly {
public:
    using TermMap = std::map<int, Rational>;

    LaurentPoly() = default;
    LaurentPoly(int c) { if (c != 0) terms_[0] = c; }
    LaurentPoly(const Rational& c) { if (c != 0) terms_[0] = c; }

    static LaurentPoly monomial(int exp, const Rational& c = 1) {
        LaurentPoly p;
        if (c != 0) p.terms_[exp] = c;
        return p;
    }
    /// q^k
    static LaurentPoly q_power(int k) { return monomial(k); }

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    int min_exp() const {
        if (is_zero()) throw std::domain_error("min_exp of zero polynomial");
        return terms_.begin()->first;
    }
    int max_exp() const {
        if (is_zero()) throw std::domain_error("max_exp of zero polynomial");
        return terms_.rbegin()->first;
    }

    Rational coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    LaurentPoly operator+(const LaurentPoly& o) const { LaurentPoly r = *this; r += o; return r; }
    LaurentPoly operator-(const LaurentPoly& o) const { LaurentPoly r = *this; r -= o; return r; }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { *this = *this * o; return *this; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
    bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

    /// The bar involution q -> q^-1.
    LaurentPoly bar() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }

    /// Sum of all coefficients (the specialization q = 1).
    Rational eval_at_one() const {
        Rational s = 0;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Exact quotient; throws std::domain_error if the division leaves a remainder.
    static LaurentPoly div_exact(const LaurentPoly& num, const LaurentPoly& den);

    /// Canonical rendering, terms in decreasing exponent order: `q^2 + 1 + q^-2`.
    std::string str() const;

    /// Inverse of str(); accepts only the canonical form.
    static LaurentPoly parse(const std::string& s);

private:
    void add_term(int exp, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(exp, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    TermMap terms_;
};

inline LaurentPoly operator*(const Rational& c, const LaurentPoly& p) {
    return LaurentPoly(c) * p;
}

/// [m]_{q^d} = (q^{dm} - q^{-dm}) / (q^d - q^{-d}); [0] = 0.
LaurentPoly qint(int m, int d = 1);

/// [m]_{q^d}!
LaurentPoly qfact(int m, int d = 1);

/// Gaussian binomial [m r]_{q^d} = [m]!/([r]![m-r]!), exact division.
/// Throws std::domain_error unless 0 <= r <= m.
LaurentPoly qbinom(int m, int r, int d = 1);

}  // namespace afq

#endif
