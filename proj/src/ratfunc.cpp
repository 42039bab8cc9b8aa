#include "afq/ratfunc.hpp"

#include <vector>

namespace afq {

namespace {

std::vector<Rational> to_dense(const LaurentPoly& p) {
    std::vector<Rational> v(p.max_exp() - p.min_exp() + 1);
    for (const auto& [e, c] : p.terms()) v[e - p.min_exp()] = c;
    return v;
}

void trim(std::vector<Rational>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero() || b.is_zero()) {
        const LaurentPoly& p = a.is_zero() ? b : a;
        LaurentPoly shifted = LaurentPoly::q_power(-p.min_exp()) * p;
        Rational lead = shifted.terms().rbegin()->second;
        return LaurentPoly(Rational(1) / lead) * shifted;
    }
    std::vector<Rational> x = to_dense(a), y = to_dense(b);
    while (!y.empty()) {
        // x mod y
        for (int k = static_cast<int>(x.size()) - static_cast<int>(y.size()); k >= 0; --k) {
            Rational c = x[k + y.size() - 1] / y.back();
            if (c == 0) continue;
            for (std::size_t j = 0; j < y.size(); ++j) x[k + j] -= c * y[j];
        }
        trim(x);
        std::swap(x, y);
    }
    trim(x);
    LaurentPoly g;
    for (std::size_t k = 0; k < x.size(); ++k) g += LaurentPoly::monomial(static_cast<int>(k), x[k]);
    Rational lead = g.terms().rbegin()->second;
    return LaurentPoly(Rational(1) / lead) * g;
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = laurent_gcd(num_, den_);
    num_ = LaurentPoly::div_exact(num_, g);
    den_ = LaurentPoly::div_exact(den_, g);
    // Normalize: denominator with min exponent 0 and leading coefficient 1.
    const int shift = -den_.min_exp();
    num_ = LaurentPoly::q_power(shift) * num_;
    den_ = LaurentPoly::q_power(shift) * den_;
    Rational lead = den_.terms().rbegin()->second;
    num_ = LaurentPoly(Rational(1) / lead) * num_;
    den_ = LaurentPoly(Rational(1) / lead) * den_;
}

}  // namespace afq
