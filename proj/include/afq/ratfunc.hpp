/**
 * @file ratfunc.hpp
 * @brief Rational functions in q as quotients of Laurent polynomials.
 *
 * Only the arithmetic needed for exact linear solves is provided; fractions
 * are kept reduced via a monic polynomial gcd so intermediate results stay
 * small.
 */
#ifndef AFQ_RATFUNC_HPP
#define AFQ_RATFUNC_HPP

#include "afq/laurent.hpp"

namespace afq {

/// gcd of the underlying ordinary polynomials, returned with min exponent 0
/// and leading coefficient 1; gcd(0,0) = 0.
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

class RatFunc {
public:
    RatFunc() : num_(0), den_(1) {}
    RatFunc(const LaurentPoly& p) : num_(p), den_(1) {}
    RatFunc(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
        if (den_.is_zero()) throw std::domain_error("zero denominator");
        reduce();
    }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw std::domain_error("division by zero rational function");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    bool operator==(const RatFunc& o) const { return num_ * o.den_ == o.num_ * den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str() const {
        if (den_ == LaurentPoly(1)) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void reduce();

    LaurentPoly num_, den_;
};

}  // namespace afq

#endif
