#ifndef LOGDER_RATFUNC_HPP
#define LOGDER_RATFUNC_HPP

#include <string>
#include <utility>

#include "logder/errors.hpp"
#include "logder/upoly.hpp"

namespace logder {

// Element of K = k(x): num/den with den monic, gcd(num, den) = 1, zero 0/1.
// The derivation is d/dx via the quotient rule.
template <class F>
class RatFunc {
  public:
    explicit RatFunc(const F& c) : num_(c), den_(c.one_like()) {}
    explicit RatFunc(UPoly<F> num, UPoly<F> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DomainError("rational function with zero denominator");
        normalize();
    }
    explicit RatFunc(UPoly<F> num, const F& context)
        : num_(std::move(num)), den_(context.one_like()) {}

    static RatFunc variable(const F& context) {
        return RatFunc(UPoly<F>::variable(context), context);
    }

    const UPoly<F>& num() const { return num_; }
    const UPoly<F>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_scalar() const { return den_.is_one() && num_.is_constant(); }
    bool is_negative() const { return !num_.is_zero() && num_.lc().is_negative(); }

    RatFunc operator-() const { return RatFunc(secret{}, -num_, den_); }
    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw DomainError("division by zero rational function");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }

    RatFunc inverse() const {
        if (is_zero()) throw DomainError("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    // d/dx by the quotient rule; the constructor renormalizes.
    RatFunc derive() const {
        return RatFunc(num_.formal_derivative() * den_ - num_ * den_.formal_derivative(),
                       den_ * den_);
    }

    F eval(const F& x) const {
        F d = den_.eval(x);
        if (d.is_zero()) throw DomainError("evaluation at a pole");
        return num_.eval(x) / d;
    }

    F context() const { return den_.lc(); }  // den is monic and nonzero
    RatFunc zero_like() const { return RatFunc(context().zero_like()); }
    RatFunc one_like() const { return RatFunc(context().one_like()); }
    RatFunc make_int(long long k) const { return RatFunc(context().make_int(k)); }
    RatFunc make_int(const mpz_class& k) const { return RatFunc(context().make_int(k)); }
    auto characteristic() const { return context().characteristic(); }

    std::string str() const;

  private:
    struct secret {};
    RatFunc(secret, UPoly<F> num, UPoly<F> den) : num_(std::move(num)), den_(std::move(den)) {}

    void normalize() {
        if (num_.is_zero()) {
            den_ = UPoly<F>(den_.lc().one_like());
            return;
        }
        UPoly<F> g = gcd(num_, den_);
        if (!g.is_one()) {
            num_ = num_ / g;
            den_ = den_ / g;
        }
        if (!den_.lc().is_one()) {
            F inv = den_.lc().inverse();
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    UPoly<F> num_;
    UPoly<F> den_;
};

namespace detail {

// One-term polynomials ("2*x^3", "x") do not need parentheses before '*' or '/'.
template <class F>
bool single_term(const UPoly<F>& p) {
    int nonzero = 0;
    for (const F& c : p.coeffs())
        if (!c.is_zero()) ++nonzero;
    return nonzero == 1;
}

}  // namespace detail

template <class F>
CoeffRepr coeff_repr(const RatFunc<F>& c) {
    if (c.is_scalar()) {
        if (c.is_zero()) return coeff_repr(c.context().zero_like());
        return coeff_repr(c.num()[0]);
    }
    CoeffRepr r;
    r.negative = c.is_negative();
    RatFunc<F> mag = r.negative ? -c : c;
    r.is_unit = false;
    std::string num_str = detail::single_term(mag.num()) ? mag.num().str("x")
                                                         : "(" + mag.num().str("x") + ")";
    if (mag.is_polynomial()) {
        r.body = std::move(num_str);
    } else {
        std::string den_str = detail::single_term(mag.den()) ? mag.den().str("x")
                                                             : "(" + mag.den().str("x") + ")";
        r.body = num_str + "/" + den_str;
    }
    return r;
}

template <class F>
std::string RatFunc<F>::str() const {
    if (is_polynomial()) return num_.str("x");
    CoeffRepr r = coeff_repr(*this);
    return r.negative ? "-" + r.body : r.body;
}

}  // namespace logder

#endif
