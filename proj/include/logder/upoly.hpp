#ifndef LOGDER_UPOLY_HPP
#define LOGDER_UPOLY_HPP

#include <gmpxx.h>

#include <algorithm>
#include <string>
#include <vector>

#include "logder/errors.hpp"
#include "logder/rat.hpp"
#include "logder/render.hpp"

namespace logder {

// Dense univariate polynomial over a field; empty coefficient vector is the
// zero polynomial, otherwise the leading coefficient is nonzero.
template <class F>
class UPoly {
  public:
    UPoly() = default;
    explicit UPoly(F c) { if (!c.is_zero()) coeffs_.push_back(std::move(c)); }
    explicit UPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static UPoly variable(const F& one) {
        std::vector<F> c{one.zero_like(), one.one_like()};
        return UPoly(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    const F& lc() const {
        if (is_zero()) throw DomainError("leading coefficient of zero polynomial");
        return coeffs_.back();
    }
    const F& operator[](std::size_t i) const { return coeffs_[i]; }
    const std::vector<F>& coeffs() const { return coeffs_; }

    UPoly operator-() const {
        std::vector<F> c;
        c.reserve(coeffs_.size());
        for (const F& x : coeffs_) c.push_back(-x);
        return UPoly(std::move(c));
    }
    UPoly operator+(const UPoly& o) const {
        const UPoly& a = coeffs_.size() >= o.coeffs_.size() ? *this : o;
        const UPoly& b = coeffs_.size() >= o.coeffs_.size() ? o : *this;
        std::vector<F> c = a.coeffs_;
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
        return UPoly(std::move(c));
    }
    UPoly operator-(const UPoly& o) const { return *this + (-o); }
    UPoly operator*(const UPoly& o) const {
        if (is_zero() || o.is_zero()) return UPoly();
        std::vector<F> c(coeffs_.size() + o.coeffs_.size() - 1, coeffs_[0].zero_like());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
        return UPoly(std::move(c));
    }
    UPoly operator*(const F& s) const {
        if (s.is_zero()) return UPoly();
        std::vector<F> c;
        c.reserve(coeffs_.size());
        for (const F& x : coeffs_) c.push_back(x * s);
        return UPoly(std::move(c));
    }

    bool operator==(const UPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const UPoly& o) const { return !(*this == o); }

    // Euclidean division; divisor must be nonzero.
    std::pair<UPoly, UPoly> divrem(const UPoly& d) const {
        if (d.is_zero()) throw DomainError("polynomial division by zero");
        if (degree() < d.degree()) return {UPoly(), *this};
        F inv_lc = d.lc().inverse();
        std::vector<F> rem = coeffs_;
        std::vector<F> quot(static_cast<std::size_t>(degree() - d.degree()) + 1,
                            coeffs_[0].zero_like());
        for (int i = degree(); i >= d.degree(); --i) {
            F q = rem[static_cast<std::size_t>(i)] * inv_lc;
            if (q.is_zero()) continue;
            quot[static_cast<std::size_t>(i - d.degree())] = q;
            for (int j = 0; j <= d.degree(); ++j)
                rem[static_cast<std::size_t>(i - d.degree() + j)] -=
                    q * d.coeffs_[static_cast<std::size_t>(j)];
        }
        return {UPoly(std::move(quot)), UPoly(std::move(rem))};
    }
    UPoly operator/(const UPoly& d) const { return divrem(d).first; }
    UPoly operator%(const UPoly& d) const { return divrem(d).second; }

    UPoly monic() const {
        if (is_zero()) return *this;
        if (lc().is_one()) return *this;
        return *this * lc().inverse();
    }

    // Formal derivative in the polynomial variable.
    UPoly formal_derivative() const {
        if (coeffs_.size() <= 1) return UPoly();
        std::vector<F> c;
        c.reserve(coeffs_.size() - 1);
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            c.push_back(coeffs_[i] * coeffs_[i].make_int(static_cast<long long>(i)));
        return UPoly(std::move(c));
    }

    F eval(const F& x) const {
        F acc = x.zero_like();
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    // Coefficients of p(x0 + t) as a polynomial in t.
    UPoly taylor_shift(const F& x0) const {
        if (is_zero()) return UPoly();
        UPoly acc;
        UPoly shift(std::vector<F>{x0, x0.one_like()});
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * shift + UPoly(coeffs_[i]);
        return acc;
    }

    UPoly pow(unsigned e) const {
        UPoly base = *this;
        UPoly r;
        bool started = false;
        while (e) {
            if (e & 1) { r = started ? r * base : base; started = true; }
            base = base * base;
            e >>= 1;
        }
        if (!started) {
            if (is_zero()) throw DomainError("0^0 for polynomials");
            return UPoly(coeffs_[0].one_like());
        }
        return r;
    }

    std::string str(const std::string& var) const {
        if (is_zero()) return "0";
        std::string out;
        bool first = true;
        for (std::size_t i = coeffs_.size(); i-- > 0;) {
            const F& c = coeffs_[i];
            if (c.is_zero()) continue;
            CoeffRepr repr = coeff_repr(c);
            if (first) {
                if (repr.negative) out += "-";
                first = false;
            } else {
                out += repr.negative ? " - " : " + ";
            }
            if (i == 0) {
                out += repr.body;
            } else {
                if (!repr.is_unit) out += repr.body + "*";
                out += var;
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }
    std::vector<F> coeffs_;
};

namespace detail {

// Primitive PRS over Z; rationals are cleared to primitive integer
// polynomials first so Euclid's coefficient swell never appears.
inline std::vector<mpz_class> rat_poly_to_primitive(const std::vector<Rat>& c) {
    mpz_class den_lcm = 1;
    for (const Rat& x : c) {
        mpz_class d = x.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    std::vector<mpz_class> z;
    z.reserve(c.size());
    mpz_class content = 0;
    for (const Rat& x : c) {
        mpz_class v = x.num() * (den_lcm / x.den());
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
        z.push_back(std::move(v));
    }
    if (content > 1)
        for (mpz_class& v : z) v /= content;
    return z;
}

inline void make_primitive(std::vector<mpz_class>& z) {
    while (!z.empty() && z.back() == 0) z.pop_back();
    if (z.empty()) return;
    mpz_class content = 0;
    for (const mpz_class& v : z) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    if (content > 1)
        for (mpz_class& v : z) v /= content;
    if (z.back() < 0)
        for (mpz_class& v : z) v = -v;
}

// Pseudo-remainder of a by b (b nonzero); content is stripped by the caller,
// so the exact lc(b) power multiplier is irrelevant.
inline std::vector<mpz_class> pseudo_rem(std::vector<mpz_class> a, const std::vector<mpz_class>& b) {
    const mpz_class& lb = b.back();
    const int db = static_cast<int>(b.size()) - 1;
    while (static_cast<int>(a.size()) - 1 >= db) {
        const int da = static_cast<int>(a.size()) - 1;
        mpz_class la = a.back();
        for (mpz_class& v : a) v *= lb;
        for (int j = 0; j <= db; ++j)
            a[static_cast<std::size_t>(da - db + j)] -= la * b[static_cast<std::size_t>(j)];
        while (!a.empty() && a.back() == 0) a.pop_back();
    }
    return a;
}

}  // namespace detail

template <class F>
UPoly<F> gcd(const UPoly<F>& a, const UPoly<F>& b) {
    if (a.is_zero() && b.is_zero()) throw DomainError("gcd(0, 0)");
    if constexpr (std::is_same_v<F, Rat>) {
        if (a.is_zero()) return b.monic();
        if (b.is_zero()) return a.monic();
        std::vector<mpz_class> u = detail::rat_poly_to_primitive(a.coeffs());
        std::vector<mpz_class> v = detail::rat_poly_to_primitive(b.coeffs());
        if (u.size() < v.size()) std::swap(u, v);
        while (!v.empty()) {
            std::vector<mpz_class> r = detail::pseudo_rem(u, v);
            detail::make_primitive(r);
            u = std::move(v);
            v = std::move(r);
        }
        std::vector<Rat> out;
        out.reserve(u.size());
        for (const mpz_class& z : u) out.emplace_back(z);
        return UPoly<Rat>(std::move(out)).monic();
    } else {
        UPoly<F> u = a, v = b;
        if (u.degree() < v.degree()) std::swap(u, v);
        while (!v.is_zero()) {
            UPoly<F> r = (u % v).monic();
            u = std::move(v);
            v = std::move(r);
        }
        return u.monic();
    }
}

template <class F>
UPoly<F> lcm(const UPoly<F>& a, const UPoly<F>& b) {
    if (a.is_zero() || b.is_zero()) return UPoly<F>();
    return ((a * b) / gcd(a, b)).monic();
}

}  // namespace logder

#endif
