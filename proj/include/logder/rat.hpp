#ifndef LOGDER_RAT_HPP
#define LOGDER_RAT_HPP

#include <gmpxx.h>

#include <string>
#include <utility>

#include "logder/errors.hpp"

namespace logder {

// Arbitrary-precision rational, kept canonical: gcd(|num|, den) = 1, den > 0,
// zero is 0/1.  Thin wrapper over GMP's mpq so canonicalization is enforced
// at every construction site.
class Rat {
  public:
    Rat() : v_(0) {}
    Rat(long n) : v_(n) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rat(const mpz_class& n) : v_(n) {}
    Rat(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    static Rat from_string(const std::string& text) {
        mpq_class q;
        if (q.set_str(text, 10) != 0) throw ParseError("bad rational literal '" + text + "'");
        q.canonicalize();
        Rat r;
        r.v_ = std::move(q);
        return r;
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }

    Rat operator-() const { return Rat(mpq_class(-v_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(v_ + o.v_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(v_ - o.v_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(v_ * o.v_)); }
    Rat operator/(const Rat& o) const {
        if (o.is_zero()) throw DomainError("division by zero");
        return Rat(mpq_class(v_ / o.v_));
    }
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }

    Rat inverse() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rat(mpq_class(1 / v_));
    }

    bool operator==(const Rat& o) const { return v_ == o.v_; }
    bool operator!=(const Rat& o) const { return v_ != o.v_; }
    bool operator<(const Rat& o) const { return v_ < o.v_; }

    // Same-field factories; the receiver only supplies context (none for Q).
    Rat zero_like() const { return Rat(); }
    Rat one_like() const { return Rat(1); }
    Rat make_int(long long k) const { return Rat(mpz_class(static_cast<long>(k))); }
    Rat make_int(const mpz_class& k) const { return Rat(k); }

    static unsigned long long characteristic() { return 0; }

    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }
    const mpq_class& value() const { return v_; }

    std::string str() const { return v_.get_str(); }

  private:
    explicit Rat(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

}  // namespace logder

#endif
