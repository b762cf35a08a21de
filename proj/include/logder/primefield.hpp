#ifndef LOGDER_PRIMEFIELD_HPP
#define LOGDER_PRIMEFIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "logder/errors.hpp"

namespace logder {

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, p);
        a = mulmod_u64(a, a, p);
        e >>= 1;
    }
    return r;
}

// Deterministic Miller-Rabin; the fixed witness set decides primality for all
// 64-bit integers.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

}  // namespace detail

// Element of GF(p) for a word-sized prime p checked at construction.
class PrimeField {
  public:
    PrimeField(std::uint64_t value, std::uint64_t p) : v_(0), p_(p) {
        check_modulus(p);
        v_ = value % p;
    }
    static PrimeField from_int(long long value, std::uint64_t p) {
        check_modulus(p);
        long long r = value % static_cast<long long>(p);
        if (r < 0) r += static_cast<long long>(p);
        return PrimeField(unchecked{}, static_cast<std::uint64_t>(r), p);
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return false; }  // no sign for rendering in GF(p)

    PrimeField operator-() const { return PrimeField(unchecked{}, v_ == 0 ? 0 : p_ - v_, p_); }
    PrimeField operator+(const PrimeField& o) const {
        require_same(o);
        std::uint64_t s = v_ + o.v_;
        if (s >= p_) s -= p_;
        return PrimeField(unchecked{}, s, p_);
    }
    PrimeField operator-(const PrimeField& o) const {
        require_same(o);
        return PrimeField(unchecked{}, v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
    }
    PrimeField operator*(const PrimeField& o) const {
        require_same(o);
        return PrimeField(unchecked{}, detail::mulmod_u64(v_, o.v_, p_), p_);
    }
    PrimeField operator/(const PrimeField& o) const { return *this * o.inverse(); }
    PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
    PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
    PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

    PrimeField inverse() const {
        if (v_ == 0) throw DomainError("inverse of zero in GF(p)");
        // extended Euclid on (v, p)
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(p_), newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t quot = r / newr;
            std::int64_t tmp = t - quot * newt;
            t = newt; newt = tmp;
            tmp = r - quot * newr;
            r = newr; newr = tmp;
        }
        if (t < 0) t += static_cast<std::int64_t>(p_);
        return PrimeField(unchecked{}, static_cast<std::uint64_t>(t), p_);
    }

    bool operator==(const PrimeField& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const PrimeField& o) const { return !(*this == o); }

    PrimeField zero_like() const { return PrimeField(unchecked{}, 0, p_); }
    PrimeField one_like() const { return PrimeField(unchecked{}, 1 % p_, p_); }
    PrimeField make_int(long long k) const { return from_int(k, p_); }
    PrimeField make_int(const mpz_class& k) const {
        mpz_class r = k % static_cast<unsigned long>(p_);
        if (r < 0) r += static_cast<unsigned long>(p_);
        return PrimeField(unchecked{}, r.get_ui(), p_);
    }

    std::uint64_t characteristic() const { return p_; }
    std::uint64_t value() const { return v_; }

    std::string str() const { return std::to_string(v_); }

  private:
    struct unchecked {};
    PrimeField(unchecked, std::uint64_t v, std::uint64_t p) : v_(v), p_(p) {}

    static void check_modulus(std::uint64_t p) {
        if (p >= (1ull << 62)) throw DomainError("modulus too large (must be word-sized)");
        if (!detail::is_prime_u64(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
    }
    void require_same(const PrimeField& o) const {
        if (p_ != o.p_) throw DomainError("mixed moduli in GF(p) arithmetic");
    }

    std::uint64_t v_;
    std::uint64_t p_;
};

}  // namespace logder

#endif
