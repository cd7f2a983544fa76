#pragma once

#include <cassert>
#include <cstdint>

#include "bsdsurf/errors.hpp"
#include "bsdsurf/rational.hpp"

namespace bsdsurf {

// Element of the prime field F_p with runtime modulus. The modulus is
// carried by the element; mixed-modulus arithmetic is a bug and is
// asserted against. p must fit in 62 bits so products fit in __int128.
class Fp {
  public:
    Fp() : v_(0), p_(0) {}
    Fp(int64_t v, int64_t p) : p_(p) {
        assert(p >= 2);
        v_ = v % p;
        if (v_ < 0) v_ += p;
    }

    int64_t value() const { return v_; }
    int64_t modulus() const { return p_; }
    bool is_zero() const { return v_ == 0; }

    Fp operator-() const { return Fp(p_ - v_, p_); }

    friend Fp operator+(const Fp& a, const Fp& b) {
        assert(a.p_ == b.p_);
        int64_t s = a.v_ + b.v_;
        if (s >= a.p_) s -= a.p_;
        return raw(s, a.p_);
    }
    friend Fp operator-(const Fp& a, const Fp& b) {
        assert(a.p_ == b.p_);
        int64_t s = a.v_ - b.v_;
        if (s < 0) s += a.p_;
        return raw(s, a.p_);
    }
    friend Fp operator*(const Fp& a, const Fp& b) {
        assert(a.p_ == b.p_);
        __int128 m = (__int128)a.v_ * b.v_;
        return raw((int64_t)(m % a.p_), a.p_);
    }
    friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        assert(a.p_ == b.p_ || a.v_ == 0 || b.v_ == 0);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    Fp inverse() const {
        if (v_ == 0) throw ArgumentError("Fp: inverse of zero");
        // extended Euclid
        int64_t a = v_, b = p_, x0 = 1, x1 = 0;
        while (b) {
            int64_t q = a / b;
            int64_t t = a - q * b;
            a = b;
            b = t;
            t = x0 - q * x1;
            x0 = x1;
            x1 = t;
        }
        assert(a == 1);
        return Fp(x0, p_);
    }

    Fp pow(Int e) const {
        if (e < 0) return inverse().pow(-e);
        Fp r = raw(1 % p_, p_), base = *this;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

    static Fp raw(int64_t v, int64_t p) {
        Fp f;
        f.v_ = v;
        f.p_ = p;
        return f;
    }

  private:
    int64_t v_;
    int64_t p_;
};

inline Fp zero_like(const Fp& a) { return Fp::raw(0, a.modulus()); }
inline Fp one_like(const Fp& a) { return Fp(1, a.modulus()); }
inline bool is_zero(const Fp& a) { return a.is_zero(); }

inline Fp to_fp(const Int& n, int64_t p) {
    Int r = n % Int((unsigned long)p);
    return Fp(r.get_si(), p);
}

// Reduces a rational with p-integral denominator.
inline Fp to_fp(const Rat& q, int64_t p) {
    Fp n = to_fp(num(q), p);
    Fp d = to_fp(den(q), p);
    if (d.is_zero()) throw ArgumentError("to_fp: denominator divisible by p");
    return n / d;
}

// Legendre symbol via Euler's criterion; p an odd prime.
inline int legendre_symbol(const Int& a, int64_t p) {
    Fp x = to_fp(a, p);
    if (x.is_zero()) return 0;
    Fp e = x.pow(Int((p - 1) / 2));
    return e.value() == 1 ? 1 : -1;
}

} // namespace bsdsurf
