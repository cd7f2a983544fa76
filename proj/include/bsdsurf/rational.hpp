#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "bsdsurf/errors.hpp"

namespace bsdsurf {

// Arbitrary-precision integers and rationals. Rat is kept in lowest
// terms with positive denominator; every constructor path below
// canonicalizes (mpq_class does not do this on its own).
using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
    if (den == 0) throw ArgumentError("rational with zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

inline Rat make_rat(long num, long den = 1) { return make_rat(Int(num), Int(den)); }

inline const Int& num(const Rat& q) { return q.get_num(); }
inline const Int& den(const Rat& q) { return q.get_den(); }
inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

inline Int abs(const Int& a) {
    Int r;
    mpz_abs(r.get_mpz_t(), a.get_mpz_t());
    return r;
}

inline Int pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rat pow(const Rat& base, unsigned long e) {
    Rat r;
    mpz_pow_ui(r.get_num().get_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den().get_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;
}

// Exact division; throws if b does not divide a.
Int exact_div(const Int& a, const Int& b);

bool is_perfect_square(const Int& n);

// Integer square root of a perfect square.
Int isqrt_exact(const Int& n);

bool is_prime(const Int& n);

// v_p(n) for n != 0.
int int_valuation(const Int& n, const Int& p);

// v_p of a nonzero rational (can be negative).
int rat_valuation(const Rat& q, const Int& p);

// Complete factorization of |n| for n != 0: map prime -> exponent.
// Throws ArgumentError when a cofactor cannot be resolved (never
// happens for |n| below ~1e18, which is far beyond anything this
// toolkit produces).
std::map<Int, int> factor_integer(const Int& n);

// Largest squarefree s with n = s * t^2 and sign(s) = sign(n).
Int squarefree_part(const Int& n);

bool is_squarefree(const Int& n);

// First `count` primes, ascending.
std::vector<Int> first_primes(int count);

std::string to_string(const Rat& q);
std::string to_string(const Int& n);

// Parse "num/den" or "num"; throws ParseError on malformed input.
Rat parse_rat(const std::string& s);

} // namespace bsdsurf
