#pragma once

// Shared helpers for the test suites: polynomial builders, a fixed-seed
// RNG, and independent oracles (trial-division factorization over F_p,
// Kronecker symbol via reciprocity) that deliberately avoid the library
// code paths they are used to check.

#include <cstdint>
#include <random>
#include <vector>

#include "bsdsurf/factor_fp.hpp"
#include "bsdsurf/fp.hpp"
#include "bsdsurf/rational.hpp"
#include "bsdsurf/unipoly.hpp"

namespace testsupport {

using namespace bsdsurf;

inline UniPoly<Rat> qpoly(std::vector<long> coeffs) {
    std::vector<Rat> c;
    for (long x : coeffs) c.emplace_back(x);
    return UniPoly<Rat>(std::move(c));
}

inline UniPoly<Int> zpoly(std::vector<long> coeffs) {
    std::vector<Int> c;
    for (long x : coeffs) c.emplace_back(x);
    return UniPoly<Int>(std::move(c));
}

inline UniPoly<Fp> fppoly(std::vector<long> coeffs, int64_t p) {
    std::vector<Fp> c;
    for (long x : coeffs) c.emplace_back(x, p);
    return UniPoly<Fp>(std::move(c));
}

inline std::mt19937& rng() {
    static std::mt19937 gen(20240717u);
    return gen;
}

inline long rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

inline UniPoly<Rat> random_qpoly(int max_deg, long coeff_bound) {
    int deg = (int)rand_int(0, max_deg);
    std::vector<long> c;
    for (int i = 0; i <= deg; ++i) c.push_back(rand_int(-coeff_bound, coeff_bound));
    if (c.back() == 0) c.back() = 1;
    return qpoly(c);
}

inline UniPoly<Fp> random_fppoly(int deg, int64_t p) {
    std::vector<long> c;
    for (int i = 0; i < deg; ++i) c.push_back(rand_int(0, p - 1));
    c.push_back(rand_int(1, p - 1));
    return fppoly(c, p);
}

// All monic polynomials of degree d over F_p, in base-p counter order.
inline std::vector<UniPoly<Fp>> all_monic(int d, int64_t p) {
    std::vector<UniPoly<Fp>> out;
    int64_t total = 1;
    for (int i = 0; i < d; ++i) total *= p;
    for (int64_t n = 0; n < total; ++n) {
        std::vector<Fp> c;
        int64_t m = n;
        for (int i = 0; i < d; ++i) {
            c.emplace_back(m % p, p);
            m /= p;
        }
        c.emplace_back(1, p);
        out.emplace_back(std::move(c));
    }
    return out;
}

// Independent factorization oracle over F_p: repeated trial division by
// monic polynomials in ascending (degree, counter) order. Any divisor
// found this way is irreducible.
inline std::vector<std::pair<UniPoly<Fp>, int>> trial_division_factor(UniPoly<Fp> f) {
    int64_t p = f.lc().modulus();
    std::vector<std::pair<UniPoly<Fp>, int>> out;
    f = make_monic(f);
    for (int d = 1; d <= f.degree() / 2 || (f.degree() >= 1 && d == 1); ++d) {
        if (d > f.degree() / 2) break;
        for (auto& cand : all_monic(d, p)) {
            int mult = 0;
            while (f.degree() >= cand.degree()) {
                auto [q, r] = divrem(f, cand);
                if (!r.is_zero_poly()) break;
                f = q;
                ++mult;
            }
            if (mult) out.emplace_back(cand, mult);
            if (f.degree() < 2 * d) break;
        }
        if (f.degree() < 2 * (d + 1)) break;
    }
    if (f.degree() >= 1) out.emplace_back(f, 1);
    return out;
}

// Kronecker symbol (a|n) via quadratic reciprocity; independent of the
// library's Euler-criterion Legendre symbol.
inline int kronecker_symbol(Int a, Int n) {
    if (n == 0) return (a == 1 || a == -1) ? 1 : 0;
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) result = -result;
    }
    // strip factors of 2 from n
    int v2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v2;
    }
    if (v2 % 2) {
        Int am = ((a % 8) + 8) % 8;
        if (am == 3 || am == 5) result = -result;
        if (am % 2 == 0) return 0;
    }
    a = ((a % n) + n) % n;
    while (a != 0) {
        int va = 0;
        while (a % 2 == 0) {
            a /= 2;
            ++va;
        }
        if (va % 2) {
            Int nm = n % 8;
            if (nm == 3 || nm == 5) result = -result;
        }
        // reciprocity: both a, n odd now
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        Int t = n % a;
        n = a;
        a = t;
    }
    return n == 1 ? result : 0;
}

} // namespace testsupport
