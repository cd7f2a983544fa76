#include "bsdsurf/factor_fp.hpp"

#include <algorithm>

namespace bsdsurf {

namespace {

int64_t modulus_of(const UniPoly<Fp>& f) {
    if (f.is_zero_poly()) throw ArgumentError("zero polynomial has no modulus");
    return f.lc().modulus();
}

// f(x) = g(x^p) with g recovered coefficient-wise; over the prime field
// the Frobenius fixes scalars, so no coefficient roots are needed.
UniPoly<Fp> pth_root(const UniPoly<Fp>& f) {
    int64_t p = modulus_of(f);
    std::vector<Fp> out;
    for (int i = 0; i <= f.degree(); i += (int)p) out.push_back(f[(size_t)i]);
    return UniPoly<Fp>(std::move(out));
}

UniPoly<Fp> exact_quot(const UniPoly<Fp>& a, const UniPoly<Fp>& b) {
    auto [q, r] = divrem(a, b);
    if (!r.is_zero_poly()) throw ArgumentError("factor_fp: division not exact");
    return q;
}

void squarefree_decomp_rec(const UniPoly<Fp>& f, int outer_mult,
                           std::vector<std::pair<UniPoly<Fp>, int>>& out) {
    int64_t p = modulus_of(f);
    if (f.degree() == 0) return;
    UniPoly<Fp> d = f.derivative();
    if (d.is_zero_poly()) {
        squarefree_decomp_rec(pth_root(f), outer_mult * (int)p, out);
        return;
    }
    UniPoly<Fp> c = poly_gcd(f, d);
    UniPoly<Fp> w = exact_quot(f, c);
    int i = 1;
    while (w.degree() > 0) {
        UniPoly<Fp> y = poly_gcd(w, c);
        UniPoly<Fp> z = exact_quot(w, y);
        if (z.degree() > 0) out.emplace_back(z, outer_mult * i);
        w = y;
        c = exact_quot(c, y);
        ++i;
    }
    if (c.degree() > 0) squarefree_decomp_rec(pth_root(c), outer_mult * (int)p, out);
}

// Deterministic enumeration of nonconstant monic-ish test polynomials:
// n = p, p+1, ... interpreted base p as the coefficient sequence.
UniPoly<Fp> nth_test_poly(int64_t n, int64_t p) {
    std::vector<Fp> c;
    int64_t m = n;
    while (m > 0) {
        c.push_back(Fp(m % p, p));
        m /= p;
    }
    return UniPoly<Fp>(std::move(c));
}

// Equal-degree splitting of a monic squarefree product of irreducibles
// of degree d.
void edf(const UniPoly<Fp>& f, int d, std::vector<UniPoly<Fp>>& out) {
    if (f.degree() == d) {
        out.push_back(f);
        return;
    }
    int64_t p = modulus_of(f);
    UniPoly<Fp> one = UniPoly<Fp>::constant(Fp(1, p));
    Int q = pow(Int(p), (unsigned long)d);
    for (int64_t n = p;; ++n) {
        UniPoly<Fp> a = poly_mod(nth_test_poly(n, p), f);
        if (a.degree() < 1) continue;
        UniPoly<Fp> g;
        if (p % 2 == 1) {
            Int e = (q - 1) / 2;
            UniPoly<Fp> w = pow_mod(a, e, f);
            g = poly_gcd(w - one, f);
        } else {
            // trace map to F_2: a + a^2 + ... + a^(2^(d-1))
            UniPoly<Fp> t = a, s = a;
            for (int i = 1; i < d; ++i) {
                t = poly_mod(t * t, f);
                s = s + t;
            }
            g = poly_gcd(s, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, d, out);
            edf(exact_quot(f, g), d, out);
            return;
        }
        if (n > p * 10000 + 100000)
            throw ArgumentError("equal-degree splitting failed to find a splitter");
    }
}

// Distinct-degree splitting of a monic squarefree polynomial: returns
// (product of irreducibles of degree d, d).
std::vector<std::pair<UniPoly<Fp>, int>> ddf(UniPoly<Fp> v) {
    int64_t p = modulus_of(v);
    std::vector<std::pair<UniPoly<Fp>, int>> out;
    UniPoly<Fp> x = UniPoly<Fp>::monomial(Fp(1, p), 1);
    UniPoly<Fp> h = poly_mod(x, v);
    int d = 0;
    while (v.degree() > 0 && 2 * (d + 1) <= v.degree()) {
        ++d;
        h = pow_mod(h, Int(p), v);
        UniPoly<Fp> g = poly_gcd(h - x, v);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            v = exact_quot(v, g);
            h = poly_mod(h, v);
        }
    }
    if (v.degree() > 0) out.emplace_back(v, v.degree());
    return out;
}

bool poly_less(const UniPoly<Fp>& a, const UniPoly<Fp>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        int64_t av = a[(size_t)i].value(), bv = b[(size_t)i].value();
        if (av != bv) return av < bv;
    }
    return false;
}

} // namespace

std::vector<std::pair<UniPoly<Fp>, int>> squarefree_decomposition(const UniPoly<Fp>& f) {
    if (f.is_zero_poly()) throw ArgumentError("squarefree_decomposition(0)");
    std::vector<std::pair<UniPoly<Fp>, int>> out;
    squarefree_decomp_rec(make_monic(f), 1, out);
    return out;
}

UniPoly<Fp> squarefree_part(const UniPoly<Fp>& f) {
    auto parts = squarefree_decomposition(f);
    UniPoly<Fp> acc = UniPoly<Fp>::constant(Fp(1, modulus_of(f)));
    for (auto& [g, m] : parts) acc = acc * g;
    return acc;
}

FpFactorization factor_mod_p(const UniPoly<Fp>& f) {
    if (f.is_zero_poly()) throw ArgumentError("factor_mod_p: zero polynomial");
    int64_t p = modulus_of(f);
    if (!is_prime(Int(p))) throw ArgumentError("factor_mod_p: modulus is not prime");
    FpFactorization res;
    res.unit = f.lc();
    if (f.degree() == 0) return res;
    for (auto& [sq, mult] : squarefree_decomposition(f)) {
        for (auto& [prod, d] : ddf(sq)) {
            std::vector<UniPoly<Fp>> irr;
            edf(prod, d, irr);
            for (auto& g : irr) res.factors.emplace_back(g, mult);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
    return res;
}

FpFactorization factor_mod_p(const UniPoly<Int>& f, int64_t p) {
    if (!is_prime(Int(p))) throw ArgumentError("factor_mod_p: modulus is not prime");
    UniPoly<Fp> fp = reduce_mod_p(f, p);
    if (fp.is_zero_poly()) throw ArgumentError("factor_mod_p: polynomial vanishes mod p");
    return factor_mod_p(fp);
}

bool is_irreducible_mod_p(const UniPoly<Fp>& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_mod_p(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace bsdsurf
