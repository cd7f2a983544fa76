#include "bsdsurf/factor_rat.hpp"

#include <algorithm>

#include "bsdsurf/factor_fp.hpp"

namespace bsdsurf {

namespace {

UniPoly<Int> exact_quot_z(const UniPoly<Int>& a, const UniPoly<Int>& b) {
    auto [q, r] = divrem(to_rat_poly(a), to_rat_poly(b));
    if (!r.is_zero_poly() || !is_integral(q))
        throw ArgumentError("factor_rat: division not exact");
    return to_int_poly(q);
}

bool divides_z(const UniPoly<Int>& g, const UniPoly<Int>& f) {
    if (g.degree() > f.degree()) return false;
    auto [q, r] = divrem(to_rat_poly(f), to_rat_poly(g));
    return r.is_zero_poly() && is_integral(q);
}

// Yun's algorithm (characteristic zero), on a primitive integer input.
std::vector<std::pair<UniPoly<Int>, int>> yun_squarefree(const UniPoly<Int>& f) {
    std::vector<std::pair<UniPoly<Int>, int>> out;
    UniPoly<Rat> a = to_rat_poly(f);
    UniPoly<Rat> da = a.derivative();
    UniPoly<Rat> g = poly_gcd(a, da);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    UniPoly<Rat> w = divrem(a, g).first;
    UniPoly<Rat> y = divrem(da, g).first;
    UniPoly<Rat> z = y - w.derivative();
    int i = 1;
    while (!z.is_zero_poly()) {
        UniPoly<Rat> h = poly_gcd(w, z);
        if (h.degree() > 0) out.emplace_back(primitive_part(h), i);
        w = divrem(w, h).first;
        y = divrem(z, h).first;
        z = y - w.derivative();
        ++i;
    }
    if (w.degree() > 0) out.emplace_back(primitive_part(w), i);
    return out;
}

// Landau-Mignotte style height bound for any integer factor of f:
// 2^n * sqrt(sum c_i^2) * |lc(f)|, rounded up.
Int factor_height_bound(const UniPoly<Int>& f) {
    Int s(0);
    for (auto& c : f.coeffs()) s += c * c;
    Int root;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    root += 1;
    return pow(Int(2), (unsigned long)f.degree()) * root * abs(f.lc());
}

std::vector<Int> lift_coeffs(const UniPoly<Fp>& g, int degree_cap) {
    std::vector<Int> c((size_t)degree_cap + 1, Int(0));
    for (int i = 0; i <= g.degree(); ++i) c[(size_t)i] = Int((long)g[(size_t)i].value());
    return c;
}

Int symmetric_mod(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

// Coefficient vectors of the modular factors are maintained mod p^k in
// [0, p^k); the factors stay monic (top coefficient 1 is implicit in
// the vector).
struct LiftState {
    Int pk;                          // current modulus p^k
    std::vector<std::vector<Int>> g; // factor coefficients, each monic
    std::vector<int> deg;
};

UniPoly<Int> factor_as_poly(const LiftState& st, size_t i) {
    std::vector<Int> c(st.g[i].begin(), st.g[i].begin() + st.deg[(size_t)i] + 1);
    return UniPoly<Int>(std::move(c));
}

// One linear lifting step: p^k -> p^(k+1), using the Bezout basis
// B_i = (lc * prod_{j != i} g_j)^(-1) mod (g_i, p). All products are
// reduced mod p^(k+1) as they are formed.
void lift_once(LiftState& st, const UniPoly<Int>& f, int64_t p,
               const std::vector<UniPoly<Fp>>& bezout) {
    Int next = st.pk * p;
    std::vector<Int> prod{f.lc() % next};
    for (size_t i = 0; i < st.g.size(); ++i) {
        std::vector<Int> acc(prod.size() + (size_t)st.deg[i], Int(0));
        for (size_t a = 0; a < prod.size(); ++a)
            for (int b = 0; b <= st.deg[i]; ++b)
                acc[a + (size_t)b] = (acc[a + (size_t)b] + prod[a] * st.g[i][(size_t)b]) % next;
        prod = std::move(acc);
    }
    // e = (f - prod)/p^k mod p
    std::vector<Fp> e(prod.size(), Fp(0, p));
    for (size_t i = 0; i < prod.size(); ++i) {
        Int fi = (i <= (size_t)f.degree()) ? f[(size_t)i] : Int(0);
        Int diff = (fi - prod[i]) % next;
        if (diff < 0) diff += next;
        e[i] = to_fp(exact_div(diff, st.pk), p);
    }
    UniPoly<Fp> ep{std::move(e)};
    for (size_t i = 0; i < st.g.size(); ++i) {
        UniPoly<Fp> gi = reduce_mod_p(factor_as_poly(st, i), p);
        UniPoly<Fp> delta = poly_mod(ep * bezout[i], gi);
        for (int j = 0; j <= delta.degree(); ++j) {
            Int add = st.pk * Int((long)delta[(size_t)j].value());
            st.g[i][(size_t)j] = (st.g[i][(size_t)j] + add) % next;
        }
    }
    st.pk = next;
}

// Factor a primitive squarefree integer polynomial of degree >= 1 into
// primitive irreducible integer factors.
std::vector<UniPoly<Int>> factor_squarefree_z(UniPoly<Int> f) {
    std::vector<UniPoly<Int>> out;
    if (f.degree() == 1) {
        out.push_back(f);
        return out;
    }
    Int p_int = select_factorization_prime(f);
    int64_t p = p_int.get_si();
    FpFactorization modular = factor_mod_p(f, p);
    if (modular.factors.size() == 1) {
        out.push_back(f);
        return out;
    }

    // Hensel lift all modular factors past twice the coefficient bound.
    Int bound = 2 * factor_height_bound(f) + 1;
    LiftState st;
    st.pk = p_int;
    for (auto& [g, mult] : modular.factors) {
        (void)mult; // squarefree input: all multiplicities are 1
        st.g.push_back(lift_coeffs(g, f.degree()));
        st.deg.push_back(g.degree());
    }
    // Bezout basis B_i = (lc * prod_{j!=i} g_j)^{-1} mod (g_i, p).
    std::vector<UniPoly<Fp>> bezout;
    for (size_t i = 0; i < modular.factors.size(); ++i) {
        UniPoly<Fp> others = UniPoly<Fp>::constant(to_fp(f.lc(), p));
        for (size_t j = 0; j < modular.factors.size(); ++j)
            if (j != i) others = others * modular.factors[j].first;
        auto [g1, s, t] = poly_ext_gcd(poly_mod(others, modular.factors[i].first),
                                       modular.factors[i].first);
        if (g1.degree() != 0) throw ArgumentError("factor_rat: Bezout basis failure");
        bezout.push_back(poly_mod(s, modular.factors[i].first));
    }

    while (st.pk < bound) lift_once(st, f, p, bezout);

    // Subset recombination with symmetric lifts.
    std::vector<size_t> live(st.g.size());
    for (size_t i = 0; i < live.size(); ++i) live[i] = i;

    auto candidate = [&](const std::vector<size_t>& subset) {
        std::vector<Int> acc{f.lc() % st.pk};
        for (size_t idx : subset) {
            std::vector<Int> next(acc.size() + (size_t)st.deg[idx], Int(0));
            for (size_t a = 0; a < acc.size(); ++a)
                for (int b = 0; b <= st.deg[idx]; ++b)
                    next[a + (size_t)b] = (next[a + (size_t)b] + acc[a] * st.g[idx][(size_t)b]) % st.pk;
            acc = std::move(next);
        }
        std::vector<Int> sym;
        sym.reserve(acc.size());
        for (auto& c : acc) sym.push_back(symmetric_mod(c, st.pk));
        return UniPoly<Int>(std::move(sym));
    };

    // Enumerate index combinations of the live set in ascending
    // cardinality; on acceptance drop the used factors and restart.
    bool accepted = true;
    while (accepted) {
        accepted = false;
        for (size_t card = 1; !accepted && 2 * card <= live.size(); ++card) {
            std::vector<size_t> pick(card);
            for (size_t i = 0; i < card; ++i) pick[i] = i;
            while (true) {
                std::vector<size_t> subset;
                for (size_t i : pick) subset.push_back(live[i]);
                UniPoly<Int> cand = candidate(subset);
                if (!cand.is_zero_poly()) {
                    UniPoly<Int> g = primitive_part(cand);
                    if (g.degree() >= 1 && divides_z(g, f)) {
                        out.push_back(g);
                        f = exact_quot_z(f, g);
                        std::vector<size_t> remaining;
                        for (size_t i = 0; i < live.size(); ++i)
                            if (std::find(pick.begin(), pick.end(), i) == pick.end())
                                remaining.push_back(live[i]);
                        live = std::move(remaining);
                        accepted = true;
                        break;
                    }
                }
                // next combination of indices 0..live.size()-1
                size_t k = card;
                bool advanced = false;
                while (k-- > 0) {
                    if (pick[k] != live.size() - card + k) {
                        ++pick[k];
                        for (size_t j = k + 1; j < card; ++j) pick[j] = pick[j - 1] + 1;
                        advanced = true;
                        break;
                    }
                }
                if (!advanced) break;
            }
        }
    }
    if (f.degree() >= 1) out.push_back(primitive_part(f));
    return out;
}

bool rat_poly_less(const UniPoly<Rat>& a, const UniPoly<Rat>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i) {
        if (a[(size_t)i] != b[(size_t)i]) return a[(size_t)i] < b[(size_t)i];
    }
    return false;
}

} // namespace

Int select_factorization_prime(const UniPoly<Int>& f) {
    if (f.degree() < 1) throw ArgumentError("select_factorization_prime: constant input");
    Rat disc = discriminant(to_rat_poly(f));
    if (disc == 0) throw ArgumentError("select_factorization_prime: input not squarefree");
    Int d = num(disc) * f.lc();
    for (const Int& p : first_primes(20000)) {
        if (d % p != 0) return p;
    }
    throw ArgumentError("select_factorization_prime: no admissible prime found");
}

RatFactorization factor_over_rationals(const UniPoly<Rat>& f) {
    if (f.is_zero_poly()) throw ArgumentError("factor_over_rationals(0)");
    RatFactorization res;
    res.unit = f.lc();
    if (f.degree() == 0) return res;
    UniPoly<Int> prim = primitive_part(f);
    for (auto& [sq, mult] : yun_squarefree(prim)) {
        for (auto& irr : factor_squarefree_z(sq)) {
            res.factors.emplace_back(make_monic(to_rat_poly(irr)), mult);
        }
    }
    std::sort(res.factors.begin(), res.factors.end(),
              [](const auto& a, const auto& b) { return rat_poly_less(a.first, b.first); });
    return res;
}

UniPoly<Int> squarefree_part(const UniPoly<Rat>& f) {
    if (f.is_zero_poly()) throw ArgumentError("squarefree_part(0)");
    if (f.degree() == 0) return UniPoly<Int>::constant(Int(1));
    UniPoly<Rat> g = poly_gcd(f, f.derivative());
    return primitive_part(divrem(f, g).first);
}

bool is_irreducible_over_q(const UniPoly<Rat>& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_rationals(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace bsdsurf
