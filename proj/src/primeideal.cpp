#include "bsdsurf/primeideal.hpp"

#include <sstream>

#include "bsdsurf/factor_fp.hpp"

namespace bsdsurf {

namespace {

UniPoly<Int> lift_fp_poly(const UniPoly<Fp>& f) {
    std::vector<Int> c;
    for (int i = 0; i <= f.degree(); ++i) c.emplace_back((long)f[(size_t)i].value());
    return UniPoly<Int>(std::move(c));
}

NFElement nf_from_int_poly(const FieldPtr& F, const UniPoly<Int>& p) {
    std::vector<Rat> c((size_t)F->degree(), Rat(0));
    for (int i = 0; i <= p.degree(); ++i) c[(size_t)i] = Rat(p[(size_t)i]);
    return F->element(std::move(c));
}

bool coords_divisible(const NFElement& a, const Int& m) {
    for (auto& c : a.coords()) {
        if (!is_integer(c)) return false;
        if (num(c) % m != 0) return false;
    }
    return true;
}

NFElement coords_divided(const NFElement& a, const Int& m) {
    std::vector<Rat> c;
    for (auto& x : a.coords()) c.push_back(Rat(exact_div(num(x), m)));
    return a.field()->element(std::move(c));
}

} // namespace

std::string PrimeIdeal::str() const {
    std::ostringstream os;
    os << "(" << p.get_str() << ", e=" << e << ", f=" << f << ", #" << index << ")";
    return os.str();
}

bool dedekind_index_ok(const FieldPtr& F, const Int& p) {
    const UniPoly<Int>& g = F->defining_poly_z();
    Rat disc = F->disc();
    if (int_valuation(num(disc), p) < 2) return true;
    if (p > (1 << 30)) throw UnsupportedPrime("dedekind check: prime too large");
    int64_t pv = p.get_si();
    auto fac = factor_mod_p(g, pv);
    UniPoly<Fp> g1 = UniPoly<Fp>::constant(Fp(1, pv));
    UniPoly<Fp> g2 = g1;
    for (auto& [gi, e] : fac.factors) {
        g1 = g1 * gi;
        for (int k = 1; k < e; ++k) g2 = g2 * gi;
    }
    // T = (lift(g1)*lift(g2) - g)/p; p | index iff gcd(T mod p, g1, g2) != 1
    UniPoly<Int> prod = lift_fp_poly(g1) * lift_fp_poly(g2);
    UniPoly<Int> diff = prod - g;
    std::vector<Fp> tc;
    for (auto& c : diff.coeffs()) tc.push_back(to_fp(exact_div(c, p), pv));
    UniPoly<Fp> T{std::move(tc)};
    UniPoly<Fp> h = poly_gcd(g1, g2);
    if (h.degree() == 0) return true;
    if (T.is_zero_poly()) return false;
    return poly_gcd(T, h).degree() == 0;
}

std::vector<PrimeIdeal> split_prime(const Int& p, const FieldPtr& F) {
    if (!is_prime(p)) throw ArgumentError("split_prime: p is not prime");
    if (!dedekind_index_ok(F, p))
        throw UnsupportedPrime("split_prime: " + p.get_str() +
                               " divides the index [O:Z[w]] for this defining polynomial");
    int64_t pv = p.get_si();
    auto fac = factor_mod_p(F->defining_poly_z(), pv);
    std::vector<PrimeIdeal> out;
    int total = 0;
    int idx = 0;
    for (auto& [gi, e] : fac.factors) {
        PrimeIdeal P;
        P.field = F;
        P.p = p;
        P.e = e;
        P.f = gi.degree();
        P.factor = gi;
        P.index = idx++;
        // cofactor = (gbar / gi^e); helper t = cofactor * gi^(e-1)
        UniPoly<Fp> cof = UniPoly<Fp>::constant(Fp(1, pv));
        for (auto& [gj, ej] : fac.factors) {
            if (gj == gi) continue;
            for (int k = 0; k < ej; ++k) cof = cof * gj;
        }
        UniPoly<Fp> helper = cof;
        for (int k = 1; k < e; ++k) helper = helper * gi;
        P.cofactor = nf_from_int_poly(F, lift_fp_poly(cof));
        P.val_helper = nf_from_int_poly(F, lift_fp_poly(helper));
        // sanity: t not in pO, and t*gi(w) in pO
        if (coords_divisible(P.val_helper, p))
            throw UnsupportedPrime("split_prime: valuation helper degenerated");
        NFElement gi_w = nf_from_int_poly(F, lift_fp_poly(gi));
        if (!coords_divisible(P.val_helper * gi_w, p))
            throw UnsupportedPrime("split_prime: valuation helper failed verification");
        total += P.e * P.f;
        out.push_back(std::move(P));
    }
    if (total != F->degree())
        throw UnsupportedPrime("split_prime: e*f bookkeeping failure");
    return out;
}

int ideal_valuation(const NFElement& a, const PrimeIdeal& P) {
    if (a.is_zero()) throw ValuationError("ideal_valuation: valuation of zero");
    if (a.field() != P.field) throw ArgumentError("ideal_valuation: field mismatch");
    Int d = a.denominator();
    NFElement x = a;
    if (d != 1) {
        std::vector<Rat> c;
        for (auto& q : a.coords()) c.push_back(q * Rat(d));
        x = a.field()->element(std::move(c));
    }
    int v = 0;
    const int cap = 1000000;
    NFElement cur = x;
    while (true) {
        NFElement y = cur * P.val_helper;
        if (!coords_divisible(y, P.p)) break;
        cur = coords_divided(y, P.p);
        ++v;
        if (v > cap) throw ValuationError("ideal_valuation: runaway loop");
    }
    return v - P.e * int_valuation(d, P.p);
}

RelCtxPtr<Fp> residue_field(const PrimeIdeal& P) {
    return std::make_shared<const RelExtCtx<Fp>>(P.factor);
}

ResidueElem reduce_mod_prime(const NFElement& a, const PrimeIdeal& P,
                             const RelCtxPtr<Fp>& rf) {
    if (a.field() != P.field) throw ArgumentError("reduce_mod_prime: field mismatch");
    int64_t pv = P.p.get_si();
    auto eval_integral = [&](const NFElement& z) {
        // coords are p-integral rationals; reduce then fold mod the factor
        UniPoly<Fp> zp = reduce_mod_p(z.as_poly(), pv);
        return ResidueElem(rf, zp);
    };
    Int d = a.denominator();
    int k = int_valuation(d, P.p);
    if (k == 0) {
        // denominator invertible mod p; handled inside to_fp
        return eval_integral(a);
    }
    Int pk = pow(P.p, (unsigned long)k);
    Int dprime = exact_div(d, pk);
    // clear the full denominator first
    std::vector<Rat> ic;
    for (auto& q : a.coords()) ic.push_back(q * Rat(d));
    NFElement an = a.field()->element(std::move(ic));
    // multiply by cofactor^k: unit at P, divisible enough at the other
    // primes above p to make division by p^k integral
    NFElement y = an;
    for (int i = 0; i < k; ++i) y = y * P.cofactor;
    if (!coords_divisible(y, pk))
        throw ValuationError("reduce_mod_prime: element has negative valuation at P");
    NFElement z = coords_divided(y, pk);
    ResidueElem zr = eval_integral(z);
    ResidueElem ur = eval_integral(P.cofactor);
    if (ur.is_zero_elem()) throw ValuationError("reduce_mod_prime: cofactor reduced to zero");
    ResidueElem dr = ResidueElem::from_base(rf, to_fp(dprime, pv));
    return zr * ur.pow(Int(k)).inverse() * dr.inverse();
}

} // namespace bsdsurf
