#pragma once

#include <vector>

#include "bsdsurf/fp.hpp"
#include "bsdsurf/numberfield.hpp"
#include "bsdsurf/relext.hpp"

namespace bsdsurf {

// Prime of O_F above p, for p not dividing [O_F : Z[w]] (Dedekind).
// Carries an irreducible factor of the defining polynomial mod p plus a
// valuation helper t with t*P inside p*O_F and t outside p*O_F, which
// makes v_P computable by repeated multiply-and-divide.
struct PrimeIdeal {
    FieldPtr field;
    Int p;
    int e = 1; // ramification index
    int f = 1; // residue degree
    UniPoly<Fp> factor;     // monic irreducible factor of g mod p
    NFElement val_helper;   // t as above
    NFElement cofactor;     // lift of (g / factor^e)(w), unit at this prime
    int index = 0;          // position in the deterministic factor order

    std::string str() const;
};

// True when p does not divide the index [O_F : Z[w]] (fast discriminant
// test, then Dedekind's criterion).
bool dedekind_index_ok(const FieldPtr& F, const Int& p);

// One PrimeIdeal per irreducible factor of g mod p; sum of e*f equals
// the field degree. Throws UnsupportedPrime when p divides the index.
std::vector<PrimeIdeal> split_prime(const Int& p, const FieldPtr& F);

// Exact P-adic valuation of the fractional ideal (a); a != 0.
int ideal_valuation(const NFElement& a, const PrimeIdeal& P);

// Residue field O_F/P as F_p[u]/(factor).
using ResidueElem = RelExtElem<Fp>;
RelCtxPtr<Fp> residue_field(const PrimeIdeal& P);

// Image of a in O_F/P; requires v_P(a) >= 0 (throws ValuationError
// otherwise). Handles denominators supported at other primes above p.
ResidueElem reduce_mod_prime(const NFElement& a, const PrimeIdeal& P,
                             const RelCtxPtr<Fp>& rf);

} // namespace bsdsurf
