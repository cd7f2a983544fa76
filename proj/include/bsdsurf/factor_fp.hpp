#pragma once

#include <vector>

#include "bsdsurf/fp.hpp"
#include "bsdsurf/unipoly.hpp"

namespace bsdsurf {

struct FpFactorization {
    Fp unit; // leading coefficient of the input
    std::vector<std::pair<UniPoly<Fp>, int>> factors; // monic irreducible, multiplicity
};

// Complete factorization over F_p. Deterministic: distinct-degree
// splitting followed by equal-degree splitting that searches field
// elements in ascending order (no randomness), output sorted by degree
// then by coefficient sequence (low index first).
FpFactorization factor_mod_p(const UniPoly<Fp>& f);

// Convenience: reduce an integer polynomial mod p first.
FpFactorization factor_mod_p(const UniPoly<Int>& f, int64_t p);

// Squarefree decomposition in characteristic p (handles vanishing
// derivative via p-th root extraction). Input made monic internally.
std::vector<std::pair<UniPoly<Fp>, int>> squarefree_decomposition(const UniPoly<Fp>& f);

// Product of the distinct irreducible factors (the radical), monic.
UniPoly<Fp> squarefree_part(const UniPoly<Fp>& f);

bool is_irreducible_mod_p(const UniPoly<Fp>& f);

inline UniPoly<Fp> reduce_mod_p(const UniPoly<Int>& f, int64_t p) {
    std::vector<Fp> c;
    c.reserve((size_t)f.degree() + 1);
    for (auto& x : f.coeffs()) c.push_back(to_fp(x, p));
    return UniPoly<Fp>(std::move(c));
}

inline UniPoly<Fp> reduce_mod_p(const UniPoly<Rat>& f, int64_t p) {
    std::vector<Fp> c;
    c.reserve((size_t)f.degree() + 1);
    for (auto& x : f.coeffs()) c.push_back(to_fp(x, p));
    return UniPoly<Fp>(std::move(c));
}

} // namespace bsdsurf
