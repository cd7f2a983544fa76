#pragma once

#include <vector>

#include "bsdsurf/unipoly.hpp"

namespace bsdsurf {

struct RatFactorization {
    Rat unit; // leading coefficient; input = unit * prod factor^mult
    std::vector<std::pair<UniPoly<Rat>, int>> factors; // monic irreducible over Q
};

// Complete irreducible factorization over Q: squarefree decomposition,
// modular factorization at a good prime, Hensel lifting past the
// Landau-Mignotte bound, then subset recombination. Deterministic.
RatFactorization factor_over_rationals(const UniPoly<Rat>& f);

// f / gcd(f, f'), returned primitive with integer coefficients.
UniPoly<Int> squarefree_part(const UniPoly<Rat>& f);

bool is_irreducible_over_q(const UniPoly<Rat>& f);

// Smallest prime not dividing lc(f) * disc(squarefree part); used as the
// lifting prime and exposed for tests.
Int select_factorization_prime(const UniPoly<Int>& squarefree_primitive);

} // namespace bsdsurf
