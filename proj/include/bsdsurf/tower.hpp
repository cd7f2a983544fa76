#pragma once

#include <memory>

#include "bsdsurf/numberfield.hpp"
#include "bsdsurf/primeideal.hpp"

namespace bsdsurf {

// The field tower Q c K0 (cubic), K (quadratic), L (sextic Galois
// closure), with the three roots of the cubic realized inside L and the
// quadratic data theta, theta-bar realized inside K (and embedded in L).
//
// L is absolute: Q(gamma) with gamma = phi + c*sqrt(D), D the squarefree
// part of disc(f), c minimal making the resultant-computed minimal
// polynomial of gamma have degree 6. K uses the maximal-order model
// (x^2 - x + (1-D)/4 when D = 1 mod 4, else x^2 - D) so every rational
// prime is Dedekind-splittable in K.
struct Tower {
    UniPoly<Rat> f;         // monic integral irreducible cubic
    Int disc_f;             // disc(f), non-square
    Int disc_sf;            // squarefree part D of disc(f)
    Int s;                  // disc_f = D * s^2
    UniPoly<Rat> theta_min; // monic integral irreducible quadratic
    Int theta_trace;
    Int theta_norm;
    UniPoly<Rat> psi_rule; // psi_i = psi_rule(phi_i), degree <= 2

    FieldPtr K0, K, L;
    int gamma_c = 0;
    bool labels_swapped = false;

    NFElement sqrtD_K;  // sqrt(D) in K
    NFElement sqrtD_L;  // sqrt(D) in L
    NFElement phi_[3];  // roots of f in L (deterministic labels)
    NFElement psi_[3];  // psi_rule(phi_i) in L
    NFElement theta_K, theta_bar_K;
    NFElement theta_L, theta_bar_L;

    const NFElement& phi(int i) const { return phi_[i]; }
    const NFElement& psi(int i) const { return psi_[i]; }

    // K -> L along sqrt(D) |-> sqrtD_L.
    NFElement embed_K(const NFElement& a) const;
};

using TowerPtr = std::shared_ptr<const Tower>;

// swap_theta_labels flips the deterministic theta / theta-bar labelling;
// exposed so label-invariance can be tested end to end.
TowerPtr build_tower(const UniPoly<Rat>& f, const UniPoly<Rat>& theta_minpoly,
                     const UniPoly<Rat>& psi_rule, bool swap_theta_labels = false);

enum class SplittingType { SplitsCompletely, TwoPrimesInert, Other };

struct SplittingInfo {
    SplittingType type;
    std::vector<int> cubic_degrees; // factor degrees of f mod p
    bool split_in_K = false;
};

// Splitting pattern of p in L, from the factorization of f mod p and the
// quadratic character of disc(f). Requires p unramified in L, checked
// conservatively via p not dividing disc(f) * disc(K).
SplittingInfo splitting_type_in_L(const Int& p, const Tower& T);

enum class UnramifiedStatus { Yes, Unknown };

// Yes when disc(f) is squarefree (then L/K is everywhere unramified);
// Unknown otherwise -- no sharper criterion is attempted.
UnramifiedStatus is_unramified_L_over_K(const Tower& T);

} // namespace bsdsurf
