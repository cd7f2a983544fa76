#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bsdsurf/unipoly.hpp"

namespace bsdsurf {

class NFElement;

// Absolute number field Q[x]/(g) with g monic, irreducible, with integer
// coefficients. Irreducibility is verified at construction unless the
// caller explicitly vouches for it.
class NumberField : public std::enable_shared_from_this<NumberField> {
  public:
    static std::shared_ptr<const NumberField> create(const UniPoly<Rat>& g,
                                                     bool verify_irreducible = true);

    int degree() const { return g_.degree(); }
    const UniPoly<Rat>& defining_poly() const { return g_; }
    const UniPoly<Int>& defining_poly_z() const { return gz_; }
    const Rat& disc() const { return disc_; }

    NFElement element(std::vector<Rat> coords) const;
    NFElement from_rat(const Rat& r) const;
    NFElement zero() const;
    NFElement one() const;
    NFElement generator() const;

    // x^k mod g for k = n .. 2n-2, as coordinate vectors.
    const std::vector<std::vector<Rat>>& power_table() const { return powers_; }

  private:
    NumberField() = default;
    UniPoly<Rat> g_;
    UniPoly<Int> gz_;
    Rat disc_;
    std::vector<std::vector<Rat>> powers_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NFElement {
  public:
    NFElement() = default;
    NFElement(FieldPtr F, std::vector<Rat> coords);

    const FieldPtr& field() const { return F_; }
    const std::vector<Rat>& coords() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rat rational_value() const; // requires is_rational()

    UniPoly<Rat> as_poly() const;

    NFElement operator-() const;
    friend NFElement operator+(const NFElement& a, const NFElement& b);
    friend NFElement operator-(const NFElement& a, const NFElement& b);
    friend NFElement operator*(const NFElement& a, const NFElement& b);
    friend NFElement operator/(const NFElement& a, const NFElement& b);
    friend bool operator==(const NFElement& a, const NFElement& b);
    friend bool operator!=(const NFElement& a, const NFElement& b) { return !(a == b); }

    NFElement inverse() const;
    NFElement pow(long e) const;
    Rat norm() const; // product of conjugates

    // lcm of coordinate denominators
    Int denominator() const;

    std::string str() const;

  private:
    FieldPtr F_;
    std::vector<Rat> c_;
};

inline NFElement zero_like(const NFElement& a) { return a.field()->zero(); }
inline NFElement one_like(const NFElement& a) { return a.field()->one(); }
inline bool is_zero(const NFElement& a) { return a.is_zero(); }

// Evaluate a rational polynomial at a field element.
NFElement eval_at(const UniPoly<Rat>& p, const NFElement& x);

// Lift a rational polynomial to one with constant coefficients in F.
UniPoly<NFElement> lift_to_field(const UniPoly<Rat>& p, const FieldPtr& F);

struct NFFactorization {
    NFElement unit;
    std::vector<std::pair<UniPoly<NFElement>, int>> factors; // monic irreducible
};

// Trager's method: shift until the norm polynomial is squarefree, factor
// the norm over Q, pull factors back by gcds over the field.
NFFactorization nf_factor(const UniPoly<NFElement>& h);

// Norm polynomial of a monic squarefree h after shifting x -> x - s*gen:
// returns (norm over Q, shift s) with the norm squarefree.
std::pair<UniPoly<Rat>, int> trager_norm_squarefree(const UniPoly<NFElement>& h);

// Norm polynomial Res_y(g(y), H(x, y)) without any shift.
UniPoly<Rat> norm_polynomial(const UniPoly<NFElement>& h);

} // namespace bsdsurf
