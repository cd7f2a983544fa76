#include "bsdsurf/numberfield.hpp"

#include <sstream>

#include "bsdsurf/factor_rat.hpp"

namespace bsdsurf {

std::shared_ptr<const NumberField> NumberField::create(const UniPoly<Rat>& g,
                                                       bool verify_irreducible) {
    if (g.degree() < 1) throw ArgumentError("NumberField: defining polynomial must be nonconstant");
    if (g.lc() != 1) throw ArgumentError("NumberField: defining polynomial must be monic");
    if (!is_integral(g)) throw ArgumentError("NumberField: defining polynomial must have integer coefficients");
    if (verify_irreducible && !is_irreducible_over_q(g))
        throw ArgumentError("NumberField: defining polynomial is reducible");
    auto F = std::shared_ptr<NumberField>(new NumberField());
    F->g_ = g;
    F->gz_ = to_int_poly(g);
    F->disc_ = g.degree() >= 2 ? discriminant(g) : Rat(1);
    int n = g.degree();
    if (n >= 2) {
        // powers_ holds x^k mod g for k = n .. 2n-2
        std::vector<Rat> xn((size_t)n);
        for (int i = 0; i < n; ++i) xn[(size_t)i] = -g[(size_t)i];
        std::vector<Rat> cur = xn;
        for (int k = n; k <= 2 * n - 2; ++k) {
            F->powers_.push_back(cur);
            std::vector<Rat> next((size_t)n, Rat(0));
            Rat top = cur[(size_t)n - 1];
            for (int i = n - 1; i > 0; --i) next[(size_t)i] = cur[(size_t)i - 1];
            if (top != 0)
                for (int i = 0; i < n; ++i) next[(size_t)i] += top * xn[(size_t)i];
            cur = std::move(next);
        }
    }
    return F;
}

NFElement NumberField::element(std::vector<Rat> coords) const {
    if ((int)coords.size() != degree())
        throw ArgumentError("NFElement: coordinate vector has wrong length");
    return NFElement(shared_from_this(), std::move(coords));
}

NFElement NumberField::from_rat(const Rat& r) const {
    std::vector<Rat> c((size_t)degree(), Rat(0));
    c[0] = r;
    return NFElement(shared_from_this(), std::move(c));
}

NFElement NumberField::zero() const { return from_rat(Rat(0)); }
NFElement NumberField::one() const { return from_rat(Rat(1)); }

NFElement NumberField::generator() const {
    std::vector<Rat> c((size_t)degree(), Rat(0));
    if (degree() == 1) {
        c[0] = -defining_poly()[0];
    } else {
        c[1] = Rat(1);
    }
    return NFElement(shared_from_this(), std::move(c));
}

NFElement::NFElement(FieldPtr F, std::vector<Rat> coords) : F_(std::move(F)), c_(std::move(coords)) {}

bool NFElement::is_zero() const {
    for (auto& x : c_)
        if (x != 0) return false;
    return true;
}

bool NFElement::is_rational() const {
    for (size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rat NFElement::rational_value() const {
    if (!is_rational()) throw ArgumentError("NFElement: not rational");
    return c_.empty() ? Rat(0) : c_[0];
}

UniPoly<Rat> NFElement::as_poly() const { return UniPoly<Rat>(std::vector<Rat>(c_)); }

NFElement NFElement::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return NFElement(F_, std::move(r));
}

NFElement operator+(const NFElement& a, const NFElement& b) {
    std::vector<Rat> r(a.c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] += b.c_[i];
    return NFElement(a.F_, std::move(r));
}

NFElement operator-(const NFElement& a, const NFElement& b) {
    std::vector<Rat> r(a.c_);
    for (size_t i = 0; i < r.size(); ++i) r[i] -= b.c_[i];
    return NFElement(a.F_, std::move(r));
}

NFElement operator*(const NFElement& a, const NFElement& b) {
    const int n = a.F_->degree();
    std::vector<Rat> conv((size_t)(2 * n - 1), Rat(0));
    for (int i = 0; i < n; ++i) {
        if (a.c_[(size_t)i] == 0) continue;
        for (int j = 0; j < n; ++j) {
            if (b.c_[(size_t)j] == 0) continue;
            conv[(size_t)(i + j)] += a.c_[(size_t)i] * b.c_[(size_t)j];
        }
    }
    std::vector<Rat> r(conv.begin(), conv.begin() + n);
    const auto& pw = a.F_->power_table();
    for (int k = n; k <= 2 * n - 2; ++k) {
        const Rat& coeff = conv[(size_t)k];
        if (coeff == 0) continue;
        const auto& row = pw[(size_t)(k - n)];
        for (int i = 0; i < n; ++i) r[(size_t)i] += coeff * row[(size_t)i];
    }
    return NFElement(a.F_, std::move(r));
}

NFElement NFElement::inverse() const {
    if (is_zero()) throw ArgumentError("NFElement: inverse of zero");
    auto [g, s, t] = poly_ext_gcd(as_poly(), F_->defining_poly());
    if (g.degree() != 0) throw ArgumentError("NFElement: defining polynomial not irreducible?");
    std::vector<Rat> r((size_t)F_->degree(), Rat(0));
    for (int i = 0; i <= s.degree(); ++i) r[(size_t)i] = s[(size_t)i];
    return NFElement(F_, std::move(r));
}

NFElement operator/(const NFElement& a, const NFElement& b) { return a * b.inverse(); }

bool operator==(const NFElement& a, const NFElement& b) { return a.c_ == b.c_; }

NFElement NFElement::pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    NFElement r = F_->one(), base = *this;
    unsigned long u = (unsigned long)e;
    while (u) {
        if (u & 1) r = r * base;
        base = base * base;
        u >>= 1;
    }
    return r;
}

Rat NFElement::norm() const {
    if (is_zero()) return Rat(0);
    return resultant(F_->defining_poly(), as_poly());
}

Int NFElement::denominator() const {
    Int l(1);
    for (auto& x : c_) l = lcm(l, den(x));
    return l;
}

std::string NFElement::str() const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        os << to_string(c_[i]);
        if (i == 1) os << "*a";
        if (i > 1) os << "*a^" << i;
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

NFElement eval_at(const UniPoly<Rat>& p, const NFElement& x) {
    NFElement acc = x.field()->zero();
    for (int i = p.degree(); i >= 0; --i) acc = acc * x + x.field()->from_rat(p[(size_t)i]);
    return acc;
}

UniPoly<NFElement> lift_to_field(const UniPoly<Rat>& p, const FieldPtr& F) {
    std::vector<NFElement> c;
    for (auto& x : p.coeffs()) c.push_back(F->from_rat(x));
    return UniPoly<NFElement>(std::move(c));
}

// ---- Trager ----

UniPoly<Rat> norm_polynomial(const UniPoly<NFElement>& h) {
    if (h.is_zero_poly()) throw ArgumentError("norm_polynomial(0)");
    const FieldPtr& F = h.lc().field();
    const int bound = h.degree() * F->degree();
    std::vector<Rat> xs, ys;
    for (int k = 0; k <= bound; ++k) {
        Rat x0(k);
        UniPoly<Rat> hy;
        Rat xp(1);
        for (int j = 0; j <= h.degree(); ++j) {
            hy = hy + h[(size_t)j].as_poly().scaled(xp);
            xp *= x0;
        }
        Rat r = hy.is_zero_poly() ? Rat(0) : resultant(F->defining_poly(), hy);
        xs.push_back(x0);
        ys.push_back(r);
    }
    return interpolate(xs, ys);
}

std::pair<UniPoly<Rat>, int> trager_norm_squarefree(const UniPoly<NFElement>& h) {
    const FieldPtr& F = h.lc().field();
    for (int trial = 0;; ++trial) {
        int s = (trial % 2 == 0) ? trial / 2 : -(trial / 2 + 1); // 0, -1, 1, -2, 2, ...
        UniPoly<NFElement> shift(
            std::vector<NFElement>{F->generator() * F->from_rat(Rat(-s)), F->one()});
        UniPoly<NFElement> hs = h.compose(shift);
        UniPoly<Rat> norm = norm_polynomial(hs);
        if (!norm.is_zero_poly() && poly_gcd(norm, norm.derivative()).degree() == 0)
            return {norm, s};
        if (trial > 40) throw ArgumentError("trager: no squarefree shift found");
    }
}

NFFactorization nf_factor(const UniPoly<NFElement>& h) {
    if (h.is_zero_poly()) throw ArgumentError("nf_factor(0)");
    const FieldPtr& F = h.lc().field();
    NFFactorization res;
    res.unit = h.lc();
    if (h.degree() == 0) return res;
    UniPoly<NFElement> m = make_monic(h);

    // squarefree decomposition, characteristic zero (Yun)
    std::vector<std::pair<UniPoly<NFElement>, int>> squarefree;
    {
        UniPoly<NFElement> a = m;
        UniPoly<NFElement> g = poly_gcd(a, a.derivative());
        if (g.degree() == 0) {
            squarefree.emplace_back(a, 1);
        } else {
            UniPoly<NFElement> w = divrem(a, g).first;
            UniPoly<NFElement> y = divrem(a.derivative(), g).first;
            UniPoly<NFElement> z = y - w.derivative();
            int i = 1;
            while (!z.is_zero_poly()) {
                UniPoly<NFElement> q = poly_gcd(w, z);
                if (q.degree() > 0) squarefree.emplace_back(q, i);
                w = divrem(w, q).first;
                y = divrem(z, q).first;
                z = y - w.derivative();
                ++i;
            }
            if (w.degree() > 0) squarefree.emplace_back(w, i);
        }
    }

    for (auto& [part, mult] : squarefree) {
        if (part.degree() == 1) {
            res.factors.emplace_back(part, mult);
            continue;
        }
        auto [norm, s] = trager_norm_squarefree(part);
        auto qfac = factor_over_rationals(norm);
        if (qfac.factors.size() == 1) {
            res.factors.emplace_back(part, mult);
            continue;
        }
        UniPoly<NFElement> shift_fwd(
            std::vector<NFElement>{F->generator() * F->from_rat(Rat(-s)), F->one()});
        UniPoly<NFElement> shift_back(
            std::vector<NFElement>{F->generator() * F->from_rat(Rat(s)), F->one()});
        UniPoly<NFElement> hs = part.compose(shift_fwd);
        for (auto& [nf, nm] : qfac.factors) {
            (void)nm; // norm squarefree, all multiplicities 1
            UniPoly<NFElement> g = poly_gcd(hs, lift_to_field(nf, F));
            if (g.degree() < 1) continue;
            res.factors.emplace_back(make_monic(g.compose(shift_back)), mult);
            hs = divrem(hs, g).first;
        }
        if (hs.degree() > 0)
            throw ArgumentError("nf_factor: factors did not exhaust the input");
    }
    std::sort(res.factors.begin(), res.factors.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = a.first.degree(); i >= 0; --i) {
            const auto& ca = a.first[(size_t)i].coords();
            const auto& cb = b.first[(size_t)i].coords();
            for (size_t j = 0; j < ca.size(); ++j) {
                if (ca[j] != cb[j]) return ca[j] < cb[j];
            }
        }
        return false;
    });
    return res;
}

} // namespace bsdsurf
