#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "bsdsurf/errors.hpp"
#include "bsdsurf/rational.hpp"

namespace bsdsurf {

inline Int zero_like(const Int&) { return Int(0); }
inline Int one_like(const Int&) { return Int(1); }
inline bool is_zero(const Int& a) { return a == 0; }
inline Rat zero_like(const Rat&) { return Rat(0); }
inline Rat one_like(const Rat&) { return Rat(1); }
inline bool is_zero(const Rat& a) { return a == 0; }

// Dense univariate polynomial over an exact coefficient domain.
// Canonical form: no trailing zero coefficients; the zero polynomial is
// the empty coefficient list (degree -1 by convention).
template <class K>
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const K& k) {
        if (is_zero(k)) return UniPoly();
        return UniPoly(std::vector<K>{k});
    }
    // x^n with unit coefficient modeled on `sample`.
    static UniPoly monomial(const K& coeff, int n) {
        if (is_zero(coeff)) return UniPoly();
        std::vector<K> v((size_t)n + 1, zero_like(coeff));
        v[(size_t)n] = coeff;
        return UniPoly(std::move(v));
    }

    int degree() const { return (int)c_.size() - 1; }
    bool is_zero_poly() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const K& operator[](size_t i) const { return c_[i]; }
    const std::vector<K>& coeffs() const { return c_; }
    const K& lc() const {
        assert(!c_.empty());
        return c_.back();
    }
    K coeff_or_zero(size_t i, const K& sample) const {
        return i < c_.size() ? c_[i] : zero_like(sample);
    }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        if (a.c_.empty()) return b;
        if (b.c_.empty()) return a;
        std::vector<K> r(std::max(a.c_.size(), b.c_.size()), zero_like(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] = r[i] + b.c_[i];
        return UniPoly(std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    UniPoly operator-() const {
        std::vector<K> r(c_);
        for (auto& x : r) x = -x;
        return UniPoly(std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.c_.empty() || b.c_.empty()) return UniPoly();
        std::vector<K> r(a.c_.size() + b.c_.size() - 1, zero_like(a.c_[0]));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
        return UniPoly(std::move(r));
    }
    UniPoly scaled(const K& k) const {
        if (is_zero(k)) return UniPoly();
        std::vector<K> r(c_);
        for (auto& x : r) x = x * k;
        return UniPoly(std::move(r));
    }
    UniPoly shifted_up(int n) const {
        // multiply by x^n
        if (c_.empty()) return UniPoly();
        std::vector<K> r((size_t)n, zero_like(c_[0]));
        r.insert(r.end(), c_.begin(), c_.end());
        return UniPoly(std::move(r));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (size_t i = 0; i < a.c_.size(); ++i)
            if (!(a.c_[i] == b.c_[i])) return false;
        return true;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    K eval(const K& x) const {
        if (c_.empty()) return zero_like(x);
        K acc = c_.back();
        for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    // Horner evaluation at a polynomial argument.
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc;
        for (size_t i = c_.size(); i-- > 0;) acc = acc * g + constant(c_[i]);
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<K> r(c_.size() - 1, zero_like(c_[0]));
        for (size_t i = 1; i < c_.size(); ++i) {
            K m = zero_like(c_[0]);
            for (size_t j = 0; j < i; ++j) m = m + c_[i];
            // m = i * c_[i] without requiring an int conversion on K
            r[i - 1] = m;
        }
        return UniPoly(std::move(r));
    }

  private:
    void trim() {
        while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
    }
    std::vector<K> c_;
};

// Division with remainder; requires invertible leading coefficient
// (field coefficients, or a monic divisor over a ring).
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> divrem(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero_poly()) throw ArgumentError("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly<K>(), a};
    K inv_lc = one_like(b.lc()) / b.lc();
    std::vector<K> rem(a.coeffs());
    std::vector<K> quot((size_t)(a.degree() - b.degree() + 1), zero_like(b.lc()));
    for (int i = a.degree(); i >= b.degree(); --i) {
        K q = rem[(size_t)i] * inv_lc;
        if (!is_zero(q)) {
            quot[(size_t)(i - b.degree())] = q;
            for (int j = 0; j <= b.degree(); ++j)
                rem[(size_t)(i - b.degree() + j)] = rem[(size_t)(i - b.degree() + j)] - q * b[(size_t)j];
        }
    }
    return {UniPoly<K>(std::move(quot)), UniPoly<K>(std::move(rem))};
}

template <class K>
UniPoly<K> poly_mod(const UniPoly<K>& a, const UniPoly<K>& b) {
    return divrem(a, b).second;
}

template <class K>
UniPoly<K> make_monic(const UniPoly<K>& a) {
    if (a.is_zero_poly()) throw ArgumentError("make_monic(0)");
    return a.scaled(one_like(a.lc()) / a.lc());
}

// Monic gcd over a field.
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero_poly()) {
        auto r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero_poly()) return a;
    return make_monic(a);
}

// Extended gcd: returns (g, s, t) with s*a + t*b = g, g monic.
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>> poly_ext_gcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> s0 = UniPoly<K>::constant(one_like(a.is_zero_poly() ? b.lc() : a.lc()));
    UniPoly<K> s1, t0, t1 = s0;
    while (!r1.is_zero_poly()) {
        auto [q, r] = divrem(r0, r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        UniPoly<K> s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        UniPoly<K> t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero_poly()) return {r0, s0, t0};
    K inv = one_like(r0.lc()) / r0.lc();
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class K>
UniPoly<K> pow_mod(const UniPoly<K>& base, Int e, const UniPoly<K>& modulus) {
    assert(e >= 0);
    UniPoly<K> result = UniPoly<K>::constant(one_like(modulus.lc()));
    UniPoly<K> b = poly_mod(base, modulus);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = poly_mod(result * b, modulus);
        b = poly_mod(b * b, modulus);
        e >>= 1;
    }
    return result;
}

// Res(f,g) = lc(f)^deg(g) * prod g(alpha_i) over the roots of f.
// Euclidean PRS over a field; exact.
template <class K>
K resultant(const UniPoly<K>& f, const UniPoly<K>& g) {
    if (f.is_zero_poly() && g.is_zero_poly())
        throw ArgumentError("resultant of two zero polynomials");
    if (f.is_zero_poly() || g.is_zero_poly()) {
        const UniPoly<K>& nz = f.is_zero_poly() ? g : f;
        if (nz.degree() == 0) throw ArgumentError("resultant(0, constant) undefined");
        return zero_like(nz.lc());
    }
    K one = one_like(f.lc());
    K acc = one;
    UniPoly<K> a = f, b = g;
    bool negate = false;
    while (true) {
        if (b.degree() == 0) {
            K r = acc;
            K pw = one;
            for (int i = 0; i < a.degree(); ++i) pw = pw * b.lc();
            r = r * pw;
            return negate ? -r : r;
        }
        if (a.degree() < b.degree()) {
            if ((a.degree() % 2) && (b.degree() % 2)) negate = !negate;
            std::swap(a, b);
            continue;
        }
        auto r = poly_mod(a, b);
        if (r.is_zero_poly()) return zero_like(f.lc());
        // Res(a,b) = (-1)^(da*db) lc(b)^(da - dr) Res(b, r)
        if ((a.degree() % 2) && (b.degree() % 2)) negate = !negate;
        K pw = one;
        for (int i = 0; i < a.degree() - r.degree(); ++i) pw = pw * b.lc();
        acc = acc * pw;
        a = std::move(b);
        b = std::move(r);
    }
}

// disc(f) = (-1)^{n(n-1)/2} Res(f, f') / lc(f), n = deg f >= 2.
template <class K>
K discriminant(const UniPoly<K>& f) {
    if (f.degree() < 2) throw ArgumentError("discriminant needs degree >= 2");
    K res = resultant(f, f.derivative());
    K d = res / f.lc();
    int n = f.degree();
    if (((n * (n - 1)) / 2) % 2) d = -d;
    return d;
}

// Lagrange interpolation through distinct nodes; field coefficients.
template <class K>
UniPoly<K> interpolate(const std::vector<K>& xs, const std::vector<K>& ys) {
    assert(xs.size() == ys.size() && !xs.empty());
    UniPoly<K> acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        UniPoly<K> basis = UniPoly<K>::constant(one_like(xs[0]));
        K denom = one_like(xs[0]);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * UniPoly<K>(std::vector<K>{-xs[j], one_like(xs[0])});
            denom = denom * (xs[i] - xs[j]);
        }
        acc = acc + basis.scaled(ys[i] / denom);
    }
    return acc;
}

// ---- Int/Rat specific helpers ----

inline UniPoly<Rat> to_rat_poly(const UniPoly<Int>& f) {
    std::vector<Rat> c;
    c.reserve((size_t)f.degree() + 1);
    for (auto& x : f.coeffs()) c.emplace_back(x);
    return UniPoly<Rat>(std::move(c));
}

inline Int poly_content(const UniPoly<Int>& f) {
    Int g(0);
    for (auto& c : f.coeffs()) g = gcd(g, c);
    return g;
}

// Clears denominators and divides out integer content; keeps the sign of
// the leading coefficient.
inline UniPoly<Int> primitive_part(const UniPoly<Rat>& f) {
    if (f.is_zero_poly()) return UniPoly<Int>();
    Int l(1);
    for (auto& c : f.coeffs()) l = lcm(l, den(c));
    std::vector<Int> ic;
    for (auto& c : f.coeffs()) ic.push_back(num(c) * exact_div(l, den(c)));
    UniPoly<Int> g{std::move(ic)};
    Int content = poly_content(g);
    if (g.lc() < 0) content = -content;
    std::vector<Int> out;
    for (auto& c : g.coeffs()) out.push_back(exact_div(c, content));
    return UniPoly<Int>(std::move(out));
}

inline UniPoly<Int> primitive_part(const UniPoly<Int>& f) {
    if (f.is_zero_poly()) return f;
    Int content = poly_content(f);
    if (f.lc() < 0) content = -content;
    std::vector<Int> out;
    for (auto& c : f.coeffs()) out.push_back(exact_div(c, content));
    return UniPoly<Int>(std::move(out));
}

inline Rat resultant(const UniPoly<Int>& f, const UniPoly<Int>& g) {
    return resultant(to_rat_poly(f), to_rat_poly(g));
}

inline Rat discriminant(const UniPoly<Int>& f) {
    return discriminant(to_rat_poly(f));
}

inline bool is_integral(const UniPoly<Rat>& f) {
    for (auto& c : f.coeffs())
        if (!is_integer(c)) return false;
    return true;
}

inline UniPoly<Int> to_int_poly(const UniPoly<Rat>& f) {
    if (!is_integral(f)) throw ArgumentError("to_int_poly: non-integral coefficients");
    std::vector<Int> c;
    for (auto& x : f.coeffs()) c.push_back(num(x));
    return UniPoly<Int>(std::move(c));
}

} // namespace bsdsurf
