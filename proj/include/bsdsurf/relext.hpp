#pragma once

#include <memory>

#include "bsdsurf/unipoly.hpp"

namespace bsdsurf {

// E[t]/(modulus) for a field element type E. Supplies exactly the field
// interface UniPoly needs, so towers of extensions compose
// (RelExtElem<RelExtElem<...>> works).
template <class E>
struct RelExtCtx {
    UniPoly<E> modulus; // monic, degree >= 1
    explicit RelExtCtx(UniPoly<E> m) : modulus(std::move(m)) {
        if (modulus.degree() < 1) throw ArgumentError("RelExtCtx: modulus must be nonconstant");
    }
};

template <class E>
using RelCtxPtr = std::shared_ptr<const RelExtCtx<E>>;

template <class E>
class RelExtElem {
  public:
    RelExtElem() = default;
    RelExtElem(RelCtxPtr<E> ctx, UniPoly<E> value) : ctx_(std::move(ctx)) {
        if (!ctx_) {
            if (!value.is_zero_poly())
                throw ArgumentError("RelExtElem: nonzero value without context");
        } else {
            v_ = value.degree() < ctx_->modulus.degree() ? std::move(value)
                                                         : poly_mod(value, ctx_->modulus);
        }
    }

    static RelExtElem from_base(const RelCtxPtr<E>& ctx, const E& e) {
        return RelExtElem(ctx, UniPoly<E>::constant(e));
    }
    static RelExtElem gen(const RelCtxPtr<E>& ctx) {
        E one = one_like(ctx->modulus.lc());
        return RelExtElem(ctx, UniPoly<E>::monomial(one, 1));
    }

    const RelCtxPtr<E>& ctx() const { return ctx_; }
    const UniPoly<E>& value() const { return v_; }
    bool is_zero_elem() const { return v_.is_zero_poly(); }

    RelExtElem operator-() const { return raw(ctx_, -v_); }
    friend RelExtElem operator+(const RelExtElem& a, const RelExtElem& b) {
        return raw(a.ctx_ ? a.ctx_ : b.ctx_, a.v_ + b.v_);
    }
    friend RelExtElem operator-(const RelExtElem& a, const RelExtElem& b) {
        return raw(a.ctx_ ? a.ctx_ : b.ctx_, a.v_ - b.v_);
    }
    friend RelExtElem operator*(const RelExtElem& a, const RelExtElem& b) {
        const RelCtxPtr<E>& c = a.ctx_ ? a.ctx_ : b.ctx_;
        if (!c) return RelExtElem();
        return RelExtElem(c, a.v_ * b.v_);
    }
    friend RelExtElem operator/(const RelExtElem& a, const RelExtElem& b) { return a * b.inverse(); }
    friend bool operator==(const RelExtElem& a, const RelExtElem& b) { return a.v_ == b.v_; }
    friend bool operator!=(const RelExtElem& a, const RelExtElem& b) { return !(a == b); }

    RelExtElem inverse() const {
        if (!ctx_ || v_.is_zero_poly()) throw ArgumentError("RelExtElem: inverse of zero");
        auto [g, s, t] = poly_ext_gcd(v_, ctx_->modulus);
        if (g.degree() != 0) throw ArgumentError("RelExtElem: modulus not irreducible over base");
        return RelExtElem(ctx_, s);
    }

    RelExtElem pow(Int e) const {
        if (e < 0) return inverse().pow(-e);
        RelExtElem r = from_base(ctx_, one_like(ctx_->modulus.lc()));
        RelExtElem base = *this;
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = r * base;
            base = base * base;
            e >>= 1;
        }
        return r;
    }

  private:
    static RelExtElem raw(RelCtxPtr<E> ctx, UniPoly<E> v) {
        RelExtElem e;
        e.ctx_ = std::move(ctx);
        e.v_ = std::move(v);
        return e;
    }
    RelCtxPtr<E> ctx_;
    UniPoly<E> v_; // reduced mod modulus
};

template <class E>
RelExtElem<E> zero_like(const RelExtElem<E>& a) {
    RelExtElem<E> z(a.ctx(), UniPoly<E>());
    return z;
}

template <class E>
RelExtElem<E> one_like(const RelExtElem<E>& a) {
    return RelExtElem<E>::from_base(a.ctx(), one_like(a.ctx()->modulus.lc()));
}

template <class E>
bool is_zero(const RelExtElem<E>& a) {
    return a.is_zero_elem();
}

// Lift a base polynomial's coefficients into the extension.
template <class E>
UniPoly<RelExtElem<E>> lift_to_ext(const UniPoly<E>& p, const RelCtxPtr<E>& ctx) {
    std::vector<RelExtElem<E>> c;
    for (auto& x : p.coeffs()) c.push_back(RelExtElem<E>::from_base(ctx, x));
    return UniPoly<RelExtElem<E>>(std::move(c));
}

} // namespace bsdsurf
