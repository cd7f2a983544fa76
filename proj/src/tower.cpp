#include "bsdsurf/tower.hpp"

#include "bsdsurf/factor_fp.hpp"
#include "bsdsurf/factor_rat.hpp"

namespace bsdsurf {

namespace {

// Res_x(f(x), (y - x)^2 - c^2 D) as a polynomial in y, monic of degree
// six; computed by evaluation-interpolation (f monic, so evaluation
// commutes with the resultant).
UniPoly<Rat> gamma_minpoly(const UniPoly<Rat>& f, const Int& D, int c) {
    std::vector<Rat> xs, ys;
    Rat c2D = Rat(Int(c) * Int(c) * D);
    for (int k = 0; k <= 6; ++k) {
        Rat y0(k);
        UniPoly<Rat> q(std::vector<Rat>{y0 * y0 - c2D, Rat(-2) * y0, Rat(1)});
        xs.push_back(y0);
        ys.push_back(resultant(f, q));
    }
    return interpolate(xs, ys);
}

bool coords_less(const NFElement& a, const NFElement& b) {
    const auto& ca = a.coords();
    const auto& cb = b.coords();
    for (size_t i = 0; i < ca.size(); ++i)
        if (ca[i] != cb[i]) return ca[i] < cb[i];
    return false;
}

} // namespace

NFElement Tower::embed_K(const NFElement& a) const {
    if (a.field() != K) throw ArgumentError("Tower::embed_K: element not in K");
    // a = x + y*w; w = (1 + sqrt(D))/2 or sqrt(D) depending on the model
    const Rat& x = a.coords()[0];
    const Rat& y = a.coords()[1];
    NFElement w_L = (disc_sf % 4 == 1)
                        ? (L->one() + sqrtD_L) * L->from_rat(make_rat(1, 2))
                        : sqrtD_L;
    return L->from_rat(x) + L->from_rat(y) * w_L;
}

TowerPtr build_tower(const UniPoly<Rat>& f, const UniPoly<Rat>& theta_minpoly,
                     const UniPoly<Rat>& psi_rule, bool swap_theta_labels) {
    auto T = std::make_shared<Tower>();
    // -- cubic
    if (f.degree() != 3 || f.lc() != 1 || !is_integral(f))
        throw TowerError("build_tower: f must be a monic integral cubic");
    if (!is_irreducible_over_q(f)) throw TowerError("build_tower: f is reducible");
    Rat disc = discriminant(f);
    Int disc_z = num(disc);
    if (disc_z > 0 && is_perfect_square(disc_z))
        throw TowerError("build_tower: disc(f) is a square (cyclic cubic, no quadratic subfield)");
    T->f = f;
    T->disc_f = disc_z;
    T->disc_sf = squarefree_part(disc_z);
    T->s = isqrt_exact(exact_div(disc_z, T->disc_sf));

    // -- quadratic data
    if (theta_minpoly.degree() != 2 || theta_minpoly.lc() != 1 || !is_integral(theta_minpoly))
        throw TowerError("build_tower: theta minimal polynomial must be a monic integral quadratic");
    Int tr = -num(theta_minpoly[1]);
    Int nm = num(theta_minpoly[0]);
    Int disc_theta = tr * tr - 4 * nm;
    if (disc_theta == 0 || is_perfect_square(disc_theta))
        throw TowerError("build_tower: theta minimal polynomial is reducible");
    if (squarefree_part(disc_theta) != T->disc_sf)
        throw TowerError("build_tower: disc(theta) and disc(f) lie in different square classes");
    T->theta_min = theta_minpoly;
    T->theta_trace = tr;
    T->theta_norm = nm;

    // -- psi rule
    if (psi_rule.degree() > 2 || psi_rule.is_zero_poly())
        throw TowerError("build_tower: psi rule must be nonzero of degree <= 2");
    T->psi_rule = psi_rule;

    const Int& D = T->disc_sf;

    // -- K0 and K
    T->K0 = NumberField::create(f, false); // irreducibility verified above
    UniPoly<Rat> gK;
    if (((D % 4) + 4) % 4 == 1) {
        gK = UniPoly<Rat>(std::vector<Rat>{Rat(exact_div(1 - D, 4)), Rat(-1), Rat(1)});
    } else {
        gK = UniPoly<Rat>(std::vector<Rat>{Rat(-D), Rat(0), Rat(1)});
    }
    T->K = NumberField::create(gK, false);
    T->sqrtD_K = (((D % 4) + 4) % 4 == 1)
                     ? T->K->element({Rat(-1), Rat(2)})
                     : T->K->generator();

    // -- theta in K: (tr +- t*sqrt(D))/2 with t = sqrt(disc_theta / D)
    Rat t2 = Rat(disc_theta) / Rat(D);
    if (!is_integer(t2) || !is_perfect_square(num(t2)))
        throw TowerError("build_tower: square-class bookkeeping failed");
    Int t = isqrt_exact(num(t2));
    NFElement half = T->K->from_rat(make_rat(1, 2));
    NFElement th_plus = (T->K->from_rat(Rat(tr)) + T->K->from_rat(Rat(t)) * T->sqrtD_K) * half;
    NFElement th_minus = (T->K->from_rat(Rat(tr)) - T->K->from_rat(Rat(t)) * T->sqrtD_K) * half;
    if (coords_less(th_minus, th_plus)) std::swap(th_plus, th_minus);
    // th_plus is now the lexicographically smaller root
    T->theta_K = th_plus;
    T->theta_bar_K = th_minus;
    if (swap_theta_labels) std::swap(T->theta_K, T->theta_bar_K);
    T->labels_swapped = swap_theta_labels;
    if (T->theta_K.denominator() != 1)
        throw TowerError("build_tower: theta is not an algebraic integer");

    // -- L = Q(gamma), gamma = phi + c*sqrt(D)
    UniPoly<Rat> R;
    int c = 0;
    for (c = 1; c <= 24; ++c) {
        R = gamma_minpoly(f, D, c);
        if (R.degree() == 6 && poly_gcd(R, R.derivative()).degree() == 0) break;
    }
    if (c > 24) throw TowerError("build_tower: no primitive element found");
    T->gamma_c = c;
    T->L = NumberField::create(R, true);
    NFElement gamma = T->L->generator();

    // phi0: the common root of f and (gamma - x)^2 - c^2 D in L
    UniPoly<NFElement> fL = lift_to_field(f, T->L);
    Rat c2D = Rat(Int(c) * Int(c) * D);
    UniPoly<NFElement> h2(std::vector<NFElement>{gamma * gamma - T->L->from_rat(c2D),
                                                 -(gamma + gamma), T->L->one()});
    UniPoly<NFElement> lin = poly_gcd(fL, h2);
    if (lin.degree() != 1)
        throw TowerError("build_tower: root extraction in L failed");
    NFElement phi0 = -lin[0];
    T->sqrtD_L = (gamma - phi0) * T->L->from_rat(make_rat(1, c));
    if (T->sqrtD_L * T->sqrtD_L != T->L->from_rat(Rat(D)))
        throw TowerError("build_tower: sqrt(D) verification failed in L");

    // remaining roots by the closed form applied at phi0:
    // phi_{1,2} = (-a2 - phi0 +- sqrt(disc f)/f'(phi0)) / 2
    NFElement sqrt_disc_f = T->L->from_rat(Rat(T->s)) * T->sqrtD_L;
    NFElement fprime = eval_at(f.derivative(), phi0);
    NFElement delta = sqrt_disc_f * fprime.inverse();
    NFElement a2 = T->L->from_rat(f[2]);
    NFElement halfL = T->L->from_rat(make_rat(1, 2));
    NFElement phi1 = (-a2 - phi0 + delta) * halfL;
    NFElement phi2 = (-a2 - phi0 - delta) * halfL;
    T->phi_[0] = phi0;
    T->phi_[1] = phi1;
    T->phi_[2] = phi2;
    for (int i = 0; i < 3; ++i) {
        if (!eval_at(f, T->phi_[i]).is_zero())
            throw TowerError("build_tower: computed root does not satisfy f");
        T->psi_[i] = eval_at(psi_rule, T->phi_[i]);
    }
    if (T->phi_[0] == T->phi_[1] || T->phi_[0] == T->phi_[2] || T->phi_[1] == T->phi_[2])
        throw TowerError("build_tower: roots of f in L are not distinct");

    // (1, phi, psi) must be a Q-basis of K0
    {
        UniPoly<Rat> x(std::vector<Rat>{Rat(0), Rat(1)});
        UniPoly<Rat> psired = poly_mod(psi_rule, f);
        std::vector<UniPoly<Rat>> rows{UniPoly<Rat>::constant(Rat(1)), x, psired};
        // 3x3 determinant of coordinate rows
        Rat m[3][3];
        for (int r = 0; r < 3; ++r)
            for (int cidx = 0; cidx < 3; ++cidx)
                m[r][cidx] = rows[(size_t)r].coeff_or_zero((size_t)cidx, Rat(0));
        Rat det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                  m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                  m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (det == 0)
            throw TowerError("build_tower: (1, phi, psi) is not a basis of the cubic field");
    }

    // theta embedded in L; trace and norm must come out rational
    T->theta_L = T->embed_K(T->theta_K);
    T->theta_bar_L = T->embed_K(T->theta_bar_K);
    NFElement sum = T->theta_L + T->theta_bar_L;
    NFElement prod = T->theta_L * T->theta_bar_L;
    if (!sum.is_rational() || sum.rational_value() != Rat(tr) || !prod.is_rational() ||
        prod.rational_value() != Rat(nm))
        throw TowerError("build_tower: theta embedding verification failed");
    return T;
}

SplittingInfo splitting_type_in_L(const Int& p, const Tower& T) {
    if (!is_prime(p)) throw ArgumentError("splitting_type_in_L: p not prime");
    if (T.disc_f % p == 0 || num(T.K->disc()) % p == 0)
        throw RamifiedPrime("splitting_type_in_L: " + p.get_str() +
                            " may ramify in L (divides disc data)");
    int64_t pv = p.get_si();
    SplittingInfo info;
    auto ffac = factor_mod_p(to_int_poly(T.f), pv);
    for (auto& [g, m] : ffac.factors)
        for (int i = 0; i < m; ++i) info.cubic_degrees.push_back(g.degree());
    auto kfac = factor_mod_p(T.K->defining_poly_z(), pv);
    info.split_in_K = kfac.factors.size() == 2;
    if (pv != 2) {
        // cross-check the quadratic character of disc(f)
        int leg = legendre_symbol(T.disc_f, pv);
        if ((leg == 1) != info.split_in_K)
            throw ArgumentError("splitting_type_in_L: quadratic character inconsistency");
    }
    if (info.cubic_degrees.size() == 1 && info.split_in_K)
        info.type = SplittingType::TwoPrimesInert;
    else if (info.cubic_degrees.size() == 3 && info.split_in_K)
        info.type = SplittingType::SplitsCompletely;
    else
        info.type = SplittingType::Other;
    return info;
}

UnramifiedStatus is_unramified_L_over_K(const Tower& T) {
    return is_squarefree(T.disc_f) ? UnramifiedStatus::Yes : UnramifiedStatus::Unknown;
}

} // namespace bsdsurf
