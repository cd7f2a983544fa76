#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "bsdsurf/factor_rat.hpp"
#include "bsdsurf/numberfield.hpp"
#include "bsdsurf/primeideal.hpp"
#include "bsdsurf/tower.hpp"
#include "support.hpp"

using namespace bsdsurf;
using namespace testsupport;

static TowerPtr tower_bsd1() {
    return build_tower(qpoly({-1, -1, 0, 1}), qpoly({48, 13, 1}), qpoly({0, 0, 1}));
}
static TowerPtr tower_bsd2() {
    return build_tower(qpoly({1, 1, 0, 1}), qpoly({35, -4, 1}), qpoly({0, 0, 1}));
}

TEST_CASE("tower of x^3-x-1 with theta^2+13theta+48") {
    auto T = tower_bsd1();
    CHECK(T->disc_f == -23);
    CHECK(T->disc_sf == -23);
    CHECK(T->s == 1);
    CHECK(T->theta_trace == -13);
    CHECK(T->theta_norm == 48);
    CHECK(T->L->degree() == 6);
    CHECK((T->theta_K * T->theta_bar_K).rational_value() == Rat(48));
    CHECK((T->theta_K + T->theta_bar_K).rational_value() == Rat(-13));
}

TEST_CASE("tower of x^3+x+1 with theta^2-4theta+35") {
    auto T = tower_bsd2();
    CHECK(T->disc_f == -31);
    CHECK((T->theta_K * T->theta_bar_K).rational_value() == Rat(35));
    CHECK((T->theta_K + T->theta_bar_K).rational_value() == Rat(4));
}

TEST_CASE("cyclic cubic is rejected") {
    // disc(x^3-3x-1) = -4(-3)^3 - 27 = 81, a square
    CHECK(discriminant(qpoly({-1, -3, 0, 1})) == Rat(81));
    CHECK_THROWS_AS(build_tower(qpoly({-1, -3, 0, 1}), qpoly({48, 13, 1}), qpoly({0, 0, 1})),
                    TowerError);
}

TEST_CASE("square-class mismatch is rejected") {
    // theta from the -31 class over the -23 cubic
    CHECK_THROWS_AS(build_tower(qpoly({-1, -1, 0, 1}), qpoly({35, -4, 1}), qpoly({0, 0, 1})),
                    TowerError);
}

TEST_CASE("reducible inputs are rejected") {
    CHECK_THROWS_AS(build_tower(qpoly({0, -1, 0, 1}), qpoly({48, 13, 1}), qpoly({0, 0, 1})),
                    TowerError);
    CHECK_THROWS_AS(build_tower(qpoly({-1, -1, 0, 1}), qpoly({36, 13, 1}), qpoly({0, 0, 1})),
                    TowerError);
}

TEST_CASE("root identities hold exactly in L") {
    for (auto T : {tower_bsd1(), tower_bsd2()}) {
        NFElement sum = T->phi(0) + T->phi(1) + T->phi(2);
        NFElement mixed = T->phi(0) * T->phi(1) + T->phi(0) * T->phi(2) + T->phi(1) * T->phi(2);
        NFElement prod = T->phi(0) * T->phi(1) * T->phi(2);
        CHECK(sum == T->L->from_rat(-T->f[2]));
        CHECK(mixed == T->L->from_rat(T->f[1]));
        CHECK(prod == T->L->from_rat(-T->f[0]));
        for (int i = 0; i < 3; ++i) CHECK(eval_at(T->f, T->phi(i)).is_zero());
        CHECK(T->sqrtD_L * T->sqrtD_L == T->L->from_rat(Rat(T->disc_sf)));
    }
}

TEST_CASE("nf_factor: adjoined square root splits") {
    auto T = tower_bsd1();
    // x^2 + 23 over K = Q(sqrt(-23))
    auto h = UniPoly<NFElement>(std::vector<NFElement>{T->K->from_rat(Rat(23)), T->K->zero(),
                                                       T->K->one()});
    auto fac = nf_factor(h);
    REQUIRE(fac.factors.size() == 2);
    CHECK(fac.factors[0].first.degree() == 1);
    CHECK(fac.factors[1].first.degree() == 1);
    // roots are +- sqrt(-23)
    NFElement r0 = -fac.factors[0].first[0];
    CHECK(r0 * r0 == T->K->from_rat(Rat(-23)));
    // product reproduces the input
    UniPoly<NFElement> prod = UniPoly<NFElement>::constant(fac.unit);
    for (auto& [g, m] : fac.factors)
        for (int i = 0; i < m; ++i) prod = prod * g;
    CHECK(prod == h);
}

TEST_CASE("nf_factor: cubic stays irreducible over the quadratic field") {
    auto T = tower_bsd1();
    auto h = lift_to_field(T->f, T->K);
    auto fac = nf_factor(h);
    REQUIRE(fac.factors.size() == 1);
    CHECK(fac.factors[0].first.degree() == 3);
}

TEST_CASE("nf_factor: the cubic splits completely over L") {
    auto T = tower_bsd1();
    auto h = lift_to_field(T->f, T->L);
    auto fac = nf_factor(h);
    REQUIRE(fac.factors.size() == 3);
    std::set<std::string> roots, expected;
    for (auto& [g, m] : fac.factors) {
        CHECK(g.degree() == 1);
        roots.insert((-g[0]).str());
    }
    for (int i = 0; i < 3; ++i) expected.insert(T->phi(i).str());
    CHECK(roots == expected);
}

TEST_CASE("split_prime spec examples") {
    auto T1 = tower_bsd1();
    SUBCASE("2 splits in Q(sqrt(-23)) via x^2-x+6") {
        CHECK(T1->K->defining_poly() == qpoly({6, -1, 1}));
        auto ps = split_prime(Int(2), T1->K);
        REQUIRE(ps.size() == 2);
        CHECK(ps[0].e == 1);
        CHECK(ps[0].f == 1);
        CHECK(ps[1].e == 1);
        CHECK(ps[1].f == 1);
    }
    SUBCASE("2 is inert in the cubic field of x^3-x-1") {
        auto ps = split_prime(Int(2), T1->K0);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].e == 1);
        CHECK(ps[0].f == 3);
    }
    SUBCASE("23 ramifies in Q(sqrt(-23))") {
        auto ps = split_prime(Int(23), T1->K);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].e == 2);
        CHECK(ps[0].f == 1);
    }
    SUBCASE("5 is inert in the cubic field of x^3+x+1") {
        auto T2 = tower_bsd2();
        auto ps = split_prime(Int(5), T2->K0);
        REQUIRE(ps.size() == 1);
        CHECK(ps[0].f == 3);
    }
}

TEST_CASE("index-divisible prime is refused, never silently wrong") {
    // Dedekind's classic field: 2 always divides the index of Z[x]/(g)
    auto F = NumberField::create(qpoly({-8, -2, -1, 1}));
    CHECK(!dedekind_index_ok(F, Int(2)));
    CHECK_THROWS_AS(split_prime(Int(2), F), UnsupportedPrime);
    CHECK(dedekind_index_ok(F, Int(503)));
}

TEST_CASE("ideal_valuation spec examples") {
    auto T = tower_bsd1();
    auto ps2 = split_prime(Int(2), T->K);
    SUBCASE("valuation of 1 is zero") {
        for (auto& P : ps2) CHECK(ideal_valuation(T->K->one(), P) == 0);
    }
    SUBCASE("v_P(48) = 4 at both primes over 2") {
        for (auto& P : ps2) CHECK(ideal_valuation(T->K->from_rat(Rat(48)), P) == 4);
    }
    SUBCASE("theta and theta-bar split the primes over 5 in Q(sqrt(-31))") {
        auto T2 = tower_bsd2();
        auto ps5 = split_prime(Int(5), T2->K);
        REQUIRE(ps5.size() == 2);
        std::multiset<int> vals{ideal_valuation(T2->theta_K, ps5[0]),
                                ideal_valuation(T2->theta_K, ps5[1])};
        CHECK(vals == std::multiset<int>{0, 1});
        // conjugate has the mirrored valuations
        CHECK(ideal_valuation(T2->theta_K, ps5[0]) ==
              ideal_valuation(T2->theta_bar_K, ps5[1]));
    }
    SUBCASE("valuation of zero is an error") {
        CHECK_THROWS_AS(ideal_valuation(T->K->zero(), ps2[0]), ValuationError);
    }
    SUBCASE("multiplicativity on random elements") {
        for (int trial = 0; trial < 20; ++trial) {
            auto a = T->K->element({Rat(rand_int(-20, 20)), Rat(rand_int(-20, 20))});
            auto b = T->K->element({Rat(rand_int(-20, 20)), Rat(rand_int(-20, 20))});
            if (a.is_zero() || b.is_zero()) continue;
            for (auto& P : ps2)
                CHECK(ideal_valuation(a * b, P) ==
                      ideal_valuation(a, P) + ideal_valuation(b, P));
        }
    }
}

TEST_CASE("splitting type in L") {
    auto T1 = tower_bsd1();
    auto T2 = tower_bsd2();
    auto s5 = splitting_type_in_L(Int(5), *T2);
    CHECK(s5.type == SplittingType::TwoPrimesInert);
    auto s7 = splitting_type_in_L(Int(7), *T2);
    CHECK(s7.type == SplittingType::TwoPrimesInert);
    auto s2 = splitting_type_in_L(Int(2), *T1);
    CHECK(s2.type == SplittingType::TwoPrimesInert);
    CHECK_THROWS_AS(splitting_type_in_L(Int(23), *T1), RamifiedPrime);
    CHECK_THROWS_AS(splitting_type_in_L(Int(31), *T2), RamifiedPrime);
}

TEST_CASE("unramified check: squarefree disc says yes, otherwise unknown") {
    CHECK(is_unramified_L_over_K(*tower_bsd1()) == UnramifiedStatus::Yes);
    CHECK(is_unramified_L_over_K(*tower_bsd2()) == UnramifiedStatus::Yes);
    // x^3+3x+2: disc = -4*27 - 27*4 = -216, not squarefree
    CHECK(discriminant(qpoly({2, 3, 0, 1})) == Rat(-216));
    auto T3 = build_tower(qpoly({2, 3, 0, 1}), qpoly({6, 0, 1}), qpoly({0, 0, 1}));
    CHECK(T3->disc_sf == -6);
    CHECK(is_unramified_L_over_K(*T3) == UnramifiedStatus::Unknown);
}

TEST_CASE("sum of f_P * v_P equals the valuation of the norm") {
    std::vector<FieldPtr> fields;
    fields.push_back(NumberField::create(qpoly({6, -1, 1}), false));   // Q(sqrt(-23))
    fields.push_back(NumberField::create(qpoly({8, -1, 1}), false));   // Q(sqrt(-31))
    fields.push_back(NumberField::create(qpoly({-1, -1, 0, 1}), false));
    fields.push_back(NumberField::create(qpoly({1, 1, 0, 1}), false));
    const long primes[] = {2, 3, 5, 7, 11, 13};
    int done = 0;
    while (done < 100) {
        const auto& F = fields[(size_t)rand_int(0, (long)fields.size() - 1)];
        std::vector<Rat> coords;
        for (int i = 0; i < F->degree(); ++i) coords.emplace_back(rand_int(-15, 15));
        NFElement a = F->element(std::move(coords));
        if (a.is_zero()) continue;
        Int p(primes[rand_int(0, 5)]);
        if (!dedekind_index_ok(F, p)) continue;
        Rat nrm = a.norm();
        REQUIRE(nrm != 0);
        int lhs = 0;
        for (auto& P : split_prime(p, F)) lhs += P.f * ideal_valuation(a, P);
        CHECK(lhs == int_valuation(num(nrm), p));
        ++done;
    }
}

TEST_CASE("quadratic splitting matches the Kronecker symbol") {
    int done = 0;
    while (done < 50) {
        long d = rand_int(-60, 60);
        if (d == 0 || d == 1) continue;
        Int D(d);
        if (!is_squarefree(D)) continue;
        UniPoly<Rat> g = (((D % 4) + 4) % 4 == 1)
                             ? UniPoly<Rat>(std::vector<Rat>{Rat(exact_div(1 - D, 4)), Rat(-1), Rat(1)})
                             : UniPoly<Rat>(std::vector<Rat>{Rat(-D), Rat(0), Rat(1)});
        auto F = NumberField::create(g, false);
        Int disc_K = (((D % 4) + 4) % 4 == 1) ? D : 4 * D;
        const long primes[] = {2, 3, 5, 7, 11, 13, 17, 19};
        Int p(primes[rand_int(0, 7)]);
        auto ps = split_prime(p, F);
        int kro = kronecker_symbol(disc_K, p);
        if (kro == 1) CHECK(ps.size() == 2);
        if (kro == -1) {
            CHECK(ps.size() == 1);
            CHECK(ps[0].f == 2);
        }
        if (kro == 0) {
            CHECK(ps.size() == 1);
            CHECK(ps[0].e == 2);
        }
        ++done;
    }
}

TEST_CASE("reduction mod a prime handles off-prime denominators") {
    auto T = tower_bsd2();
    auto ps5 = split_prime(Int(5), T->K);
    // order so that P1 divides theta
    const PrimeIdeal& P1 = ideal_valuation(T->theta_K, ps5[0]) > 0 ? ps5[0] : ps5[1];
    const PrimeIdeal& P2 = ideal_valuation(T->theta_K, ps5[0]) > 0 ? ps5[1] : ps5[0];
    auto rf1 = residue_field(P1);
    auto rf2 = residue_field(P2);
    CHECK(reduce_mod_prime(T->theta_K, P1, rf1).is_zero_elem());
    CHECK(!reduce_mod_prime(T->theta_K, P2, rf2).is_zero_elem());
    // theta/5 is integral at P2 (v = -? no: v_P2(theta)=0, v_P2(5)=1) -> negative
    NFElement theta_over_5 = T->theta_K * T->K->from_rat(make_rat(1, 5));
    CHECK_THROWS_AS(reduce_mod_prime(theta_over_5, P2, rf2), ValuationError);
    // theta_bar/ theta ratio: v_P2(theta_bar) = 1 so theta_bar/5 has v_P2 = 0
    NFElement tb_over_5 = T->theta_bar_K * T->K->from_rat(make_rat(1, 5));
    CHECK_THROWS_AS(reduce_mod_prime(tb_over_5, P1, rf1), ValuationError);
    auto r = reduce_mod_prime(tb_over_5, P2, rf2);
    // multiply back: r * 5... instead check via an independent identity:
    // reduce(theta * theta_bar / 5) = reduce(35/5) = 7 mod 5 = 2 at P2
    NFElement prod_over_5 = (T->theta_K * T->theta_bar_K) * T->K->from_rat(make_rat(1, 5));
    auto rp = reduce_mod_prime(prod_over_5, P2, rf2);
    auto expect = ResidueElem::from_base(rf2, Fp(7, 5));
    CHECK(rp == expect);
    // and it must equal reduce(theta) * r
    CHECK(rp == reduce_mod_prime(T->theta_K, P2, rf2) * r);
}

TEST_CASE("norms are multiplicative (sanity for the resultant route)") {
    auto T = tower_bsd1();
    for (int trial = 0; trial < 10; ++trial) {
        std::vector<Rat> ca, cb;
        for (int i = 0; i < 6; ++i) ca.emplace_back(rand_int(-5, 5));
        for (int i = 0; i < 6; ++i) cb.emplace_back(rand_int(-5, 5));
        NFElement a = T->L->element(std::move(ca));
        NFElement b = T->L->element(std::move(cb));
        CHECK(a.norm() * b.norm() == (a * b).norm());
    }
}
