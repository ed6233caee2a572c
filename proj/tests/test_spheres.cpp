#include <string>

#include "doctest.h"
#include "superconf/errors.hpp"
#include "superconf/spheres.hpp"

using namespace superconf;

namespace {
constexpr int L = 5;
using RSF = RationalSuperfunction;
RSF z() { return RSF::z(L, 2); }
RSF c(long v) { return RSF::scalar(L, 2, GaussianRational(v)); }
RSF ci() { return RSF::scalar(L, 2, GaussianRational::i()); }
RSF k(const Supernumber& s) { return RSF::constant(L, 2, s); }
RSF thp() { return RSF::theta(L, 2, Odd::Plus); }
RSF thm() { return RSF::theta(L, 2, Odd::Minus); }
Supernumber zeta(int j) { return Supernumber::generator(L, j); }
Supernumber num(long v) { return Supernumber(L, v); }
Supernumber zero() { return Supernumber(L); }

AutomorphismParams trivial_params(int n) { return action_params(n, group_identity(L)); }

GroupElement negated(const GroupElement& g, bool flip_eps) {
    return {-g.a, -g.b, -g.c, -g.d, flip_eps ? -g.eps : g.eps};
}
}  // namespace

TEST_CASE("sphere transition") {
    SuperconformalMap t0 = sphere_transition(0, L);
    CHECK(t0.g_plus == ci() * z().inverse());
    CHECK(t0.g_minus == ci() * z().inverse());
    SuperconformalMap t1 = sphere_transition(1, L);
    CHECK(t1.g_plus == ci());
    CHECK(t1.g_minus == ci() * z().pow(-2));
    for (int n = -4; n <= 4; ++n) {
        SuperSphere s = make_sphere(n, L);
        CHECK(sc_check(s.transition).ok());
        CHECK(s.transition.f == z().inverse());
        N1SuperanalyticMap h = sc_F1(s.transition);
        CHECK(h.f1 == RSF::z(L, 1).inverse());
        CHECK(h.g == RSF::scalar(L, 1, GaussianRational::i()) * RSF::z(L, 1).pow(n - 1));
        CHECK(h.psi.is_zero());
    }
}

TEST_CASE("aut_build examples") {
    for (int n = -4; n <= 4; ++n) CHECK(aut_build(trivial_params(n)).southern == SuperconformalMap::identity(L));

    AutomorphismParams p = trivial_params(3);
    p.psi_minus[0] = zeta(1);
    SuperconformalMap m = aut_build(p).southern;
    CHECK(m.f == z());
    CHECK(m.psi_minus == k(zeta(1)));
    CHECK(m.g_plus == c(1));
    CHECK(m.g_minus == c(1));
    CHECK(sc_check(m).ok());
    FullMap full = sc_expand(m);
    CHECK(full.z == z() + thp() * k(zeta(1)));
    CHECK(full.theta_plus == thp());
    CHECK(full.theta_minus == k(zeta(1)) + thm());

    AutomorphismParams bad = trivial_params(0);
    bad.eps_minus = num(2);
    CHECK_THROWS_AS(aut_build(bad), InvalidParams);

    AutomorphismParams det = trivial_params(2);
    det.a = num(2);
    CHECK_THROWS_AS(aut_build(det), InvalidParams);
    AutomorphismParams count = trivial_params(2);
    count.psi_minus.pop_back();
    CHECK_THROWS_AS(aut_build(count), InvalidParams);
    AutomorphismParams parity = trivial_params(-2);
    parity.psi_plus[1] = num(1);
    CHECK_THROWS_AS(aut_build(parity), InvalidParams);
    AutomorphismParams outside = trivial_params(2);
    outside.psi_minus[0] = zeta(L);
    CHECK_THROWS_AS(aut_build(outside), InvalidParams);
}

TEST_CASE("every regime builds superconformal maps with admissible poles") {
    Sampler s(11);
    for (int n = -4; n <= 4; ++n)
        for (int j = 0; j < 12; ++j) {
            CAPTURE(n);
            AutomorphismParams p = random_params(s, n, L);
            SphereAutomorphism t = aut_build(p);
            auto diag = sc_check(t.southern);
            CHECK_MESSAGE(diag.ok(), diag.summary());
            CHECK(southern_pole_violations(t.southern).empty());
        }
}

TEST_CASE("northern chart") {
    for (int n = -3; n <= 3; ++n) {
        NorthernView v = aut_to_north(aut_build(trivial_params(n)));
        CHECK(v.north == SuperconformalMap::identity(L));
        CHECK(v.consistent());
    }
    // body Möbius (a,b,c,d) becomes (d,c,b,a) in the north
    Supernumber a = num(2), b = num(1), cc = num(3), d = num(2);
    GroupElement g{a, b, cc, d, num(1)};
    for (int n = -2; n <= 2; ++n) {
        NorthernView v = aut_to_north(group_action(n, g));
        CHECK(v.north.f == (k(d) * z() + k(cc)) / (k(b) * z() + k(a)));
        CHECK(v.pole_violations.empty());
    }
}

TEST_CASE("northern chart agrees with the closed formulas on random automorphisms") {
    Sampler s(23);
    for (int n = -4; n <= 4; ++n)
        for (int j = 0; j < 4; ++j) {
            CAPTURE(n);
            NorthernView v = aut_to_north(aut_build(random_params(s, n, L)));
            std::string mism;
            for (auto& x : v.formula_mismatches) mism += x + " ";
            CHECK_MESSAGE(v.formula_mismatches.empty(), mism);
            CHECK(v.pole_violations.empty());
        }
}

TEST_CASE("aut_validate") {
    AutomorphismParams p = trivial_params(1);
    p.psi_minus[2] = zeta(1);
    AutomorphismParams r = aut_validate(aut_build(p).southern, 1);
    CHECK(r.psi_minus[2] == zeta(1));
    CHECK(r == p);

    SuperconformalMap bad = SuperconformalMap::identity(L);
    bad.psi_plus = k(zeta(1));
    CHECK_THROWS_AS(aut_validate(bad, 2), NotInFamily);
}

TEST_CASE("aut_validate roundtrip and tie-break") {
    Sampler s(5);
    for (int n = -4; n <= 4; ++n)
        for (int j = 0; j < 12; ++j) {
            CAPTURE(n);
            AutomorphismParams p = random_params(s, n, L);
            SphereAutomorphism t = aut_build(p);
            AutomorphismParams r = aut_validate(t.southern, n);
            CHECK(aut_build(r) == t);
            bool same = r.a == p.a && r.b == p.b && r.c == p.c && r.d == p.d;
            bool flipped = r.a == -p.a && r.b == -p.b && r.c == -p.c && r.d == -p.d;
            CHECK((same || flipped));
            if (same) CHECK(r == p);
        }
}

TEST_CASE("closure under composition and inversion") {
    Sampler s(8);
    for (int n = -4; n <= 4; ++n)
        for (int j = 0; j < 6; ++j) {
            CAPTURE(n);
            SphereAutomorphism t1 = aut_build(random_params(s, n, L));
            SphereAutomorphism t2 = aut_build(random_params(s, n, L));
            SphereAutomorphism comp = aut_compose(t2, t1);
            CHECK_NOTHROW(aut_validate(comp.southern, n));
            SphereAutomorphism inv = aut_inverse(t1);
            CHECK(aut_compose(t1, inv).southern == SuperconformalMap::identity(L));
            CHECK(aut_validate(aut_compose(inv, t1).southern, n) == trivial_params(n));
        }
}

TEST_CASE("Möbius automorphisms compose as matrices") {
    Sampler s(31);
    for (int n = -3; n <= 3; ++n)
        for (int j = 0; j < 6; ++j) {
            GroupElement x = random_group_element(s, L), y = random_group_element(s, L);
            x.eps = y.eps = num(1);
            SphereAutomorphism tx = aut_build(action_params(n, x)), ty = aut_build(action_params(n, y));
            AutomorphismParams r = aut_validate(aut_compose(tx, ty).southern, n);
            GroupElement xy = group_multiply(x, y);
            bool same = r.a == xy.a && r.b == xy.b && r.c == xy.c && r.d == xy.d;
            bool flipped = r.a == -xy.a && r.b == -xy.b && r.c == -xy.c && r.d == -xy.d;
            CHECK((same || flipped));
        }
}

TEST_CASE("group action") {
    for (int n = -3; n <= 3; ++n) CHECK(group_action(n, group_identity(L)).southern == SuperconformalMap::identity(L));
    GroupElement k0{num(-1), zero(), zero(), num(-1), num(-1)};
    CHECK(group_action(0, k0).southern == SuperconformalMap::identity(L));
    GroupElement k1{num(-1), zero(), zero(), num(-1), num(1)};
    CHECK(group_action(1, k1).southern == SuperconformalMap::identity(L));
    GroupElement bad{num(2), zero(), zero(), num(1), num(1)};
    CHECK_THROWS_AS(group_action(2, bad), InvalidParams);

    Sampler s(41);
    for (int n = -4; n <= 4; ++n)
        for (int j = 0; j < 8; ++j) {
            GroupElement g = random_group_element(s, L);
            SphereAutomorphism t = group_action(n, g);
            CHECK(sc_check(t.southern).ok());
            CHECK(aut_build(action_params(n, g)) == t);
            GroupElement h = random_group_element(s, L);
            CHECK(sc_compose(group_action(n, g).southern, group_action(n, h).southern) ==
                  group_action(n, group_multiply(g, h)).southern);
        }
}

TEST_CASE("double cover kernel") {
    Sampler s(43);
    for (int n = -4; n <= 4; ++n)
        for (int j = 0; j < 8; ++j) {
            CAPTURE(n);
            GroupElement g = random_group_element(s, L);
            CHECK(kernel_check(n, g, g));
            bool even = n % 2 == 0;
            CHECK(kernel_check(n, g, negated(g, even)));
            CHECK_FALSE(kernel_check(n, g, negated(g, !even)));
            GroupElement h = random_group_element(s, L);
            GroupElement quotient = group_multiply(g, group_inverse(h));
            CHECK(kernel_check(n, g, h) == in_kernel(n, quotient));
            GroupElement twin = group_multiply(negated(group_identity(L), even), g);
            CHECK(in_kernel(n, group_multiply(twin, group_inverse(g))));
        }
}

TEST_CASE("odd translations") {
    for (int n : {-3, -2, 2, 3}) {
        std::vector<Supernumber> zeros(static_cast<std::size_t>(std::abs(n) + 2), zero());
        CHECK(odd_translation(n, zeros).southern == SuperconformalMap::identity(L));
    }
    SphereAutomorphism t = odd_translation(2, {zero(), zero(), zero(), zeta(1)});
    FullMap full = sc_expand(t.southern);
    CHECK(full.z == z() + thp() * k(zeta(1)));
    CHECK(full.theta_plus == thp());
    CHECK(full.theta_minus == k(zeta(1)) + thm());
    CHECK_THROWS_AS(odd_translation(2, {zero(), zero(), zeta(1)}), InvalidParams);
    CHECK_THROWS_AS(odd_translation(2, {zero(), zero(), zero(), num(1)}), InvalidParams);
    CHECK_THROWS_AS(odd_translation(1, {zero(), zero(), zero()}), InvalidParams);

    Sampler s(47);
    for (int n : {-4, -3, -2, 2, 3, 4})
        for (int j = 0; j < 6; ++j) {
            CAPTURE(n);
            const int len = std::abs(n) + 2;
            auto u = random_odd_vector(s, len, L), v = random_odd_vector(s, len, L);
            std::vector<Supernumber> sum;
            for (int i = 0; i < len; ++i) sum.push_back(u[static_cast<std::size_t>(i)] + v[static_cast<std::size_t>(i)]);
            SphereAutomorphism tu = odd_translation(n, u), tv = odd_translation(n, v);
            CHECK(aut_compose(tv, tu) == odd_translation(n, sum));
            CHECK(aut_compose(tu, tv) == aut_compose(tv, tu));
            CHECK_NOTHROW(aut_validate(tu.southern, n));
        }
}

TEST_CASE("conjugating a translation by the group action") {
    Sampler s(53);
    for (int n : {-4, -3, -2, 2, 3, 4})
        for (int j = 0; j < 5; ++j) {
            CAPTURE(n);
            GroupElement g = random_group_element(s, L);
            auto u = random_odd_vector(s, std::abs(n) + 2, L);
            SuperconformalMap act = group_action(n, g).southern;
            SuperconformalMap back = group_action(n, group_inverse(g)).southern;
            SuperconformalMap conj = sc_compose(act, sc_compose(odd_translation(n, u).southern, back));
            CHECK(conj == odd_translation(n, conjugated_translation(n, g, u)).southern);
        }
}

TEST_CASE("determinant normalization") {
    Supernumber a = num(1) + zeta(1) * zeta(2), b = num(1), c = zero(), d = num(1);
    normalize_determinant(a, b, c, d);
    CHECK(a * d - b * c == num(1));
    Supernumber a2 = num(2), b2 = zero(), c2 = zero(), d2 = num(1);
    CHECK_THROWS_AS(normalize_determinant(a2, b2, c2, d2), InvalidParams);
}
