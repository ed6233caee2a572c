#include <algorithm>

#include "doctest.h"
#include "superconf/errors.hpp"
#include "superconf/ns_algebra.hpp"
#include "superconf/random.hpp"
#include "superconf/superconformal.hpp"

using namespace superconf;

namespace {
using S = NSBasisSymbol;
using GR = GaussianRational;
NSElement L(int m) { return S::L(m); }
NSElement J(int m) { return S::J(m); }
NSElement Gp(int twice) { return S::G(Odd::Plus, twice); }
NSElement Gm(int twice) { return S::G(Odd::Minus, twice); }
NSElement d() { return S::central(); }
GR q(long a, long b = 1) { return GR::fraction(a, b); }

SuperPolynomial x(int Lg = 0) { return SuperPolynomial::z(Lg, 2); }
SuperPolynomial xp(int e, int Lg = 0) { return SuperPolynomial::power(Lg, 2, Supernumber(Lg, 1), e); }
SuperPolynomial pp(int Lg = 0) { return SuperPolynomial::theta(Lg, 2, Odd::Plus); }
SuperPolynomial pm(int Lg = 0) { return SuperPolynomial::theta(Lg, 2, Odd::Minus); }
}  // namespace

TEST_CASE("symbols") {
    CHECK(S::parse("G+(1/2)") == S::G(Odd::Plus, 1));
    CHECK(S::parse("L(-3)") == S::L(-3));
    CHECK(S::parse("d") == S::central());
    CHECK(S::G(Odd::Minus, -3).to_string() == "G-(-3/2)");
    CHECK(S::G(Odd::Minus, -3).mode() == q(-3, 2));
    CHECK_THROWS_AS(S::G(Odd::Plus, 2), InvalidParams);
    CHECK_THROWS_AS(S::parse("G+(2/2)"), ParseError);
    CHECK_THROWS_AS(S::parse("K(1)"), ParseError);
    CHECK(S::J(1).parity() == Parity::Even);
    CHECK(S::G(Odd::Plus, 1).parity() == Parity::Odd);
}

TEST_CASE("structure constants") {
    CHECK(ns_bracket(Gp(1), Gm(-1)) == L(0) * q(2) + J(0));
    CHECK(ns_bracket(L(2), L(-2)) == L(0) * q(4) + d() * q(1, 2));
    CHECK(ns_bracket(Gp(1), Gp(3)).is_zero());
    CHECK(ns_bracket(J(2), J(-2)) == d() * q(2, 3));
    CHECK(ns_bracket(L(1), J(-1)) == J(0));
    CHECK(ns_bracket(J(-1), L(1)) == -J(0));
    CHECK(ns_bracket(L(-1), Gm(3)) == Gm(1) * q(-2));
    CHECK(ns_bracket(J(1), Gm(1)) == -Gm(3));
    // [G+_{m+½}, G-_{n−½}] at m = 1, n = −1: 2L₀ + 3J₀ + (2/3)d
    CHECK(ns_bracket(Gp(3), Gm(-3)) == L(0) * q(2) + J(0) * q(3) + d() * q(2, 3));
    CHECK(ns_bracket(Gm(-3), Gp(3)) == ns_bracket(Gp(3), Gm(-3)));
    CHECK(ns_bracket(d(), L(3)).is_zero());
}

TEST_CASE("skew supersymmetry on random homogeneous pairs") {
    Sampler s(17);
    auto basis = ns_band_basis(3);
    auto random_element = [&](Parity p) {
        NSElement e;
        for (int i = 0; i < 3; ++i) {
            const S& b = basis[static_cast<std::size_t>(s.uniform(0, static_cast<int>(basis.size()) - 1))];
            if (b.parity() == p) e += NSElement(b, s.scalar());
        }
        return e;
    };
    for (int i = 0; i < 200; ++i) {
        Parity pu = s.coin() ? Parity::Odd : Parity::Even, pv = s.coin() ? Parity::Odd : Parity::Even;
        NSElement u = random_element(pu), v = random_element(pv);
        GR sign(pu == Parity::Odd && pv == Parity::Odd ? 1 : -1);
        CHECK(ns_bracket(u, v) == ns_bracket(v, u) * sign);
    }
}

TEST_CASE("super-Jacobi") {
    CHECK(ns_jacobi_sum(L(1), L(-1), L(0)).is_zero());
    CHECK(ns_jacobi_sum(Gp(1), Gm(-1), J(0)).is_zero());
    CHECK(ns_band_basis(3).size() == 27);
    Verdict v2 = ns_jacobi_check(2);
    CHECK(v2.ok());
    CHECK(v2.checked == 19 * 19 * 19);
    Verdict v3 = ns_jacobi_check(3);
    CHECK(v3.ok());
    CHECK_THROWS_AS(ns_jacobi_sum(L(0) + Gp(1), L(1), L(2)), ParityError);
}

TEST_CASE("representation by superderivations") {
    DerivationField j0 = ns_rep(S::J(0));
    CHECK(j0.dx.is_zero());
    CHECK(j0.dphi_plus == -pp());
    CHECK(j0.dphi_minus == pm());
    DerivationField g = ns_rep(S::G(Odd::Plus, -1));
    CHECK(g.dphi_plus == SuperPolynomial::scalar(0, 2, GR(-1)));
    CHECK(g.dx == pm());
    CHECK(g.dphi_minus.is_zero());
    CHECK(ns_rep(S::central()) == DerivationField::zero(0));
    DerivationField l2 = ns_rep(S::L(2));
    CHECK(l2.dx == -xp(3));
    CHECK(l2.dphi_plus == xp(2) * pp() * q(-3, 2));
    // G-_{3/2}: n = 2
    DerivationField g3 = ns_rep(S::G(Odd::Minus, 3));
    CHECK(g3.dx == xp(2) * pp());
    CHECK(g3.dphi_minus == -xp(2) + xp(1) * pp() * pm() * q(2));

    // the action extends by super-Leibniz
    SuperPolynomial h = xp(2) * pp() * pm();
    CHECK(g.apply(h) == -(xp(2) * pm()));
    CHECK(ns_rep(S::L(-1)).apply(xp(3)) == xp(2) * q(-3));

    CHECK(ns_rep_bracket_check(S::L(1), S::L(-1)).ok());
    CHECK(derivation_bracket(ns_rep(S::L(1)), ns_rep(S::L(-1))) == ns_rep(L(0) * q(2)));
    CHECK(derivation_bracket(ns_rep(S::G(Odd::Plus, 1)), ns_rep(S::G(Odd::Minus, -1))) == ns_rep(L(0) * q(2) + J(0)));
    CHECK(derivation_bracket(ns_rep(S::L(2)), ns_rep(S::L(-2))) == ns_rep(L(0) * q(4)));
    Verdict v = ns_rep_check(3);
    CHECK(v.ok());
    CHECK(v.checked == 27 * 27);
}

TEST_CASE("span coordinates") {
    std::vector<NSElement> b{L(0) - J(0) * q(1, 2), J(0)};
    auto c = ns_span_coordinates(b, L(0));
    REQUIRE(c);
    CHECK((*c)[0] == q(1));
    CHECK((*c)[1] == q(1, 2));
    CHECK_FALSE(ns_span_coordinates(b, L(1)));
}

TEST_CASE("g_n bases") {
    auto g0 = g_n_basis(0);
    CHECK(g0.size() == 8);
    for (const auto& e : {L(-1), L(0), L(1), J(0), Gp(-1), Gp(1), Gm(-1), Gm(1)})
        CHECK(ns_span_coordinates(g0, e));
    auto g5 = g_n_basis(5);
    CHECK(g5.size() == 4 + 7);
    for (int k = 0; k <= 6; ++k) CHECK(g5[static_cast<std::size_t>(4 + k)] == Gm(2 * k - 1));
    auto gm1 = g_n_basis(-1);
    CHECK(std::find(gm1.begin(), gm1.end(), Gp(3)) != gm1.end());
    CHECK(std::find(gm1.begin(), gm1.end(), Gm(-1)) != gm1.end());
    auto g1 = g_n_basis(1);
    CHECK(g1[1] == L(0) - J(0) * q(1, 2));
    CHECK(g1[2] == L(1) - J(1));
    for (int n = -6; n <= 6; ++n) {
        auto [e, o] = g_n_expected_dimensions(n);
        CHECK(e == 4);
        CHECK(o == (std::abs(n) <= 2 ? 4 : std::abs(n) + 2));
        CHECK(static_cast<int>(g_n_basis(n).size()) == e + o);
    }
}

TEST_CASE("g_n closure and the sigma table") {
    ClosureReport r0 = g_n_closure_check(0);
    CHECK(r0.verdict.ok());
    CHECK(r0.table.size() == 36);
    for (int n = -6; n <= 6; ++n) {
        CAPTURE(n);
        ClosureReport r = g_n_closure_check(n);
        CHECK_MESSAGE(r.verdict.ok(), (r.verdict.failures.empty() ? "" : r.verdict.failures.front()));
    }
    auto g3 = g_n_basis(3);
    CHECK(ns_bracket(g3[2], Gm(7)).is_zero());
    for (int k = 0; k <= 4; ++k) CHECK(ns_bracket(J(0), Gm(2 * k - 1)) == -Gm(2 * k - 1));
    SigmaEntry e = sigma_n(3, 2, 4);
    CHECK(e.coefficient.is_zero());
    CHECK(sigma_n(3, 1, 1).coefficient == q(1));
    CHECK(sigma_n(-3, 3, 0).coefficient == q(1));
    CHECK_THROWS_AS(sigma_n(1, 0, 0), InvalidParams);
}

TEST_CASE("flows: closed forms") {
    const int order = 8;
    for (const char* which : {"L-1", "L0", "J0"}) {
        NSElement gen = std::string(which) == "L-1" ? L(-1) : std::string(which) == "L0" ? L(0) : J(0);
        CHECK(ns_flow_formal(gen, order) == ns_closed_form_series(which, 0, order));
    }
    for (int n = -4; n <= 4; ++n) {
        CHECK(ns_flow_formal(L(1) - J(1) * q(n), order) == ns_closed_form_series("L1-nJ1", n, order));
        CHECK(ns_flow_formal(L(0) - J(0) * q(n, 2), order) == ns_closed_form_series("L0-n/2J0", n, order));
    }
    // x/(1 − yx) has coefficient x^{k+1} at y^k
    auto s = ns_closed_form_series("L1-nJ1", 2, 3);
    CHECK(s[3].x == xp(4));
    CHECK(s[1].phi_plus == xp(1) * pp() * q(-1));

    const int Lg = 6;
    Supernumber xi = Supernumber::generator(Lg, 1);
    CHECK(ns_flow(Gp(-1), xi) ==
          CoordinateTriple{x(Lg) + pm(Lg) * SuperPolynomial::constant(Lg, 2, xi),
                           SuperPolynomial::constant(Lg, 2, xi) + pp(Lg), pm(Lg)});
    for (int k = 0; k <= 5; ++k) {
        CHECK(ns_flow(Gp(2 * k - 1), xi) == ns_closed_form_odd(Odd::Plus, k, xi));
        CHECK(ns_flow(Gm(2 * k - 1), xi) == ns_closed_form_odd(Odd::Minus, k, xi));
    }
    CHECK_THROWS_AS(ns_flow(L(0), xi), ParityError);
    CHECK_THROWS_AS(ns_flow(L(0), Supernumber(Lg, 1)), InvalidParams);
}

TEST_CASE("flows: odd parameters add") {
    const int Lg = 6;
    Sampler s(61);
    for (int i = 0; i < 20; ++i) {
        Supernumber a = s.supernumber(Lg, Lg - 2, Parity::Odd, false, 3);
        Supernumber b = s.supernumber(Lg, Lg - 2, Parity::Odd, false, 3);
        NSElement g = s.coin() ? Gp(2 * s.uniform(0, 3) - 1) : Gm(2 * s.uniform(0, 3) - 1);
        auto full = [](const CoordinateTriple& t) {
            return FullMap{RationalSuperfunction(t.x), RationalSuperfunction(t.phi_plus), RationalSuperfunction(t.phi_minus)};
        };
        CHECK(compose_full(full(ns_flow(g, a)), full(ns_flow(g, b))) == full(ns_flow(g, a + b)));
    }
}

TEST_CASE("flows match the group action") {
    const int Lg = 6;
    Supernumber z1 = Supernumber::generator(Lg, 1), z2 = Supernumber::generator(Lg, 2),
                z3 = Supernumber::generator(Lg, 3), z4 = Supernumber::generator(Lg, 4);
    Supernumber y = z1 * z2 + z3 * z4 * GR(3);
    Supernumber xi = z1 + z2 * z3 * z4;
    for (int n = -4; n <= 4; ++n) {
        CAPTURE(n);
        Verdict v = ns_flow_vs_group(n, y, xi);
        CHECK_MESSAGE(v.ok(), (v.failures.empty() ? "" : v.failures.front()));
    }
}
