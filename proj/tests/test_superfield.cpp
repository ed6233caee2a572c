#include "doctest.h"
#include "superconf/errors.hpp"
#include "superconf/random.hpp"
#include "superconf/superfield.hpp"

using namespace superconf;

namespace {
constexpr int L = 6;
using RSF = RationalSuperfunction;

RSF z2() { return RSF::z(L, 2); }
RSF thp() { return RSF::theta(L, 2, Odd::Plus); }
RSF thm() { return RSF::theta(L, 2, Odd::Minus); }
RSF num(long c) { return RSF::scalar(L, 2, GaussianRational(c)); }
Supernumber zeta(int k) { return Supernumber::generator(L, k); }
Supernumber sn(long c) { return Supernumber(L, GaussianRational(c)); }

RSF random_rsf(Sampler& s, std::optional<Parity> parity, int odd_count = 2) {
    SuperPolynomial n = s.superpolynomial(L, odd_count, L - 2, parity, 3, 4);
    if (s.coin(0.4)) {
        Poly d = Poly::from_coeffs({s.nonzero_scalar(), GaussianRational(1)});
        if (s.coin(0.3)) d = d.shifted(0) * Poly::monomial(GaussianRational(1), 1);
        return RSF(n, d);
    }
    return RSF(n);
}
}  // namespace

TEST_CASE("poly kernel") {
    Poly p = Poly::from_coeffs({GaussianRational(-1), GaussianRational(0), GaussianRational(1)});  // z^2 - 1
    Poly q = Poly::linear_factor(GaussianRational(1));
    CHECK(Poly::exact_div(p, q) == Poly::linear_factor(GaussianRational(-1)));
    CHECK(Poly::gcd(p, q * q) == q);
    CHECK(Poly::gcd(p, Poly::linear_factor(GaussianRational(2))) == Poly(GaussianRational(1)));
    CHECK(Poly::monomial(GaussianRational(1), -1).derivative() == Poly::monomial(GaussianRational(-1), -2));
    CHECK(p.eval(GaussianRational::i()) == GaussianRational(-2));
    CHECK_THROWS(Poly::exact_div(p, Poly::linear_factor(GaussianRational(3))));
}

TEST_CASE("canonical form") {
    RSF a(SuperPolynomial::z(L, 2) * SuperPolynomial::z(L, 2), Poly::from_coeffs({GaussianRational(0), GaussianRational(2)}));
    CHECK(a == z2() * GaussianRational::fraction(1, 2));
    RSF inv = z2().inverse();
    CHECK(inv.denominator() == Poly::monomial(GaussianRational(1), 1));
    CHECK(RSF(SuperPolynomial::power(L, 2, sn(1), -1)) == inv);
    CHECK((inv * z2()) == num(1));
    CHECK(RSF::parse(L, 2, inv.to_string()) == inv);
}

TEST_CASE("sf_evaluate") {
    SuperPoint p{sn(1) + zeta(1) * zeta(2), {zeta(3), zeta(4)}};
    CHECK(sf_evaluate(z2() * z2(), p) == p.z * p.z);
    CHECK(sf_evaluate(z2() * z2(), p) == sn(1) + zeta(1) * zeta(2) * GaussianRational(2));
    CHECK(sf_evaluate(z2().inverse(), p) == sn(1) - zeta(1) * zeta(2));
    SuperPoint q{zeta(1) * zeta(2), {zeta(3), zeta(4)}};
    CHECK_THROWS_AS(sf_evaluate(z2().inverse(), q), PoleAtPoint);
    CHECK(sf_evaluate(thp() * thm() * z2(), p) == zeta(3) * zeta(4) * p.z);
}

TEST_CASE("derivatives") {
    CHECK(sf_diff_odd(thp(), Odd::Plus) == num(1));
    CHECK(sf_diff_odd(thp() * thm() * z2(), Odd::Plus) == thm() * z2());
    CHECK(sf_diff_odd(thp() * thm() * z2(), Odd::Minus) == -(thp() * z2()));
    CHECK(sf_diff_odd(thm(), Odd::Plus).is_zero());
    CHECK(sf_diff_even(z2().inverse()) == -(z2().pow(-2)));
    CHECK(sf_apply_Dpm(thp(), Odd::Plus) == num(1));
    RSF f = z2().pow(3);
    CHECK(sf_apply_Dpm(sf_apply_Dpm(f, Odd::Minus), Odd::Plus) + sf_apply_Dpm(sf_apply_Dpm(f, Odd::Plus), Odd::Minus) ==
          z2().pow(2) * GaussianRational(6));
    RSF g = thp() * thm() * z2().pow(2);
    CHECK(sf_apply_Dpm(sf_apply_Dpm(g, Odd::Plus), Odd::Plus).is_zero());
}

TEST_CASE("sf_substitute examples") {
    RSF w = z2() + thp() * thm();
    CHECK(sf_substitute(z2(), w, {thp(), thm()}) == w);
    CHECK(sf_substitute(z2() * z2(), w, {thp(), thm()}) == z2() * z2() + z2() * thp() * thm() * GaussianRational(2));
    CHECK(sf_substitute(z2().inverse(), z2().inverse(), {thp(), thm()}) == z2());
    RSF pole = (z2() - num(1)).inverse();
    CHECK_THROWS_AS(sf_substitute(pole, num(1), {thp(), thm()}), SingularComposition);
}

TEST_CASE("text grammar for superfields") {
    RSF f = RSF::parse(L, 2, "thp thm z[1]z[2] z^2 + (0+1i)*z^-1 - 3");
    CHECK(f.denominator() == Poly::monomial(GaussianRational(1), 1));
    CHECK(RSF::parse(L, 2, f.to_string()) == f);
    CHECK(RSF::parse(L, 2, "thm*thp") == -(thp() * thm()));
    RSF h = RSF::parse(L, 1, "(z + th z[1])/(z^2 + 1)");
    CHECK(RSF::parse(L, 1, h.to_string()) == h);
    CHECK_THROWS_AS(RSF::parse(L, 1, "thp"), ParseError);
    CHECK_THROWS_AS(RSF::parse(L, 2, "z^"), ParseError);
}

TEST_CASE("properties on random superfunctions") {
    Sampler s(77);
    SuperPoint p{sn(2) + zeta(1) * zeta(3), {zeta(2), zeta(4) + zeta(1)}};
    for (int k = 0; k < 150; ++k) {
        Parity pf = s.coin() ? Parity::Odd : Parity::Even;
        RSF f = random_rsf(s, pf);
        RSF g = random_rsf(s, std::nullopt);
        RSF h = random_rsf(s, std::nullopt);

        CHECK(equal_by_cross_multiplication(f * g, g * f) == (f * g == g * f));
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * g) * h == f * (g * h));
        if (g.has_nonzero_body()) {
            CHECK(g * g.inverse() == num(1));
            CHECK(equal_by_cross_multiplication((f / g) * g, f));
        }

        // super-Leibniz and D-algebra
        for (Odd w : {Odd::Plus, Odd::Minus}) {
            RSF lhs = sf_apply_Dpm(f * g, w);
            RSF rhs = sf_apply_Dpm(f, w) * g + f * sf_apply_Dpm(g, w) * GaussianRational(pf == Parity::Odd ? -1 : 1);
            CHECK(lhs == rhs);
            CHECK(sf_apply_Dpm(sf_apply_Dpm(g, w), w).is_zero());
        }
        CHECK(sf_apply_Dpm(sf_apply_Dpm(g, Odd::Plus), Odd::Minus) + sf_apply_Dpm(sf_apply_Dpm(g, Odd::Minus), Odd::Plus) ==
              sf_diff_even(g) * GaussianRational(2));

        // evaluation is a homomorphism away from poles
        if (!f.denominator().eval(GaussianRational(2)).is_zero() && !g.denominator().eval(GaussianRational(2)).is_zero()) {
            CHECK(sf_evaluate(f * g, p) == sf_evaluate(f, p) * sf_evaluate(g, p));
            CHECK(sf_evaluate(f + g, p) == sf_evaluate(f, p) + sf_evaluate(g, p));
        }

        // functorial stability
        CHECK((f * g).extend(L + 2) == f.extend(L + 2) * g.extend(L + 2));
        CHECK(sf_apply_Dpm(f, Odd::Plus).extend(L + 2) == sf_apply_Dpm(f.extend(L + 2), Odd::Plus));
        CHECK(f.extend(L + 2).restrict_to(L) == f);

        CHECK(RSF::parse(L, 2, f.to_string()) == f);
    }
}

TEST_CASE("substitution agrees with direct arithmetic and is associative") {
    Sampler s(99);
    int checked = 0;
    for (int k = 0; k < 60; ++k) {
        RSF f = random_rsf(s, std::nullopt);
        // even image with a nilpotent θ part, odd images
        RSF w = RSF(s.superpolynomial(L, 2, L - 2, Parity::Even, 2, 3)) + z2();
        RSF op = thp() * RSF::constant(L, 2, s.supernumber(L, L - 2, Parity::Even, true, 2)) +
                 RSF::constant(L, 2, s.supernumber(L, L - 2, Parity::Odd, false, 2));
        RSF om = thm() + RSF::constant(L, 2, s.supernumber(L, L - 2, Parity::Odd, false, 2));
        RSF got;
        try {
            got = sf_substitute(f, w, {op, om});
        } catch (const SingularComposition&) {
            continue;
        } catch (const NotInvertible&) {
            continue;
        }
        // direct: substitute term by term with full arithmetic
        RSF top(L, 2);
        for (const auto& [m, poly] : f.numerator().terms()) {
            RSF term = RSF::constant(L, 2, Supernumber::from_terms(L, {{combined_to_zeta(m), GaussianRational(1)}}));
            if (m & 2u) term = om * term;
            if (m & 1u) term = op * term;
            RSF value(L, 2);
            for (int e = poly.low(); e <= poly.high(); ++e) value += w.pow(e) * poly.coeff(e);
            top += term * value;
        }
        RSF den(L, 2);
        const Poly& d = f.denominator();
        for (int e = 0; e <= d.degree(); ++e) den += w.pow(e) * d.coeff(e);
        CHECK(got == top / den);
        ++checked;

        RSF g = random_rsf(s, Parity::Even);
        RSF h = random_rsf(s, Parity::Even);
        try {
            RSF gh = sf_substitute(g, h, {thp(), thm()});
            RSF left = sf_substitute(f, gh, {thp(), thm()});
            RSF fg = sf_substitute(f, g, {thp(), thm()});
            RSF right = sf_substitute(fg, h, {thp(), thm()});
            CHECK(left == right);
        } catch (const SingularComposition&) {
        } catch (const NotInvertible&) {
        } catch (const ParityError&) {
        }
    }
    CHECK(checked > 30);
}
