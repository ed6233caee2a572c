#include "doctest.h"
#include "superconf/errors.hpp"
#include "superconf/superconformal.hpp"

using namespace superconf;

namespace {
constexpr int L = 6;
using RSF = RationalSuperfunction;
RSF z() { return RSF::z(L, 2); }
RSF c(long v) { return RSF::scalar(L, 2, GaussianRational(v)); }
RSF ci() { return RSF::scalar(L, 2, GaussianRational::i()); }
RSF k(const Supernumber& s) { return RSF::constant(L, 2, s); }
RSF thp() { return RSF::theta(L, 2, Odd::Plus); }
RSF thm() { return RSF::theta(L, 2, Odd::Minus); }
Supernumber zeta(int j) { return Supernumber::generator(L, j); }

SuperconformalMap transition(int n) { return {z().inverse(), ci() * z().pow(n - 1), ci() * z().pow(-n - 1), RSF(L, 2), RSF(L, 2)}; }
}  // namespace

TEST_CASE("sc_check") {
    CHECK(sc_check(SuperconformalMap::identity(L)).ok());
    for (int n = -3; n <= 3; ++n) CHECK(sc_check(transition(n)).ok());
    SuperconformalMap bad{z() * z(), c(1), c(1), RSF(L, 2), RSF(L, 2)};
    auto d = sc_check(bad);
    CHECK_FALSE(d.ok());
    CHECK(d.summary().find("constraint") != std::string::npos);
    SuperconformalMap flat{z(), c(0), c(1), RSF(L, 2), RSF(L, 2)};
    CHECK_FALSE(sc_check(flat).ok());
}

TEST_CASE("sc_expand") {
    FullMap id = sc_expand(SuperconformalMap::identity(L));
    CHECK(id == FullMap::identity(L));
    for (int n = -2; n <= 2; ++n) {
        FullMap t = sc_expand(transition(n));
        CHECK(t.z == z().inverse());
        CHECK(t.theta_plus == ci() * thp() * z().pow(n - 1));
        CHECK(t.theta_minus == ci() * thm() * z().pow(-n - 1));
    }
    SuperconformalMap m{z(), c(1), c(1), k(zeta(1)), RSF(L, 2)};
    FullMap e = sc_expand(m);
    CHECK(e.z == z() + thm() * k(zeta(1)));
    CHECK(e.theta_plus == k(zeta(1)) + thp());
    CHECK(e.theta_minus == thm());
    CHECK((e.z.apply_D(Odd::Plus) - e.theta_minus * e.theta_plus.apply_D(Odd::Plus)).is_zero());
    CHECK(e.theta_plus.apply_D(Odd::Minus).is_zero());
    SuperconformalMap bad{z() * z(), c(1), c(1), RSF(L, 2), RSF(L, 2)};
    CHECK_THROWS_AS(sc_expand(bad), NotSuperconformal);
}

TEST_CASE("sc_extract") {
    CHECK(sc_extract(FullMap::identity(L)) == SuperconformalMap::identity(L));
    CHECK_THROWS_AS(sc_extract(FullMap{z(), thm(), thp()}), NotSuperconformal);
    Sampler s(3);
    for (int j = 0; j < 40; ++j) {
        SuperconformalMap m = random_superconformal(s, L);
        REQUIRE(sc_check(m).ok());
        CHECK(sc_extract(sc_expand(m)) == m);
    }
}

TEST_CASE("sc_compose") {
    auto id = SuperconformalMap::identity(L);
    CHECK(sc_compose(id, id) == id);
    SuperconformalMap i0 = transition(0);
    SuperconformalMap sq = sc_compose(i0, i0);
    CHECK(sq == SuperconformalMap{z(), c(-1), c(-1), RSF(L, 2), RSF(L, 2)});
    // Möbius maps multiply like their matrices
    Supernumber one(L, 1), two(L, 2), three(L, 3), zero(L);
    auto m1 = SuperconformalMap::mobius(one, two, zero, one);
    auto m2 = SuperconformalMap::mobius(two, one, Supernumber(L, 3), two);  // det 4 - 3 = 1
    auto prod = SuperconformalMap::mobius(two, Supernumber(L, 5), Supernumber(L, 3), Supernumber(L, 8));
    CHECK(sc_compose(m2, m1) == prod);
}

TEST_CASE("F1 and F2") {
    N1SuperanalyticMap h{RSF::z(L, 1), RSF::scalar(L, 1, 1), RSF::scalar(L, 1, 1), RSF(L, 1)};
    SuperconformalMap m = sc_F2(h);
    FullMap full = sc_expand(m);
    CHECK(full.z == z() + thp() * GaussianRational::fraction(1, 2));
    CHECK(full.theta_plus == thp());
    CHECK(full.theta_minus == c(1) * GaussianRational::fraction(1, 2) + thm());
    CHECK_FALSE(sc_check(m).notes.empty());
    CHECK(sc_F1(m) == h);

    for (int n = -3; n <= 3; ++n) {
        N1SuperanalyticMap f1 = sc_F1(transition(n));
        auto [zt, tt] = f1.expand();
        CHECK(zt == RSF::z(L, 1).inverse());
        CHECK(tt == RSF::theta(L, 1, Odd::Plus) * RSF::scalar(L, 1, GaussianRational::i()) * RSF::z(L, 1).pow(n - 1));
    }
    N1SuperanalyticMap flat{RSF::z(L, 1), RSF(L, 1), RSF(L, 1), RSF(L, 1)};
    CHECK_THROWS_AS(sc_F2(flat), NotInvertibleComponent);

    Sampler s(8);
    for (int j = 0; j < 40; ++j) {
        SuperconformalMap r = random_superconformal(s, L);
        CHECK(sc_F2(sc_F1(r)) == r);
        N1SuperanalyticMap hn = sc_F1(r);
        CHECK(sc_F1(sc_F2(hn)) == hn);
        CHECK(sc_check(sc_F2(hn)).ok());
    }
}

TEST_CASE("sc_invert") {
    auto id = SuperconformalMap::identity(L);
    CHECK(sc_invert(id) == id);
    for (int n = -3; n <= 3; ++n) {
        SuperconformalMap t = transition(n);
        SuperconformalMap inv = sc_invert(t);
        CHECK(sc_compose(inv, t) == id);
        CHECK(sc_compose(t, inv) == id);
        CHECK(inv == SuperconformalMap{z().inverse(), -(ci() * z().pow(n - 1)), -(ci() * z().pow(-n - 1)), RSF(L, 2), RSF(L, 2)});
    }
    Supernumber a(L, 2), b(L, 1), cc(L, 3), d(L, 2);
    auto mob = SuperconformalMap::mobius(a, b, cc, d);
    CHECK(sc_invert(mob) == SuperconformalMap::mobius(d, -b, -cc, a));
    Sampler s(21);
    for (int j = 0; j < 25; ++j) {
        SuperconformalMap r = random_superconformal(s, L);
        SuperconformalMap inv = sc_invert(r);
        CHECK(sc_compose(r, inv) == id);
        CHECK(sc_compose(inv, r) == id);
    }
}

TEST_CASE("composition properties") {
    Sampler s(5);
    for (int j = 0; j < 20; ++j) {
        SuperconformalMap a = random_superconformal(s, L), b = random_superconformal(s, L),
                          cmap = random_superconformal(s, L);
        SuperconformalMap ab = sc_compose(a, b);
        CHECK(sc_check(ab).ok());
        CHECK(sc_compose(ab, cmap) == sc_compose(a, sc_compose(b, cmap)));
        CHECK(sc_compose(a, b).extend(L + 1) == sc_compose(a.extend(L + 1), b.extend(L + 1)));
    }
}

TEST_CASE("D transforms homogeneously") {
    Sampler s(13);
    for (int j = 0; j < 20; ++j) {
        SuperconformalMap m = random_superconformal(s, L);
        FullMap full = sc_expand(m);
        RSF g(s.superpolynomial(L, 2, L - 2, std::nullopt, 2, 4));
        std::vector<RSF> odd{full.theta_plus, full.theta_minus};
        RSF gm = g.substitute(full.z, odd);
        for (Odd w : {Odd::Plus, Odd::Minus}) {
            const RSF& tw = w == Odd::Plus ? full.theta_plus : full.theta_minus;
            CHECK(gm.apply_D(w) == tw.apply_D(w) * g.apply_D(w).substitute(full.z, odd));
        }
    }
}
