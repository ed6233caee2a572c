#include "doctest.h"
#include "superconf/errors.hpp"
#include "superconf/json_io.hpp"

using namespace superconf;
using namespace superconf::json_io;

namespace {
constexpr int L = 5;
Supernumber zeta(int j) { return Supernumber::generator(L, j); }
}  // namespace

TEST_CASE("supernumber JSON form") {
    Supernumber x = Supernumber(L, GaussianRational::fraction(3, 2)) + zeta(1) * zeta(2) * GaussianRational::i();
    Json j = to_json(x);
    CHECK(j.dump() == R"([{"index":[],"re":"3/2","im":"0"},{"index":[1,2],"re":"0","im":"1"}])");
    CHECK(supernumber_from_json(L, j) == x);
    CHECK(to_json(Supernumber(L)).empty());
    CHECK_THROWS_AS(supernumber_from_json(L, Json::parse(R"([{"index":[2,1],"re":"1","im":"0"}])")), Error);
    CHECK_THROWS_AS(supernumber_from_json(L, Json::parse(R"([{"index":[1],"re":"x","im":"0"}])")), ParseError);
    CHECK_THROWS_AS(supernumber_from_json(L, Json::parse(R"([{"index":[1]}])")), ParseError);
}

TEST_CASE("superfunctions and maps round trip") {
    Sampler s(5);
    for (int k = 0; k < 30; ++k) {
        SuperconformalMap m = random_superconformal(s, L);
        Json j = to_json(m);
        CHECK(j.contains("psi-"));
        CHECK(map_from_json(Json::parse(j.dump())) == m);
    }
    auto t = sphere_transition(-2, L);
    CHECK(map_from_json(to_json(t)) == t);
    Json f = to_json(RationalSuperfunction::theta(L, 2, Odd::Minus) * RationalSuperfunction::z(L, 2).pow(-1));
    CHECK(f["numerator"][0]["theta"] == Json::array({"-"}));
    CHECK(f["denominator"][0]["z"] == 1);
}

TEST_CASE("params and validation reports") {
    Sampler s(9);
    for (int n = -3; n <= 3; ++n) {
        AutomorphismParams p = random_params(s, n, L);
        CHECK(params_from_json(to_json(p)) == p);
        Json rep = validation_report(aut_build(p).southern, n);
        CHECK(rep["status"] == "in-family");
        CHECK(aut_build(params_from_json(rep["params"])) == aut_build(p));
    }
    SuperconformalMap bad = SuperconformalMap::identity(L);
    bad.psi_plus = RationalSuperfunction::constant(L, 2, zeta(1));
    Json rep = validation_report(bad, 2);
    CHECK(rep["status"] == "not-in-family");
    CHECK(rep.contains("reason"));
}

TEST_CASE("golden bracket tables") {
    Json t = bracket_table(1);
    CHECK(t["entries"].size() == ns_band_basis(1).size() * ns_band_basis(1).size());
    CHECK(bracket_table_mismatches(Json::parse(t.dump())).empty());
    // {G+_{1/2}, G-_{-1/2}} = 2L_0 + J_0
    NSElement want = NSElement(NSBasisSymbol::L(0)) * GaussianRational(2) + NSElement(NSBasisSymbol::J(0));
    bool found = false;
    for (auto& e : t["entries"])
        if (e["left"] == "G+(1/2)" && e["right"] == "G-(-1/2)") {
            CHECK(ns_element_from_json(e["bracket"]) == want);
            e["bracket"] = to_json(want * GaussianRational(3));
            found = true;
        }
    CHECK(found);
    auto bad = bracket_table_mismatches(t);
    REQUIRE(bad.size() == 1);
    CHECK(bad[0] == "[G+(1/2), G-(-1/2)]");
    CHECK_THROWS_AS(bracket_table(0), InvalidParams);
}

TEST_CASE("discrepancy ledger format") {
    Json j = to_json(std::vector<Discrepancy>{{"[L(0), L(1)]", "a", "b"}});
    CHECK(j.dump() == R"([{"pair":"[L(0), L(1)]","expected":"a","got":"b"}])");
}
