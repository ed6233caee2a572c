#include <algorithm>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <set>
#include <sstream>

#include "doctest.h"
#include "superconf/campaign.hpp"
#include "superconf/errors.hpp"

using namespace superconf;

namespace {
CampaignConfig small() {
    CampaignConfig c;
    c.samples = 3;
    c.band = 2;
    c.flow_order = 4;
    c.n_range = {-3, -2, -1, 0, 1, 2, 3};
    return c;
}
}  // namespace

TEST_CASE("registry covers every required anchor with unique ids") {
    auto reg = check_registry(small());
    std::set<std::string> ids, anchors;
    for (const auto& info : reg) {
        CHECK(ids.insert(info.id).second);
        anchors.insert(info.anchor);
    }
    for (const auto& a : required_anchors()) {
        CAPTURE(a);
        CHECK(anchors.count(a) == 1);
    }
    for (const auto& a : anchors) CHECK(std::find(required_anchors().begin(), required_anchors().end(), a) != required_anchors().end());
    CHECK(ids.count("ns.jacobi") == 1);
    CHECK(ids.count("spheres.closure.n=2") == 1);
    CHECK(ids.count("spheres.north.n=-3") == 1);
}

TEST_CASE("config validation") {
    CampaignConfig c = small();
    c.generators = 3;
    CHECK_THROWS_AS(c.validate(), UsageError);
    c = small();
    c.band = 0;
    CHECK_THROWS_AS(c.validate(), UsageError);
    c = small();
    c.n_range.clear();
    CHECK_THROWS_AS(c.validate(), UsageError);
    CHECK_THROWS_AS(run_campaign(c), UsageError);
}

TEST_CASE("single checks") {
    Report r = check_single("ns.jacobi", small());
    REQUIRE(r.records.size() == 1);
    CHECK(r.records[0].id == "ns.jacobi");
    CHECK(r.records[0].passed);
    CHECK(r.records[0].checked > 0);

    Report s = check_single("spheres.closure.n=2", small());
    REQUIRE(s.records.size() == 1);
    CHECK(s.records[0].section == "spheres.n=2");
    CHECK(s.ok());

    CHECK_THROWS_AS(check_single("bogus", small()), UsageError);
    CampaignConfig c = small();
    c.n_range = {0};
    CHECK_THROWS_AS(check_single("spheres.closure.n=2", c), UsageError);
}

TEST_CASE("full campaign: sections, determinism, schema") {
    CampaignConfig c = small();
    Report a = run_campaign(c);
    CHECK(a.ok());
    CHECK(a.records.size() == check_registry(c).size());

    auto secs = a.sections();
    CHECK(std::count_if(secs.begin(), secs.end(), [](const std::string& s) { return s.rfind("spheres.n=", 0) == 0; }) == 7);

    std::string ja = a.to_json();
    CHECK(run_campaign(c).to_json() == ja);
    c.seed += 1;
    CHECK(run_campaign(c).to_json() != ja);

    auto j = nlohmann::json::parse(ja);
    CHECK(j["schema"] == "superconf-report");
    CHECK(j["version"] == Report::kSchemaVersion);
    CHECK(j["summary"]["status"] == "pass");
    for (const auto& s : j["sections"])
        for (const auto& rec : s["checks"]) {
            CHECK(rec.contains("id"));
            CHECK(rec.contains("anchor"));
            CHECK(rec["status"] == "pass");
            CHECK_FALSE(rec.contains("elapsed_ms"));
        }
    CHECK(nlohmann::json::parse(a.ledger_json()).is_array());
}

TEST_CASE("report file and timings") {
    CampaignConfig c = small();
    c.timings = true;
    c.report_path = "campaign_test_report.json";
    Report r = check_single("matrix.osp", c);
    std::ifstream in(c.report_path);
    REQUIRE(in);
    std::stringstream buf;
    buf << in.rdbuf();
    auto j = nlohmann::json::parse(buf.str());
    CHECK(j["sections"][0]["checks"][0].contains("elapsed_ms"));
    std::remove(c.report_path.c_str());

    c.report_path = "/nonexistent-dir/report.json";
    CHECK_THROWS_AS(check_single("matrix.osp", c), Error);
}
