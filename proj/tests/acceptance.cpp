// One PASS/FAIL line per acceptance criterion; exit status 1 if any criterion fails.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "superconf/campaign.hpp"

using namespace superconf;

namespace {

struct Outcome {
    bool ok = true;
    std::size_t checked = 0;
    std::size_t ledgered = 0;
    std::string first_failure;
};

CampaignConfig base() {
    CampaignConfig cfg;
    cfg.generators = 6;
    cfg.band = 3;
    cfg.flow_order = 8;
    cfg.seed = 20240601;
    return cfg;
}

void run(Outcome& out, const std::string& id, const CampaignConfig& cfg) {
    Report r = check_single(id, cfg);
    for (const auto& rec : r.records) {
        out.checked += rec.checked;
        out.ledgered += rec.ledger.size();
        if (!rec.passed) {
            out.ok = false;
            if (out.first_failure.empty())
                out.first_failure = rec.id + ": " + (rec.counterexample ? rec.counterexample->what : "failed");
        }
    }
}

std::vector<int> range(int lo, int hi) {
    std::vector<int> v;
    for (int n = lo; n <= hi; ++n) v.push_back(n);
    return v;
}

int failures = 0;

template <class F>
void criterion(int number, const char* title, double limit_s, F&& body) {
    Outcome out;
    auto start = std::chrono::steady_clock::now();
    body(out);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool in_time = limit_s <= 0 || secs < limit_s;
    bool pass = out.ok && in_time;
    if (!pass) ++failures;
    std::printf("%s %2d %s (%zu checked", pass ? "PASS" : "FAIL", number, title, out.checked);
    if (out.ledgered) std::printf(", %zu ledgered", out.ledgered);
    std::printf(", %.2fs", secs);
    if (limit_s > 0) std::printf(" / limit %.0fs", limit_s);
    std::printf(")");
    if (!out.ok) std::printf(": %s", out.first_failure.c_str());
    else if (!in_time) std::printf(": over the time limit");
    std::printf("\n");
    std::fflush(stdout);
}

}  // namespace

int main() {
    criterion(1, "Grassmann laws, 500 samples at L=6", 5, [](Outcome& o) {
        CampaignConfig c = base();
        c.samples = 500;
        run(o, "grassmann.laws", c);
    });
    criterion(2, "D+- identities on 200 superfunctions", 0, [](Outcome& o) {
        CampaignConfig c = base();
        c.samples = 200;
        run(o, "superfield.D", c);
    });
    criterion(3, "superconformal and sphere-automorphism closure, 100 pairs each", 60, [](Outcome& o) {
        CampaignConfig c = base();
        c.samples = 100;
        c.n_range = range(-4, 4);
        run(o, "superconformal.closure", c);
        for (int n : c.n_range) run(o, "spheres.closure.n=" + std::to_string(n), c);
    });
    criterion(4, "F1/F2 inverse property on 200 maps and the worked example", 0, [](Outcome& o) {
        CampaignConfig c = base();
        c.samples = 200;
        run(o, "superconformal.F1F2", c);
    });
    criterion(5, "transition maps for n in [-6,6]", 0, [](Outcome& o) { run(o, "spheres.transition", base()); });
    criterion(6, "northern chart vs tilde formulas, 100 per n in [-3,3]", 0, [](Outcome& o) {
        CampaignConfig c = base();
        c.samples = 100;
        c.n_range = range(-3, 3);
        for (int n : c.n_range) run(o, "spheres.north.n=" + std::to_string(n), c);
    });
    criterion(7, "NS super-Jacobi and representation, band 3", 0, [](Outcome& o) {
        run(o, "ns.jacobi", base());
        run(o, "ns.rep", base());
    });
    criterion(8, "g_n closure, dimensions, sigma table for n in [-6,6]", 0, [](Outcome& o) { run(o, "ns.gn", base()); });
    criterion(9, "matrix homomorphism tables", 0, [](Outcome& o) {
        run(o, "matrix.osp", base());
        run(o, "matrix.p", base());
        run(o, "matrix.gn", base());
    });
    criterion(10, "closed-form flows, order 8, and flows vs group action", 0, [](Outcome& o) {
        CampaignConfig c = base();
        c.samples = 100;
        c.n_range = range(-4, 4);
        run(o, "ns.flows", c);
    });
    criterion(11, "double-cover kernel (200 per parity) and odd translations", 0, [](Outcome& o) {
        CampaignConfig c = base();
        c.samples = 200;
        c.n_range = range(-4, 4);
        run(o, "spheres.kernel", c);
        c.samples = 20;
        run(o, "spheres.translations", c);
    });
    criterion(12, "identical reports from identical seeds", 0, [](Outcome& o) {
        CampaignConfig c = base();
        c.samples = 4;
        c.n_range = range(-2, 2);
        std::string a = run_campaign(c).to_json(), b = run_campaign(c).to_json();
        ++o.checked;
        if (a != b) {
            o.ok = false;
            o.first_failure = "reports differ";
        }
    });
    return failures == 0 ? 0 : 1;
}
