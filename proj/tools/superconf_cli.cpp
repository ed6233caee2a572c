#include <CLI11.hpp>
#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "superconf/campaign.hpp"
#include "superconf/errors.hpp"
#include "superconf/json_io.hpp"

namespace {

int to_int(const std::string& s) {
    int v = 0;
    auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || end != s.data() + s.size()) throw superconf::UsageError("not an integer: '" + s + "'");
    return v;
}

/// "-3..3" or "-2,0,5"
std::vector<int> parse_n_range(const std::string& text) {
    std::vector<int> out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        int lo = to_int(text.substr(0, dots)), hi = to_int(text.substr(dots + 2));
        if (lo > hi) throw superconf::UsageError("empty n range " + text);
        for (int n = lo; n <= hi; ++n) out.push_back(n);
        return out;
    }
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(to_int(text.substr(start, comma - start)));
        start = comma + 1;
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace superconf;
    CampaignConfig cfg;
    std::string n_range, check, ledger, brackets;
    bool list = false, quiet = false;

    CLI::App app{"Exact verification campaign for N=2 superconformal structures"};
    app.add_option("--generators", cfg.generators, "Grassmann generator count L (>= 4)")->capture_default_str();
    app.add_option("--band", cfg.band, "index band for NS algebra checks")->capture_default_str();
    app.add_option("--flow-order", cfg.flow_order, "truncation order of formal flows")->capture_default_str();
    app.add_option("--n-range", n_range, "sphere parameters, 'lo..hi' or a comma list (default -4..4)");
    app.add_option("--samples", cfg.samples, "random samples per check")->capture_default_str();
    app.add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
    app.add_option("--report", cfg.report_path, "write the JSON report here");
    app.add_option("--check", check, "run only this check id");
    app.add_option("--ledger", ledger, "write display discrepancies as JSON here");
    app.add_flag("--timings", cfg.timings, "record elapsed time per check (breaks byte-reproducibility)");
    app.add_option("--export-brackets", brackets, "write the NS bracket table for --band as JSON and exit");
    app.add_flag("--list", list, "print the registered check ids and exit");
    app.add_flag("-q,--quiet", quiet, "print only the final status line");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (!n_range.empty()) cfg.n_range = parse_n_range(n_range);
        cfg.validate();
        if (!brackets.empty()) {
            write_text_file(brackets, json_io::bracket_table(cfg.band).dump(2) + "\n");
            return 0;
        }
        if (list) {
            for (const auto& info : check_registry(cfg)) std::cout << info.id << "  [" << info.anchor << "]\n";
            return 0;
        }
        Report rep = check.empty() ? run_campaign(cfg) : check_single(check, cfg);
        if (!ledger.empty()) write_text_file(ledger, rep.ledger_json());
        std::size_t failed = 0;
        for (const auto& r : rep.records) {
            if (!r.passed) ++failed;
            if (quiet) continue;
            std::cout << (r.passed ? "PASS " : "FAIL ") << r.id << " (" << r.checked << " checked";
            if (!r.ledger.empty()) std::cout << ", " << r.ledger.size() << " ledgered";
            std::cout << ")";
            if (r.counterexample) std::cout << ": " << r.counterexample->what;
            std::cout << "\n";
        }
        std::cout << (rep.ok() ? "all " : "") << rep.records.size() - failed << "/" << rep.records.size()
                  << " checks passed\n";
        return rep.ok() ? 0 : 1;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
