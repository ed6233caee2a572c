#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace superconf {

struct CampaignConfig {
    int generators = 6;
    int band = 3;
    int flow_order = 8;
    std::vector<int> n_range{-4, -3, -2, -1, 0, 1, 2, 3, 4};
    int samples = 100;
    std::uint64_t seed = 20240601;
    std::string report_path;
    /// Adds wall-clock timings to each record; the report is then no longer byte-reproducible.
    bool timings = false;

    /// Throws UsageError on a violated invariant (L ≥ 4, band ≥ 1, nonempty n range, ...).
    void validate() const;
};

/// Failing input of a check, with operands in their text forms so the case can be replayed.
struct Counterexample {
    std::string what;
    std::vector<std::pair<std::string, std::string>> operands;
};

/// Mismatch between a displayed value and the computed one that is reported but does not fail the check.
struct LedgerEntry {
    std::string pair;
    std::string expected;
    std::string got;
};

struct CheckRecord {
    std::string id;
    std::string anchor;
    std::string section;
    bool passed = true;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::optional<Counterexample> counterexample;
    std::vector<LedgerEntry> ledger;
    double elapsed_ms = 0;
};

struct Report {
    static constexpr int kSchemaVersion = 1;
    CampaignConfig config;
    std::vector<CheckRecord> records;

    bool ok() const;
    std::vector<std::string> sections() const;
    /// Pretty-printed JSON with a fixed key order.
    std::string to_json() const;
    /// Every ledger entry across records, as a JSON list of {check, pair, expected, got}.
    std::string ledger_json() const;
};

struct CheckInfo {
    std::string id;
    std::string anchor;
    std::string section;
};

/// Check ids for a configuration, in report order (per-n sphere checks follow cfg.n_range).
std::vector<CheckInfo> check_registry(const CampaignConfig& cfg);
/// Topic anchors every campaign must cover.
const std::vector<std::string>& required_anchors();

Report run_campaign(const CampaignConfig& cfg);
/// UsageError for an id not in the registry of cfg.
Report check_single(const std::string& id, const CampaignConfig& cfg);
/// Writes report.to_json() to the path; Error on I/O failure.
void write_text_file(const std::string& path, const std::string& text);

}  // namespace superconf
