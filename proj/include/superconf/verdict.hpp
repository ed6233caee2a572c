#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace superconf {

/// Outcome of an exhaustive or sampled check: how many cases ran and which ones failed.
struct Verdict {
    std::size_t checked = 0;
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
    void pass() { ++checked; }
    void fail(std::string what) {
        ++checked;
        failures.push_back(std::move(what));
    }
    void expect(bool cond, const std::string& what) { cond ? pass() : fail(what); }
    void merge(const Verdict& o) {
        checked += o.checked;
        failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    }
};

}  // namespace superconf
