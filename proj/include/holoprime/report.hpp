#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace holoprime {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::uint64_t seed = 0;
    int samples = 0;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void add(std::string id, bool ok, std::string detail = "") {
        checks.push_back(CheckResult{std::move(id), ok, std::move(detail)});
    }
};

}  // namespace holoprime
