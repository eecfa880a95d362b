#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "riordan/report.hpp"

namespace riordan {

struct SuiteReport {
    std::string suite_id;
    int order = 0;
    std::uint64_t seed = 0;
    std::vector<Check> checks;

    int count(Status s) const;
    bool passed() const { return count(Status::Fail) == 0; }
};

/// all, structure, transforms, involutions, eigenspaces
const std::vector<std::string>& suite_ids();

/// Deterministic for fixed (id, order, seed). Throws InvalidArgument for an unknown id.
SuiteReport run_suite(const std::string& id, int order, std::uint64_t seed);

/// Canonical JSON with sorted keys. Elapsed times only when `timing` is set.
std::string render_json(const SuiteReport& report, bool timing = false);
std::string render_markdown(const SuiteReport& report, bool timing = false);

} // namespace riordan
