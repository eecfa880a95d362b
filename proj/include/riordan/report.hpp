#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "riordan/matrix.hpp"
#include "riordan/riordan.hpp"
#include "riordan/series.hpp"

namespace riordan {

enum class Status { Pass, Fail, Skipped };

std::string status_name(Status s);

/// Where a check failed and the two sides at that spot.
struct Witness {
    std::string location;
    std::string lhs;
    std::string rhs;
};

struct Check {
    std::string id;
    std::string identity; // statement of what was verified
    Status status = Status::Pass;
    std::optional<Witness> witness;
    std::string note;
    double elapsed_ms = 0.0;
};

using Fragment = std::vector<Check>;

/// Accumulates the outcome of one check over several cases; keeps the first failure.
class CheckBuilder {
public:
    CheckBuilder(std::string id, std::string identity);

    /// Runs fn for one case; fn returns a witness on failure. Library errors
    /// become failures with the error text as witness.
    CheckBuilder& expect(const std::string& label, const std::function<std::optional<Witness>()>& fn);

    CheckBuilder& skip(const std::string& reason);
    CheckBuilder& note(const std::string& text);

    bool failed() const { return check_.status == Status::Fail; }

    Check finish();

private:
    Check check_;
    std::chrono::steady_clock::time_point start_;
};

// Witness producers: nullopt when the two sides agree.
std::optional<Witness> differ(const Series& lhs, const Series& rhs, int n);
std::optional<Witness> differ(const RiordanPair& lhs, const RiordanPair& rhs, int n);
std::optional<Witness> differ(const TriMatrix& lhs, const TriMatrix& rhs);
std::optional<Witness> differ(const SeqVec& lhs, const SeqVec& rhs, int n);
std::optional<Witness> differ(const Rational& lhs, const Rational& rhs, const std::string& location);
std::optional<Witness> expect_true(bool ok, const std::string& location, const std::string& detail = "");

} // namespace riordan
