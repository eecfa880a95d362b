#include "riordan/suite.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "riordan/errors.hpp"
#include "riordan/identities.hpp"

namespace riordan {

namespace {

constexpr int kRandomVectors = 20;

void append(Fragment& into, Fragment from) {
    for (auto& c : from) into.push_back(std::move(c));
}

Fragment structure_suite(int order) {
    Fragment f;
    append(f, check_displays(order));
    append(f, check_factorizations(order));
    append(f, check_catalan_motzkin_series(order));
    append(f, check_recurrences(order));
    append(f, check_partial_sums(order));
    append(f, check_row_sums(order));
    append(f, check_closed_forms(order));
    append(f, coefficient_sum_identities(order));
    return f;
}

Fragment transforms_suite(int order, std::uint64_t seed) {
    const auto inputs = transform_inputs(order, seed, kRandomVectors);
    Fragment f;
    append(f, check_transform_identities(inputs, order));
    append(f, check_gf_relations(inputs, order));
    return f;
}

std::string escape_cell(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

} // namespace

int SuiteReport::count(Status s) const {
    return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
}

const std::vector<std::string>& suite_ids() {
    static const std::vector<std::string> ids{"all", "structure", "transforms", "involutions", "eigenspaces"};
    return ids;
}

SuiteReport run_suite(const std::string& id, int order, std::uint64_t seed) {
    if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end()) {
        throw Error(Errc::InvalidArgument, "unknown suite '" + id + "'");
    }
    if (order < 0) throw Error(Errc::InvalidArgument, "order must be nonnegative");
    SuiteReport r{id, order, seed, {}};
    const bool all = id == "all";
    if (all || id == "structure") append(r.checks, structure_suite(order));
    if (all || id == "transforms") append(r.checks, transforms_suite(order, seed));
    if (all || id == "involutions") append(r.checks, check_involutions(order));
    if (all || id == "eigenspaces") append(r.checks, check_eigenspaces(order));
    return r;
}

std::string render_json(const SuiteReport& report, bool timing) {
    using nlohmann::json;
    json checks = json::array();
    for (const auto& c : report.checks) {
        json j{{"checkId", c.id}, {"identity", c.identity}, {"status", status_name(c.status)}};
        if (c.witness) {
            j["witness"] = {{"location", c.witness->location}, {"lhs", c.witness->lhs}, {"rhs", c.witness->rhs}};
        }
        if (!c.note.empty()) j["note"] = c.note;
        if (timing) j["elapsedMs"] = c.elapsed_ms;
        checks.push_back(std::move(j));
    }
    json out{{"suiteId", report.suite_id},
             {"order", report.order},
             {"seed", report.seed},
             {"checks", std::move(checks)},
             {"summary",
              {{"pass", report.count(Status::Pass)},
               {"fail", report.count(Status::Fail)},
               {"skipped", report.count(Status::Skipped)}}}};
    return out.dump(2) + "\n";
}

std::string render_markdown(const SuiteReport& report, bool timing) {
    std::ostringstream os;
    os << "# Suite `" << report.suite_id << "`\n\n";
    os << "order " << report.order << ", seed " << report.seed << ": " << report.count(Status::Pass) << " pass, "
       << report.count(Status::Fail) << " fail, " << report.count(Status::Skipped) << " skipped\n\n";
    os << "| check | status | identity | detail |" << (timing ? " ms |" : "") << "\n";
    os << "|---|---|---|---|" << (timing ? "---|" : "") << "\n";
    for (const auto& c : report.checks) {
        std::string detail;
        if (c.witness) detail = c.witness->location + ": " + c.witness->lhs + " vs " + c.witness->rhs;
        if (!c.note.empty()) detail += (detail.empty() ? "" : "; ") + c.note;
        os << "| `" << c.id << "` | " << status_name(c.status) << " | " << escape_cell(c.identity) << " | "
           << escape_cell(detail) << " |";
        if (timing) {
            std::ostringstream ms;
            ms.setf(std::ios::fixed);
            ms.precision(1);
            ms << c.elapsed_ms;
            os << " " << ms.str() << " |";
        }
        os << "\n";
    }
    return os.str();
}

} // namespace riordan
