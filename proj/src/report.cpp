#include "riordan/report.hpp"

#include "riordan/errors.hpp"

namespace riordan {

std::string status_name(Status s) {
    switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    }
    return "fail";
}

CheckBuilder::CheckBuilder(std::string id, std::string identity) : start_(std::chrono::steady_clock::now()) {
    check_.id = std::move(id);
    check_.identity = std::move(identity);
}

CheckBuilder& CheckBuilder::expect(const std::string& label,
                                   const std::function<std::optional<Witness>()>& fn) {
    if (check_.status != Status::Pass) return *this;
    std::optional<Witness> w;
    try {
        w = fn();
    } catch (const Error& e) {
        w = Witness{"error", e.what(), ""};
    }
    if (w) {
        if (!label.empty()) w->location = label + ": " + w->location;
        check_.status = Status::Fail;
        check_.witness = std::move(w);
    }
    return *this;
}

CheckBuilder& CheckBuilder::skip(const std::string& reason) {
    if (check_.status == Status::Pass) {
        check_.status = Status::Skipped;
        check_.note = reason;
    }
    return *this;
}

CheckBuilder& CheckBuilder::note(const std::string& text) {
    if (!check_.note.empty()) check_.note += "; ";
    check_.note += text;
    return *this;
}

Check CheckBuilder::finish() {
    const auto end = std::chrono::steady_clock::now();
    check_.elapsed_ms = std::chrono::duration<double, std::milli>(end - start_).count();
    return check_;
}

std::optional<Witness> differ(const Series& lhs, const Series& rhs, int n) {
    if (auto m = first_mismatch(lhs, rhs, n)) {
        return Witness{"x^" + std::to_string(m->degree), m->lhs.str(), m->rhs.str()};
    }
    return std::nullopt;
}

std::optional<Witness> differ(const RiordanPair& lhs, const RiordanPair& rhs, int n) {
    if (auto m = first_mismatch(lhs, rhs, n)) {
        return Witness{std::string(1, m->component) + "[x^" + std::to_string(m->degree) + "]", m->lhs.str(),
                       m->rhs.str()};
    }
    return std::nullopt;
}

std::optional<Witness> differ(const TriMatrix& lhs, const TriMatrix& rhs) {
    if (auto m = first_mismatch(lhs, rhs)) {
        return Witness{"(" + std::to_string(m->row) + "," + std::to_string(m->col) + ")", m->lhs.str(),
                       m->rhs.str()};
    }
    return std::nullopt;
}

std::optional<Witness> differ(const SeqVec& lhs, const SeqVec& rhs, int n) {
    if (auto m = first_mismatch(lhs, rhs, n)) {
        return Witness{"[" + std::to_string(m->index) + "]", m->lhs.str(), m->rhs.str()};
    }
    return std::nullopt;
}

std::optional<Witness> differ(const Rational& lhs, const Rational& rhs, const std::string& location) {
    if (lhs != rhs) return Witness{location, lhs.str(), rhs.str()};
    return std::nullopt;
}

std::optional<Witness> expect_true(bool ok, const std::string& location, const std::string& detail) {
    if (!ok) return Witness{location, detail.empty() ? "false" : detail, "true"};
    return std::nullopt;
}

} // namespace riordan
