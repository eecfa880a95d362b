// Acceptance criteria 1-9: one PASS/FAIL line each, exit status 1 if any fails.
//
// usage: acceptance <path to riordan cli>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include <json.hpp>

#include "riordan/identities.hpp"
#include "riordan/riordan.hpp"
#include "riordan/sequences.hpp"
#include "test_support.hpp"

using namespace riordan;
using riordan::testing::Generator;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::vector<std::string> details;

    void add(const Fragment& f) {
        for (const auto& c : f) add(c);
    }
    void add(const Check& c) {
        if (c.status == Status::Pass) return;
        ok = false;
        std::string d = c.id + " " + status_name(c.status);
        if (c.witness) d += " at " + c.witness->location + ": " + c.witness->lhs + " vs " + c.witness->rhs;
        else if (!c.note.empty()) d += ": " + c.note;
        details.push_back(d);
    }
    void fail(const std::string& d) {
        ok = false;
        details.push_back(d);
    }
};

void append(Fragment& into, const Fragment& from) { into.insert(into.end(), from.begin(), from.end()); }

Fragment only(const Fragment& f, const std::string& prefix, bool keep) {
    Fragment out;
    for (const auto& c : f)
        if ((c.id.rfind(prefix, 0) == 0) == keep) out.push_back(c);
    return out;
}

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Outcome engine_properties() {
    Outcome o;
    Generator gen(20240601);
    const int n = 16;
    for (int trial = 0; trial < 200; ++trial) {
        const RiordanPair a(gen.series(n), gen.series(n, 1));
        const RiordanPair b(gen.series(n), gen.series(n, 1));
        const std::string at = "instance " + std::to_string(trial) + ": ";
        if (auto m = first_mismatch(to_matrix(rmul(a, b), n), to_matrix(a, n) * to_matrix(b, n)))
            o.fail(at + "rmul vs dense product at (" + std::to_string(m->row) + "," + std::to_string(m->col) + ")");
        if (auto m = first_mismatch(rmul(a, rinv(a)), RiordanPair::identity(n), n)) o.fail(at + "A A^-1: " + m->str());
        if (auto m = first_mismatch(rmul(rinv(a), a), RiordanPair::identity(n), n)) o.fail(at + "A^-1 A: " + m->str());

        const Series f = b.f();
        const Series fbar = comp_inverse(f);
        if (first_mismatch(compose(f, fbar), Series::x(n), n)) o.fail(at + "f(fbar) != x");
        if (first_mismatch(compose(fbar, f), Series::x(n), n)) o.fail(at + "fbar(f) != x");

        const long c0 = gen.integer(1, 6);
        std::vector<Rational> sq{Rational(c0 * c0)};
        for (int k = 1; k < n; ++k) sq.push_back(gen.rational());
        const Series s = Series::from_coeffs(sq, n);
        const Series root = sqrt(s);
        if (first_mismatch(root * root, s, n) || root.coeff(0) != Rational(c0)) o.fail(at + "sqrt(s)^2 != s");
    }
    return o;
}

Outcome cli_full_suite(const std::string& cli) {
    Outcome o;
    const std::string out = "acceptance_verify_all.json";
    const std::string cmd = "\"" + cli + "\" verify --suite all --order 32 --seed 1 --format json --out " + out;
    const auto t0 = Clock::now();
    const int rc = std::system(cmd.c_str());
    const double secs = seconds_since(t0);
    std::ostringstream d;
    d.precision(2);
    d << std::fixed << "verify --suite all --order 32 took " << secs << " s";
    if (rc == -1 || !WIFEXITED(rc) || WEXITSTATUS(rc) > 1) o.fail("cli did not complete (status " + std::to_string(rc) + ")");
    if (secs >= 30.0) o.fail(d.str());
    else o.details.push_back(d.str());
    try {
        std::ifstream in(out);
        const auto j = nlohmann::json::parse(in);
        o.details.push_back(std::to_string(j["checks"].size()) + " checks, " +
                            std::to_string(j["summary"]["fail"].get<int>()) + " failed");
    } catch (const std::exception& e) {
        o.fail(std::string("report not readable: ") + e.what());
    }
    return o;
}

} // namespace

int main(int argc, char** argv) {
    const std::string cli = argc > 1 ? argv[1] : "riordan";

    struct Criterion {
        int number;
        std::string title;
        double budget_s; // 0: none
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "six printed matrix displays, digit-exact", 1.0,
         [] {
             Outcome o;
             o.add(check_displays(8));
             o.add(pseudo_involution_display(8));
             return o;
         }},
        {2, "row sums of D FS^-1 D and D LS^-1 D at order 32", 1.0,
         [] {
             Outcome o;
             o.add(check_row_sums(32));
             return o;
         }},
        {3, "recurrences and partial sums at order 48", 0,
         [] {
             Outcome o;
             o.add(check_recurrences(48));
             o.add(check_partial_sums(48));
             return o;
         }},
        {4, "closed-form entries for n <= 24, coefficient sums for j <= 24", 0,
         [] {
             Outcome o;
             o.add(check_closed_forms(25));
             o.add(coefficient_sum_identities(24));
             return o;
         }},
        {5, "factorizations and the Catalan-Motzkin series identity at order 48", 0,
         [] {
             Outcome o;
             o.add(check_factorizations(48));
             o.add(check_catalan_motzkin_series(48));
             return o;
         }},
        {6, "transform identities at order 24, 20 seeded vectors plus e0, e1, zero", 0,
         [] {
             Outcome o;
             const auto inputs = transform_inputs(24, 1, 20);
             o.add(check_transform_identities(inputs, 24));
             o.add(check_gf_relations(inputs, 24));
             return o;
         }},
        {7, "involution predicates, conjugation n = 1..4 at order 32, pseudo n = 1..2 at order 24, NotAppellForm", 0,
         [] {
             Outcome o;
             const Fragment at32 = check_involutions(32);
             Fragment chosen = only(only(at32, "display.", false), "conjugation.pseudo-involution.", false);
             append(chosen, only(check_involutions(24), "conjugation.pseudo-involution.", true));
             o.add(chosen);
             return o;
         }},
        {8, "eigenspace membership and section dimensions for N in {7, 8, 16}", 0,
         [] {
             Outcome o;
             o.add(check_eigenspaces(32));
             return o;
         }},
        {9, "200 random engine instances at n = 16, full verify at order 32 under 30 s", 0,
         [&cli] {
             Outcome o = engine_properties();
             const Outcome c = cli_full_suite(cli);
             o.ok = o.ok && c.ok;
             o.details.insert(o.details.end(), c.details.begin(), c.details.end());
             return o;
         }},
    };

    bool all_ok = true;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = seconds_since(t0);
        if (c.budget_s > 0 && secs >= c.budget_s) o.fail("took " + std::to_string(secs) + " s");
        all_ok = all_ok && o.ok;
        std::printf("criterion %d: %s  %s (%.2f s)\n", c.number, o.ok ? "PASS" : "FAIL", c.title.c_str(), secs);
        for (const auto& d : o.details) std::printf("    %s\n", d.c_str());
    }
    return all_ok ? 0 : 1;
}
