// riordan: verify suites, dump matrices, evaluate series expressions.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riordan/errors.hpp"
#include "riordan/expr.hpp"
#include "riordan/riordan.hpp"
#include "riordan/sequences.hpp"
#include "riordan/suite.hpp"

using namespace riordan;

namespace {

int default_order() {
    if (const char* env = std::getenv("RIORDAN_ORDER")) {
        try {
            std::size_t used = 0;
            const int n = std::stoi(env, &used);
            if (used == std::string(env).size() && n >= 0) return n;
        } catch (const std::exception&) {
        }
        std::cerr << "warning: ignoring RIORDAN_ORDER=" << env << "\n";
    }
    return 64;
}

RiordanPair resolve_matrix(const std::string& spec, int order) {
    if (spec.find('(') != std::string::npos) return parse_pair(spec, order);
    try {
        return catalog_pair(spec, order);
    } catch (const Error& e) {
        if (e.code() != Errc::UnknownName) throw;
        std::string known;
        for (const auto& n : catalog_names()) known += (known.empty() ? "" : ", ") + n;
        throw Error(Errc::UnknownName, "'" + spec + "' (catalog: " + known + ")");
    }
}

std::string render_csv(const TriMatrix& m) {
    std::ostringstream os;
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) os << (j ? "," : "") << m(i, j).str();
        os << "\n";
    }
    return os.str();
}

// lower triangle only, right-aligned
std::string render_md(const TriMatrix& m) {
    const int n = m.size();
    std::vector<std::size_t> width(static_cast<std::size_t>(n), 1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) width[j] = std::max(width[j], m(i, j).str().size());
    std::ostringstream os;
    os << "|";
    for (int j = 0; j < n; ++j) os << " " << std::string(width[j] - std::to_string(j).size(), ' ') << j << " |";
    os << "\n|";
    for (int j = 0; j < n; ++j) os << std::string(width[j] + 1, '-') << ":|";
    os << "\n";
    for (int i = 0; i < n; ++i) {
        os << "|";
        for (int j = 0; j < n; ++j) {
            const std::string cell = j > i && m(i, j).is_zero() ? "" : m(i, j).str();
            os << " " << std::string(width[j] - cell.size(), ' ') << cell << " |";
        }
        os << "\n";
    }
    return os.str();
}

std::vector<Rational> read_vector(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::InvalidArgument, "cannot open " + path);
    std::vector<Rational> v;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        const auto e = line.find_last_not_of(" \t\r");
        try {
            v.push_back(Rational::parse(line.substr(b, e - b + 1)));
        } catch (const Error& err) {
            throw Error(Errc::SyntaxError, path + ":" + std::to_string(lineno) + ": " + err.what());
        }
    }
    return v;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Riordan array verifier"};
    app.require_subcommand(1);
    const int order_default = default_order();

    std::string suite = "all", format = "json", out;
    int order = order_default;
    std::uint64_t seed = 1;
    bool timing = false;
    auto* verify = app.add_subcommand("verify", "run a check suite");
    verify->add_option("--suite", suite, "all, structure, transforms, involutions, eigenspaces")->capture_default_str();
    verify->add_option("--order", order, "window size")->capture_default_str()->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "seed for random vectors")->capture_default_str();
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "md"}))->capture_default_str();
    verify->add_option("--out", out, "write the report here instead of stdout");
    verify->add_flag("--timing", timing, "include per-check elapsed milliseconds");

    std::string matrix, show_format = "md";
    int show_order = order_default;
    auto* show = app.add_subcommand("show", "print the leading section of a matrix");
    show->add_option("--matrix", matrix, "catalog name or \"(g, f)\"")->required();
    show->add_option("--order", show_order)->capture_default_str()->check(CLI::NonNegativeNumber);
    show->add_option("--format", show_format)->check(CLI::IsMember({"csv", "md"}))->capture_default_str();

    std::string expr;
    int eval_order = order_default;
    auto* eval_cmd = app.add_subcommand("eval", "print coefficients of a series expression");
    eval_cmd->add_option("--expr", expr)->required();
    eval_cmd->add_option("--order", eval_order)->capture_default_str()->check(CLI::NonNegativeNumber);

    std::string g_text, f_text, vec_path;
    auto* transform = app.add_subcommand("transform", "apply (g, f) to a vector, one rational per line");
    transform->add_option("--g", g_text)->required();
    transform->add_option("--f", f_text)->required();
    transform->add_option("--vec", vec_path)->required()->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*verify) {
            const SuiteReport report = run_suite(suite, order, seed);
            const std::string text = format == "json" ? render_json(report, timing) : render_markdown(report, timing);
            if (out.empty()) {
                std::cout << text;
            } else {
                std::ofstream f(out, std::ios::binary);
                if (!(f << text)) throw Error(Errc::InvalidArgument, "cannot write " + out);
            }
            return report.count(Status::Fail) == 0 ? 0 : 1;
        }
        if (*show) {
            const TriMatrix m = to_matrix(resolve_matrix(matrix, show_order), show_order);
            std::cout << (show_format == "csv" ? render_csv(m) : render_md(m));
            return 0;
        }
        if (*eval_cmd) {
            const Series s = eval_exact(*parse_expr(expr), eval_order);
            for (int k = 0; k < eval_order; ++k) std::cout << s.coeff(k).str() << "\n";
            return 0;
        }
        if (*transform) {
            const auto v = read_vector(vec_path);
            const int n = static_cast<int>(v.size());
            const RiordanPair p = parse_pair("(" + g_text + ", " + f_text + ")", n);
            for (const auto& c : apply(p, SeqVec(v)).entries) std::cout << c.str() << "\n";
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
