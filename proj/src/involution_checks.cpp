#include "riordan/errors.hpp"
#include "riordan/identities.hpp"
#include "riordan/invariant.hpp"
#include "riordan/sequences.hpp"

namespace riordan {

namespace {

Series poly(std::vector<Rational> c, int order) { return Series::from_coeffs(std::move(c), order); }

bool window_ok(CheckBuilder& b, int order, int needed) {
    if (order >= needed) return true;
    b.skip("needs order >= " + std::to_string(needed) + ", got " + std::to_string(order));
    return false;
}

std::optional<Witness> expect_error(Errc expected, const std::function<void()>& fn, const std::string& where) {
    try {
        fn();
    } catch (const Error& e) {
        if (e.code() == expected) return std::nullopt;
        return Witness{where, std::string(errc_name(e.code())), std::string(errc_name(expected))};
    }
    return Witness{where, "no error", std::string(errc_name(expected))};
}

std::optional<Witness> certify_all(const RiordanPair& r, int power, int sign, InvariantKind kind,
                                   InvolutionType type, int order) {
    const auto cols = kind == InvariantKind::First ? build_first_kind(r, power, sign, type, order)
                                                   : build_second_kind(r, power, sign, type, order);
    return check_invariant_columns(r, cols, kind, {sign}, type, order);
}

std::string tag(const std::string& name, int power, int sign) {
    return name + " n=" + std::to_string(power) + (sign > 0 ? " (+)" : " (-)");
}

/// Column 2 of a lower triangular matrix against h l^2, where h, l are read off columns 0 and 1.
std::optional<Witness> not_riordan_witness(const TriMatrix& m) {
    const int n = m.size();
    std::vector<Rational> c0, c1, c2;
    for (int i = 0; i < n; ++i) {
        c0.push_back(m(i, 0));
        c1.push_back(m(i, 1));
        c2.push_back(m(i, 2));
    }
    const Series h = Series::from_coeffs(c0, n);
    const Series l = Series::from_coeffs(c1, n) / h;
    const Series expected = h * l * l;
    const Series actual = Series::from_coeffs(c2, n);
    if (differ(actual, expected, common_order(actual, expected))) return std::nullopt;
    return Witness{"column 2", "matches h l^2", "differs from h l^2"};
}

} // namespace

Fragment check_involutions(int order) {
    const int n = order;
    const int w = order + kWorkingSlack;
    const RiordanPair pascal = pairs::pascal(w);
    const RiordanPair catalan_r = pairs::catalan_pseudo_involution(w);
    const RiordanPair appell = pairs::appell_involution(w);
    const RiordanPair d = RiordanPair::alternating(w);
    constexpr int kMin = 4;
    Fragment out;

    {
        CheckBuilder b("predicate.pseudo-involutions", "(PD)^2 = I and (RD)^2 = I for P and R = ((1+xC)C, x(1+xC)C)");
        if (window_ok(b, order, 1)) {
            b.expect("P", [&] { return expect_true(is_pseudo_involution(pascal, n), "(PD)^2"); });
            b.expect("R", [&] { return expect_true(is_pseudo_involution(catalan_r, n), "(RD)^2"); });
        }
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("predicate.minus-one-appell-involution", "((1+x)/(1-x), -x)^2 = I");
        b.note("example involution chosen by the implementation: g(x) g(-x) = 1");
        if (window_ok(b, order, 1)) {
            b.expect("", [&] { return expect_true(is_involution(appell, n), "R^2"); });
        }
        out.push_back(b.finish());
    }
    out.push_back(pseudo_involution_display(order));
    {
        CheckBuilder b("invariant.first-kind",
                       "columns of (U+-D)^n (involution, U = RD) or (R+-D)^n (pseudo) satisfy R col = +-col "
                       "(resp. RD col = +-col)");
        if (window_ok(b, order, kMin)) {
            for (int p = 1; p <= 3; ++p) {
                for (int sign : {1, -1}) {
                    b.expect(tag("appell", p, sign), [&] {
                        return certify_all(appell, p, sign, InvariantKind::First, InvolutionType::Involution, n);
                    });
                    b.expect(tag("D", p, sign), [&] {
                        return certify_all(d, p, sign, InvariantKind::First, InvolutionType::Involution, n);
                    });
                    if (p <= 2) {
                        b.expect(tag("P", p, sign), [&] {
                            return certify_all(pascal, p, sign, InvariantKind::First, InvolutionType::Pseudo, n);
                        });
                        b.expect(tag("R", p, sign), [&] {
                            return certify_all(catalan_r, p, sign, InvariantKind::First, InvolutionType::Pseudo, n);
                        });
                    }
                }
            }
        }
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("invariant.second-kind",
                       "columns of (V^T+-D)^n (involution, V = DR) or (R^T+-D)^n (pseudo) satisfy R^T col = +-col "
                       "(resp. R^T D col = +-col)");
        b.note("the inverse second-kind clause is checked against E_-1(R^T), not E_-1(R)");
        if (window_ok(b, order, kMin)) {
            for (int p = 1; p <= 3; ++p) {
                for (int sign : {1, -1}) {
                    b.expect(tag("appell", p, sign), [&] {
                        return certify_all(appell, p, sign, InvariantKind::Second, InvolutionType::Involution, n);
                    });
                    if (p <= 2) {
                        b.expect(tag("P", p, sign), [&] {
                            return certify_all(pascal, p, sign, InvariantKind::Second, InvolutionType::Pseudo, n);
                        });
                        b.expect(tag("R", p, sign), [&] {
                            return certify_all(catalan_r, p, sign, InvariantKind::Second, InvolutionType::Pseudo, n);
                        });
                    }
                }
            }
        }
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("shift.appell-form", "(g, x) + I = (g+1, x)");
        if (window_ok(b, order, 2)) {
            b.expect("(1, x)", [&] {
                return differ(shift_by_identity(RiordanPair::identity(w)),
                              RiordanPair(Series::constant(2, w), Series::x(w)), n);
            });
            b.expect("((1+x)/(1-x), x)", [&] {
                const RiordanPair r(poly({1, 1}, w) / poly({1, -1}, w), Series::x(w));
                const RiordanPair expected(Series::constant(2, w) / poly({1, -1}, w), Series::x(w));
                if (auto m = differ(shift_by_identity(r), expected, n)) return m;
                return differ(to_matrix(r, n) + TriMatrix::identity(n), to_matrix(expected, n));
            });
        }
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("shift.only-if", "R + I is not a Riordan matrix for R = (1, x/(1-x))");
        if (window_ok(b, order, 4)) {
            const RiordanPair r(Series::one(w), Series::x(w) / poly({1, -1}, w));
            b.expect("shift_by_identity", [&] {
                return expect_error(Errc::NotAppellForm, [&] { shift_by_identity(r); }, "error code");
            });
            b.expect("dense columns", [&] { return not_riordan_witness(to_matrix(r, n) + TriMatrix::identity(n)); });
        }
        out.push_back(b.finish());
    }
    const std::string power_tag = ".power-";
    for (int p = 1; p <= 4; ++p) {
        CheckBuilder b("conjugation.minus-one-appell" + power_tag + std::to_string(p),
                       "R = B^n D B^-n with B^n = ((g+1)^n, x) for the involution R = (g, -x), n = " +
                           std::to_string(p));
        if (window_ok(b, order, 2)) {
            b.expect("D", [&] {
                const RiordanPair bd = conjugator(d, p);
                const RiordanPair expected(Series::constant(Rational(mpz_class(1) << p), w), Series::x(w));
                if (auto m = differ(bd, expected, n)) return m;
                return verify_conjugation(d, bd, n);
            });
            b.expect("appell", [&] {
                const RiordanPair bn = conjugator(appell, p);
                const RiordanPair expected(pow(appell.g() + Series::one(w), p), Series::x(w));
                if (auto m = differ(bn, expected, n)) return m;
                return verify_conjugation(appell, bn, n);
            });
        }
        out.push_back(b.finish());
    }
    for (int p = 1; p <= 4; ++p) {
        CheckBuilder b("conjugation.conjugator-columns" + power_tag + std::to_string(p),
                       "column j of ((g+1)^n, x) satisfies R col = (-1)^j col, n = " + std::to_string(p));
        if (window_ok(b, order, 2)) {
            b.expect("appell", [&]() -> std::optional<Witness> {
                const TriMatrix bm = to_matrix(conjugator(appell, p), n);
                std::vector<SeqVec> cols;
                for (int j = 0; j < n; ++j) cols.push_back(bm.column(j));
                return check_invariant_columns(appell, cols, InvariantKind::First, {1, -1},
                                               InvolutionType::Involution, n);
            });
        }
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("conjugation.interleaved",
                       "R M = M D and M invertible for M = [x_0, y_1, x_2, ...], x_j from (U+D)^n, y_j from (U-D)^n, "
                       "n = 1..4");
        if (window_ok(b, order, 2)) {
            std::vector<int> equal_powers, other_powers;
            for (int p = 1; p <= 4; ++p) {
                b.expect("appell n=" + std::to_string(p), [&]() -> std::optional<Witness> {
                    const TriMatrix m = interleaved_conjugator(appell, p, n);
                    for (int i = 0; i < n; ++i) {
                        if (m(i, i).is_zero()) return Witness{"diagonal " + std::to_string(i), "0", "nonzero"};
                    }
                    if (auto x = differ(to_matrix(appell, n) * m, m * TriMatrix::alternating_diagonal(n))) return x;
                    const bool same = !first_mismatch(m, to_matrix(conjugator(appell, p), n));
                    (same ? equal_powers : other_powers).push_back(p);
                    return std::nullopt;
                });
            }
            auto join = [](const std::vector<int>& v) {
                std::string s;
                for (int p : v) s += (s.empty() ? "" : ",") + std::to_string(p);
                return s.empty() ? std::string("none") : s;
            };
            b.note("M equals ((g+1)^n, x) for n in {" + join(equal_powers) + "} and differs for n in {" +
                   join(other_powers) + "}");
        }
        out.push_back(b.finish());
    }
    for (int p = 1; p <= 4; ++p) {
        CheckBuilder b("conjugation.shifted-involution" + power_tag + std::to_string(p),
                       "R = B^n D B^-n with B = RD + I for the involution R, n = " + std::to_string(p));
        if (window_ok(b, order, 2)) {
            b.expect("appell", [&] {
                return verify_dense_conjugation(pseudo_conjugator(appell, p, InvolutionType::Involution, n));
            });
        }
        out.push_back(b.finish());
    }
    for (int p = 1; p <= 2; ++p) {
        CheckBuilder b("conjugation.pseudo-involution" + power_tag + std::to_string(p),
                       "RD = B^n D B^-n with B = R + I for a pseudo-involution R, n = " + std::to_string(p));
        if (window_ok(b, order, 2)) {
            b.expect("R", [&] {
                return verify_dense_conjugation(pseudo_conjugator(catalan_r, p, InvolutionType::Pseudo, n));
            });
            b.expect("P", [&] {
                return verify_dense_conjugation(pseudo_conjugator(pascal, p, InvolutionType::Pseudo, n));
            });
            b.expect("(1, x)", [&]() -> std::optional<Witness> {
                const DenseConjugator c = pseudo_conjugator(RiordanPair::identity(w), p, InvolutionType::Pseudo, n);
                if (auto m = differ(c.b, 2 * TriMatrix::identity(n))) return m;
                return verify_dense_conjugation(c);
            });
        }
        out.push_back(b.finish());
    }
    return out;
}

Fragment check_eigenspaces(int order) {
    const int n = order;
    const int w = order + kWorkingSlack;
    Fragment out;
    const TriMatrix d_section = TriMatrix::alternating_diagonal(n);

    auto member_check = [&](const std::string& id, const std::string& what, const std::string& name, int sign,
                            bool transposed) {
        CheckBuilder b(id, what);
        if (window_ok(b, order, 2)) {
            const TriMatrix p = to_matrix(pairs::pascal(w), n);
            // a wider section shows each column's true support
            const TriMatrix cols = to_matrix(catalog_pair(name, w + kWorkingSlack), w);
            int checked = 0;
            for (int j = 0; j < n; ++j) {
                if (transposed) {
                    const SeqVec c = SeqVec::finite(cols.column(j).entries);
                    if (*c.support_degree >= n) continue; // not fully inside the section
                    ++checked;
                    b.expect("column " + std::to_string(j),
                             [&] { return differ(transpose_apply(d_section * p, c), sign > 0 ? c : -c, n); });
                } else {
                    const SeqVec c = cols.column(j).prefix(n);
                    ++checked;
                    b.expect("column " + std::to_string(j),
                             [&] { return differ((p * d_section) * c, sign > 0 ? c : -c, n); });
                }
            }
            b.note(std::to_string(checked) + " columns fully inside the window");
        }
        out.push_back(b.finish());
    };
    member_check("eigen.fibonacci-second-kind-columns", "columns of (1, x(1+x)) lie in E_1(P^T D)", "FS", 1, true);
    member_check("eigen.lucas-second-kind-columns", "columns of (1+2x, x(1+x)) lie in E_-1(P^T D)", "LS", -1, true);
    member_check("eigen.fibonacci-first-kind-columns", "columns of (x/(1-x), x^2/(1-x)) lie in E_-1(PD)", "FF", -1,
                 false);
    member_check("eigen.lucas-first-kind-columns", "columns of ((2-x)/(1-x), x^2/(1-x)) lie in E_1(PD)", "LF", 1,
                 false);

    {
        CheckBuilder b("eigen.fibonacci-lucas-vectors", "PD F = -F and PD L = L");
        b.note("F is an inverse and L an ordinary P-invariant sequence of the first kind");
        if (window_ok(b, order, 2)) {
            const TriMatrix pd = to_matrix(pairs::pascal(w), n) * d_section;
            const SeqVec f = fibonacci_vec(n);
            const SeqVec l = lucas_vec(n);
            b.expect("F", [&] { return differ(pd * f, -f, n); });
            b.expect("L", [&] { return differ(pd * l, l, n); });
        }
        out.push_back(b.finish());
    }
    {
        CheckBuilder b("eigen.section-dimensions",
                       "for N in {7, 8, 16}: dim E_1 = ceil(N/2), dim E_-1 = floor(N/2) on the N-sections of PD and "
                       "P^T D, spanned by the special-matrix columns");
        std::vector<int> sizes;
        for (int s : {7, 8, 16}) {
            if (s <= order) sizes.push_back(s);
        }
        if (sizes.empty()) {
            b.skip("needs order >= 7, got " + std::to_string(order));
        }
        for (int s : sizes) {
            const std::string at = "N=" + std::to_string(s);
            const TriMatrix pd = to_matrix(pairs::pascal(s + kWorkingSlack), s) * TriMatrix::alternating_diagonal(s);
            const TriMatrix pt_d = to_matrix(pairs::pascal(s + kWorkingSlack), s).transpose() *
                                   TriMatrix::alternating_diagonal(s);
            const int up = (s + 1) / 2;
            const int down = s / 2;
            auto dim = [&](const TriMatrix& m, int lambda, int expected, const std::string& label) {
                b.expect(at + " " + label, [&] {
                    const int got = static_cast<int>(nullspace(m, lambda).size());
                    return differ(Rational(got), Rational(expected), "dim");
                });
            };
            dim(pd, 1, up, "E_1(PD)");
            dim(pd, -1, down, "E_-1(PD)");
            dim(pt_d, 1, up, "E_1(P^T D)");
            dim(pt_d, -1, down, "E_-1(P^T D)");
            // Columns fully inside the section: nonzero prefixes for the lower triangular first-kind
            // matrices, support < N for the second kind. Each must lie in the eigenspace, and together
            // they must have full rank.
            auto span = [&](const std::string& name, bool second_kind, int lambda, int expected) {
                b.expect(at + " " + name + " basis", [&]() -> std::optional<Witness> {
                    const int wide = s + kWorkingSlack;
                    const TriMatrix m = to_matrix(catalog_pair(name, wide + kWorkingSlack), wide);
                    std::vector<SeqVec> cols;
                    for (int j = 0; j < s; ++j) {
                        const SeqVec c = SeqVec::finite(m.column(j).entries);
                        if (second_kind ? *c.support_degree >= s : *c.support_degree < j) continue;
                        const SeqVec head = second_kind ? SeqVec::finite(c.prefix(s).entries) : c.prefix(s);
                        bool nonzero = false;
                        for (const auto& e : head.entries) nonzero = nonzero || !e.is_zero();
                        if (!nonzero) continue;
                        const SeqVec image = second_kind ? transpose_apply(TriMatrix::alternating_diagonal(s) *
                                                                               to_matrix(pairs::pascal(wide), s),
                                                                           head)
                                                         : pd * head;
                        if (auto x = differ(image, lambda > 0 ? head : -head, s)) {
                            x->location = "column " + std::to_string(j) + " " + x->location;
                            return x;
                        }
                        cols.push_back(head);
                    }
                    if (auto x = differ(Rational(static_cast<long>(cols.size())), Rational(expected), "columns")) {
                        return x;
                    }
                    return differ(Rational(rank(cols)), Rational(expected), "rank");
                });
            };
            span("LF", false, 1, up);
            span("FF", false, -1, down);
            span("FS", true, 1, up);
            span("LS", true, -1, down);
        }
        out.push_back(b.finish());
    }
    return out;
}

} // namespace riordan
