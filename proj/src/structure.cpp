#include "riordan/identities.hpp"

#include "riordan/errors.hpp"
#include "riordan/riordan.hpp"
#include "riordan/sequences.hpp"

namespace riordan {

namespace {

Series poly(std::vector<Rational> c, int order) { return Series::from_coeffs(std::move(c), order); }

std::vector<std::vector<Rational>> rows(std::initializer_list<std::initializer_list<long>> r) {
    std::vector<std::vector<Rational>> out;
    for (const auto& row : r) out.emplace_back(row.begin(), row.end());
    return out;
}

/// Marks the check skipped when order < needed; returns true if it should run.
bool window_ok(CheckBuilder& b, int order, int needed) {
    if (order >= needed) return true;
    b.skip("needs order >= " + std::to_string(needed) + ", got " + std::to_string(order));
    return false;
}

Check display_check(const std::string& id, const std::string& what, const std::string& name,
                    const std::vector<std::vector<Rational>>& expected, int order) {
    CheckBuilder b(id, what);
    const int n = static_cast<int>(expected.size());
    if (window_ok(b, order, n)) {
        b.expect(name, [&] {
            return differ(to_matrix(catalog_pair(name, n + kWorkingSlack), n), TriMatrix::from_rows(expected));
        });
    }
    return b.finish();
}

/// ((M - xM - x^2 M^2)/(1+x), (x + x^2 M)/(1+x))
RiordanPair motzkin_factor(int n) {
    const Series x = Series::x(n);
    const Series m = motzkin_series(n);
    const Series one_plus_x = poly({1, 1}, n);
    return RiordanPair((m - x * m - x * x * m * m) / one_plus_x, (x + x * x * m) / one_plus_x);
}

mpz_class catalan(long k) { return binomial(2 * k, k) / (k + 1); }

} // namespace

Rational closed_form_entry(EntryKind kind, int n, int j) {
    if (n < j || n < 0 || j < 0) return 0;
    if (j == 0) {
        if (kind == EntryKind::R) return n == 0 ? 1 : 0;
        return Rational(mpz_class(catalan(n) * (n + 1)));
    }
    if (kind == EntryKind::Q && j == 1) return Rational(mpz_class((2 * n - 1) * catalan(n - 1)));
    mpz_class sum = 0;
    for (int k = 0; 2 * k <= j - 1; ++k) {
        mpz_class coeff;
        if (kind == EntryKind::R) {
            coeff = binomial(j - 1 - k, k);
        } else {
            const mpz_class lower = binomial(j - 2 - k, k - 1);
            coeff = (n - 1 - k) * (binomial(j - 1 - k, k) + lower) + lower;
        }
        const mpz_class term = coeff * catalan(n - 1 - k);
        if (k % 2 == 0) sum += term;
        else sum -= term;
    }
    return Rational(sum);
}

Fragment coefficient_sum_identities(int j_max) {
    Fragment out;
    CheckBuilder fib("coefficient-sum.fibonacci", "sum_k binom(j-1-k, k) = F_j for 1 <= j <= jmax");
    CheckBuilder luc("coefficient-sum.lucas",
                     "sum_k [binom(j-1-k, k) + binom(j-2-k, k-1)] = L_(j-1) for 2 <= j <= jmax");
    CheckBuilder fib2("coefficient-sum.fibonacci-shifted", "sum_(k>=1) binom(j-2-k, k-1) = F_(j-2) for 3 <= j <= jmax");
    if (j_max < 3) {
        for (auto* b : {&fib, &luc, &fib2}) b->skip("needs jmax >= 3");
    } else {
        const SeqVec f = fibonacci_vec(j_max + 1);
        const SeqVec l = lucas_vec(j_max + 1);
        for (int j = 1; j <= j_max; ++j) {
            mpz_class s1 = 0, s2 = 0, s3 = 0;
            for (int k = 0; 2 * k <= j - 1; ++k) {
                s1 += binomial(j - 1 - k, k);
                s2 += binomial(j - 1 - k, k) + binomial(j - 2 - k, k - 1);
                if (k >= 1) s3 += binomial(j - 2 - k, k - 1);
            }
            const std::string at = "j=" + std::to_string(j);
            fib.expect("", [&] { return differ(Rational(s1), f[j], at); });
            if (j >= 2) luc.expect("", [&] { return differ(Rational(s2), l[j - 1], at); });
            if (j >= 3) fib2.expect("", [&] { return differ(Rational(s3), f[j - 2], at); });
        }
    }
    out.push_back(fib.finish());
    out.push_back(luc.finish());
    out.push_back(fib2.finish());
    return out;
}

Fragment check_displays(int order) {
    Fragment out;
    out.push_back(display_check("display.fibonacci-second-kind", "rows 0-4 of (1, x(1+x))", "FS",
                                rows({{1}, {0, 1}, {0, 1, 1}, {0, 0, 2, 1}, {0, 0, 1, 3, 1}}), order));
    out.push_back(display_check("display.fibonacci-second-kind-inverse", "rows 0-4 of (1, x(1+x))^-1", "FSinv",
                                rows({{1}, {0, 1}, {0, -1, 1}, {0, 2, -2, 1}, {0, -5, 5, -3, 1}}), order));
    out.push_back(display_check("display.lucas-second-kind-inverse", "rows 0-4 of (1+2x, x(1+x))^-1", "LSinv",
                                rows({{1}, {-2, 1}, {6, -3, 1}, {-20, 10, -4, 1}, {70, -35, 15, -5, 1}}), order));
    out.push_back(display_check("display.catalan-fibonacci", "rows 0-4 of D FS^-1 D", "DFSinvD",
                                rows({{1}, {0, 1}, {0, 1, 1}, {0, 2, 2, 1}, {0, 5, 5, 3, 1}}), order));
    out.push_back(display_check("display.catalan-lucas", "rows 0-4 of D LS^-1 D", "DLSinvD",
                                rows({{1}, {2, 1}, {6, 3, 1}, {20, 10, 4, 1}, {70, 35, 15, 5, 1}}), order));
    return out;
}

Check pseudo_involution_display(int order) {
    return display_check("display.catalan-pseudo-involution", "rows 0-5 of ((1+xC)C, x(1+xC)C)", "R",
                         rows({{1}, {2, 1}, {4, 4, 1}, {10, 12, 6, 1}, {28, 36, 24, 8, 1}, {84, 112, 96, 40, 10, 1}}),
                         order);
}

Fragment check_factorizations(int order) {
    const int w = order + kWorkingSlack;
    Fragment out;
    auto run = [&](const std::string& id, const std::string& what, auto&& body) {
        CheckBuilder b(id, what);
        if (window_ok(b, order, 2)) body(b);
        out.push_back(b.finish());
    };
    struct {
        Series x, c, xc;
        RiordanPair df, dl, p, k;
    } const parts{Series::x(w), catalan_series(w), Series::x(w) * catalan_series(w), catalog_pair("DFSinvD", w),
                  catalog_pair("DLSinvD", w), pairs::pascal(w), motzkin_factor(w)};
    const Series one = Series::one(w);
    const RiordanPair catalan_pair(one, parts.xc);
    const RiordanPair lucas_pair(one / (one - 2 * parts.xc), parts.xc);
    const RiordanPair w_pair(central_binomial_series(w), parts.x);

    run("factor.fibonacci-catalan", "D FS^-1 D = (1, xC)",
        [&](CheckBuilder& b) { b.expect("", [&] { return differ(parts.df, catalan_pair, order); }); });
    run("factor.fibonacci-pascal-motzkin", "P ((M - xM - x^2M^2)/(1+x), (x + x^2M)/(1+x)) = (1, xC)",
        [&](CheckBuilder& b) { b.expect("", [&] { return differ(rmul(parts.p, parts.k), catalan_pair, order); }); });
    run("factor.lucas-catalan", "D LS^-1 D = (1/(1-2xC), xC)",
        [&](CheckBuilder& b) { b.expect("", [&] { return differ(parts.dl, lucas_pair, order); }); });
    run("factor.lucas-central-binomial-pascal-motzkin",
        "D LS^-1 D = (W, x) P ((M - xM - x^2M^2)/(1+x), (x + x^2M)/(1+x))", [&](CheckBuilder& b) {
            b.expect("", [&] { return differ(rmul(rmul(w_pair, parts.p), parts.k), parts.dl, order); });
        });
    run("factor.lucas-triple",
        "D LS^-1 D = (1/(1-2xC), x) D FS^-1 D = (W, x) D FS^-1 D = D FS^-1 D (1/(1-2x), x)", [&](CheckBuilder& b) {
            const RiordanPair left(one / (one - 2 * parts.xc), parts.x);
            const RiordanPair right(one / poly({1, -2}, w), parts.x);
            b.expect("(1/(1-2xC), x) D FS^-1 D", [&] { return differ(rmul(left, parts.df), parts.dl, order); });
            b.expect("(W, x) D FS^-1 D", [&] { return differ(rmul(w_pair, parts.df), parts.dl, order); });
            b.expect("D FS^-1 D (1/(1-2x), x)", [&] { return differ(rmul(parts.df, right), parts.dl, order); });
        });
    run("factor.euler-catalan-motzkin", "(1/(1+x), x/(1+x)) ((C-1)/x, x) = (M, x/(1+x))", [&](CheckBuilder& b) {
        const Series one_plus_x = poly({1, 1}, w);
        const RiordanPair euler(one / one_plus_x, parts.x / one_plus_x);
        const RiordanPair shifted((parts.c - one) / parts.x, parts.x);
        const RiordanPair expected(motzkin_series(w), parts.x / one_plus_x);
        b.expect("", [&] { return differ(rmul(euler, shifted), expected, order); });
    });
    run("factor.catalan-reciprocal-pair", "((C-1)/x, x) (x/(C-1), xC) = (1, xC)", [&](CheckBuilder& b) {
        const RiordanPair a((parts.c - one) / parts.x, parts.x);
        const RiordanPair inv(parts.x / (parts.c - one), parts.xc);
        b.expect("", [&] { return differ(rmul(a, inv), catalan_pair, order); });
    });
    return out;
}

Fragment check_catalan_motzkin_series(int order) {
    const int w = order + kWorkingSlack;
    const Series x = Series::x(w);
    const Series one = Series::one(w);
    const Series c = catalan_series(w);
    const Series m = motzkin_series(w);
    const Series xc = x * c;
    const Series one_minus_x = poly({1, -1}, w);
    Fragment out;
    auto run = [&](const std::string& id, const std::string& what, const std::function<std::optional<Witness>()>& fn) {
        CheckBuilder b(id, what);
        if (window_ok(b, order, 2)) b.expect("", fn);
        out.push_back(b.finish());
    };
    run("series.catalan-closed-form", "2xC = 1 - sqrt(1-4x)",
        [&] { return differ(2 * xc, one - sqrt(poly({1, -4}, w)), order); });
    run("series.motzkin-closed-form", "2x^2 M = 1 - x - sqrt((1-x)^2 - 4x^2)",
        [&] { return differ(2 * x * x * m, one_minus_x - sqrt(poly({1, -2, -3}, w)), order); });
    run("series.central-binomial", "W = 1/sqrt(1-4x) = 1/(1-2xC)", [&] {
        const Series wser = central_binomial_series(w);
        if (auto d = differ(wser, one / sqrt(poly({1, -4}, w)), order)) return d;
        return differ(wser, one / (one - 2 * xc), order);
    });
    run("series.euler-transform-motzkin", "T((C-1)/x) = M",
        [&] { return differ(euler_transform((c - one) / x), m, order); });
    run("series.catalan-at-euler-argument", "C(x/(1+x)) = 1 + xM",
        [&] { return differ(compose(c, x / poly({1, 1}, w)), one + x * m, order); });
    run("series.catalan-reciprocal", "x/(C-1) = 1 - x - xC",
        [&] { return differ(x / (c - one), one_minus_x - xc, order); });
    run("series.catalan-from-motzkin", "C = 1 + (x/(1-x)) M(x/(1-x))", [&] {
        const Series t = x / one_minus_x;
        return differ(c, one + t * compose(m, t), order);
    });
    return out;
}

Fragment check_recurrences(int order) {
    const int n = order;
    CheckBuilder rb("recurrence.catalan-fibonacci",
                    "r_00 = 1, r_i0 = 0, r_i1 = binom(2i-2, i-1)/i, r_ij = -r_(i-1,j-2) + r_(i,j-1)");
    CheckBuilder qb("recurrence.catalan-lucas",
                    "q_i0 = binom(2i, i), q_i1 = binom(2i, i)/2, q_ij = -q_(i-1,j-2) + q_(i,j-1)");
    if (window_ok(rb, order, 3) && window_ok(qb, order, 3)) {
        const TriMatrix r = to_matrix(catalog_pair("DFSinvD", n + kWorkingSlack), n);
        const TriMatrix q = to_matrix(catalog_pair("DLSinvD", n + kWorkingSlack), n);
        auto at = [](int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; };
        rb.expect("", [&] { return differ(r(0, 0), Rational(1), at(0, 0)); });
        for (int i = 0; i < n; ++i) {
            const Rational central(binomial(2 * i, i));
            qb.expect("", [&] { return differ(q(i, 0), central, at(i, 0)); });
            if (i == 0) continue;
            rb.expect("", [&] { return differ(r(i, 0), Rational(0), at(i, 0)); });
            rb.expect("", [&] { return differ(r(i, 1), Rational(binomial(2 * i - 2, i - 1)) / Rational(i), at(i, 1)); });
            qb.expect("", [&] { return differ(q(i, 1), central / Rational(2), at(i, 1)); });
            for (int j = 2; j < n; ++j) {
                rb.expect("", [&] { return differ(r(i, j), r(i, j - 1) - r(i - 1, j - 2), at(i, j)); });
                qb.expect("", [&] { return differ(q(i, j), q(i, j - 1) - q(i - 1, j - 2), at(i, j)); });
            }
        }
    }
    return {rb.finish(), qb.finish()};
}

Fragment check_partial_sums(int order) {
    const int n = order;
    CheckBuilder rb("partial-sum.catalan-fibonacci", "r_(i,i-j+1) = r_(i-1,i-1) + ... + r_(i-1,i-j) for i >= j >= 1");
    CheckBuilder qb("partial-sum.catalan-lucas", "q_(i,i-j+1) = q_(i-1,i-1) + ... + q_(i-1,i-j) for i >= j >= 1");
    if (window_ok(rb, order, 2) && window_ok(qb, order, 2)) {
        const TriMatrix r = to_matrix(catalog_pair("DFSinvD", n + kWorkingSlack), n);
        const TriMatrix q = to_matrix(catalog_pair("DLSinvD", n + kWorkingSlack), n);
        for (int i = 1; i < n; ++i) {
            Rational rs, qs;
            for (int j = 1; j <= i; ++j) {
                rs += r(i - 1, i - j);
                qs += q(i - 1, i - j);
                const std::string at = "i=" + std::to_string(i) + ",j=" + std::to_string(j);
                rb.expect("", [&] { return differ(r(i, i - j + 1), rs, at); });
                qb.expect("", [&] { return differ(q(i, i - j + 1), qs, at); });
            }
        }
    }
    return {rb.finish(), qb.finish()};
}

Fragment check_row_sums(int order) {
    const int n = order;
    CheckBuilder rb("row-sum.catalan-fibonacci", "D FS^-1 D e = [C_0, C_1, C_2, ...]");
    CheckBuilder qb("row-sum.catalan-lucas", "D LS^-1 D e = [C_0, 3C_1, 5C_2, ...]");
    if (window_ok(rb, order, 1) && window_ok(qb, order, 1)) {
        const auto cat = catalan_numbers(n);
        std::vector<Rational> c, odd;
        for (int k = 0; k < n; ++k) {
            c.emplace_back(cat[static_cast<std::size_t>(k)]);
            odd.emplace_back(mpz_class(cat[static_cast<std::size_t>(k)] * (2 * k + 1)));
        }
        const SeqVec e = ones_vec(n + kWorkingSlack);
        rb.expect("", [&] { return differ(apply(catalog_pair("DFSinvD", n + kWorkingSlack), e), SeqVec(c), n); });
        qb.expect("", [&] { return differ(apply(catalog_pair("DLSinvD", n + kWorkingSlack), e), SeqVec(odd), n); });
    }
    return {rb.finish(), qb.finish()};
}

Fragment check_closed_forms(int order) {
    const int n = order;
    CheckBuilder rb("closed-form.catalan-fibonacci",
                    "r_nj = sum_k (-1)^k binom(j-1-k, k) C_(n-1-k) for n >= j >= 1, matching D FS^-1 D");
    CheckBuilder qb("closed-form.catalan-lucas",
                    "q_nj = sum_k (-1)^k [(n-1-k)(binom(j-1-k, k) + binom(j-2-k, k-1)) + binom(j-2-k, k-1)] "
                    "C_(n-1-k), matching D LS^-1 D");
    if (window_ok(rb, order, 2) && window_ok(qb, order, 2)) {
        const TriMatrix r = to_matrix(catalog_pair("DFSinvD", n + kWorkingSlack), n);
        const TriMatrix q = to_matrix(catalog_pair("DLSinvD", n + kWorkingSlack), n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const std::string at = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
                rb.expect("", [&] { return differ(closed_form_entry(EntryKind::R, i, j), r(i, j), at); });
                qb.expect("", [&] { return differ(closed_form_entry(EntryKind::Q, i, j), q(i, j), at); });
            }
        }
    }
    return {rb.finish(), qb.finish()};
}

} // namespace riordan
