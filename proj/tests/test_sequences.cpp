#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/errors.hpp"
#include "riordan/sequences.hpp"
#include "test_support.hpp"

using namespace riordan;
using namespace riordan::testing;

namespace {

mpz_class binom(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace

TEST_CASE("catalan numbers against the convolution recurrence") {
    const int n = 30;
    std::vector<mpz_class> c{1};
    for (int m = 1; m < n; ++m) {
        mpz_class s = 0;
        for (int k = 0; k < m; ++k) s += c[k] * c[m - 1 - k];
        c.push_back(s);
    }
    CHECK(catalan_numbers(n) == c);
    const Series cs = catalan_series(n);
    for (int k = 0; k < n; ++k) CHECK(cs.coeff(k) == Rational(c[k]));
    CHECK(first(cs, 8) == ints({1, 1, 2, 5, 14, 42, 132, 429}));
}

TEST_CASE("motzkin and central binomial") {
    const int n = 25;
    std::vector<mpz_class> m{1, 1};
    for (int k = 2; k < n; ++k) {
        mpz_class s = m[k - 1];
        for (int i = 0; i <= k - 2; ++i) s += m[i] * m[k - 2 - i];
        m.push_back(s);
    }
    const Series ms = motzkin_series(n);
    for (int k = 0; k < n; ++k) CHECK(ms.coeff(k) == Rational(m[k]));
    CHECK(first(ms, 9) == ints({1, 1, 2, 4, 9, 21, 51, 127, 323}));

    const Series w = central_binomial_series(n);
    for (int k = 0; k < n; ++k) CHECK(w.coeff(k) == Rational(binom(2 * k, k)));
}

TEST_CASE("fibonacci and lucas vectors") {
    CHECK(fibonacci_vec(10).entries == ints({0, 1, 1, 2, 3, 5, 8, 13, 21, 34}));
    CHECK(lucas_vec(10).entries == ints({2, 1, 3, 4, 7, 11, 18, 29, 47, 76}));
    // L_n = F_(n-1) + F_(n+1)
    const SeqVec f = fibonacci_vec(40), l = lucas_vec(40);
    for (int k = 1; k + 1 < 40; ++k) CHECK(l[k] == f[k - 1] + f[k + 1]);
}

TEST_CASE("unit, ones and shift vectors") {
    const SeqVec e2 = unit_vec(2, 5);
    CHECK(e2.entries == ints({0, 0, 1, 0, 0}));
    CHECK(e2.support_degree == 2);
    CHECK(e2.at(100).is_zero());
    const SeqVec ones = ones_vec(4);
    CHECK(ones.entries == ints({1, 1, 1, 1}));
    CHECK_THROWS(ones.at(4));
    CHECK(shift_vec(fibonacci_vec(6)).entries == ints({1, 1, 2, 3, 5}));
}

TEST_CASE("euler transform") {
    // f = 1/(1-x) maps to 1
    const int n = 12;
    const Series t = euler_transform(Series::one(n) / poly({1, -1}, n));
    for (int k = 0; k < t.order(); ++k) CHECK(t.coeff(k) == Rational(k == 0 ? 1 : 0));
    // C(x/(1+x)) / (1+x) = (1 + xM)/(1+x)
    const Series lhs = euler_transform(catalan_series(n));
    const Series rhs = (Series::one(n) + Series::x(n) * motzkin_series(n)) / poly({1, 1}, n);
    for (int k = 0; k < std::min(lhs.order(), rhs.order()); ++k) CHECK(lhs.coeff(k) == rhs.coeff(k));
}

TEST_CASE("catalog entries against binomial formulas") {
    const int n = 14;
    const TriMatrix p = to_matrix(catalog_pair("pascal", n), n);
    const TriMatrix fs = to_matrix(catalog_pair("FS", n), n);
    const TriMatrix ls = to_matrix(catalog_pair("LS", n), n);
    const TriMatrix ff = to_matrix(catalog_pair("FF", n), n);
    const TriMatrix q = to_matrix(catalog_pair("Q", n), n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            CHECK(p(i, j) == Rational(binom(i, j)));
            // x^j (1+x)^j and (1+2x) x^j (1+x)^j
            CHECK(fs(i, j) == Rational(binom(j, i - j)));
            CHECK(ls(i, j) == Rational(binom(j, i - j) + 2 * binom(j, i - j - 1)));
            // x^(2j+1) / (1-x)^(j+1)
            CHECK(ff(i, j) == Rational(binom(i - j - 1, j)));
            // (2-x) x^j / (1-x)^(j+1): 2 binom(i, j) - binom(i-1, j)
            CHECK(q(i, j) == Rational(2 * binom(i, j) - binom(i - 1, j)));
        }
    }
}

TEST_CASE("catalog names resolve") {
    for (const auto& name : catalog_names()) {
        const RiordanPair r = catalog_pair(name, 10);
        CHECK(to_matrix(r, 6).size() == 6);
    }
    CHECK(to_matrix(catalog_pair("P", 6), 6) == to_matrix(catalog_pair("pascal", 6), 6));
    try {
        catalog_pair("nope", 6);
        FAIL("expected UnknownName");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UnknownName);
    }
}

TEST_CASE("built-in involutions") {
    const int n = 20;
    const TriMatrix a = to_matrix(pairs::appell_involution(n), n);
    CHECK(a * a == TriMatrix::identity(n));
    const TriMatrix r = to_matrix(pairs::catalan_pseudo_involution(n), n);
    const TriMatrix rd = r * TriMatrix::alternating_diagonal(n);
    CHECK(rd * rd == TriMatrix::identity(n));
    // first rows
    CHECK(r.row(3) == [&] {
        auto v = ints({10, 12, 6, 1});
        v.resize(n);
        return v;
    }());
}
