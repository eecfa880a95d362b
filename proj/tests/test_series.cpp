#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/sequences.hpp"
#include "riordan/series.hpp"
#include "test_support.hpp"

using namespace riordan;
using namespace riordan::testing;

namespace {

// Catalan numbers straight from binom(2n, n) / (n + 1)
std::vector<Rational> catalan_oracle(int n) {
    std::vector<Rational> c;
    for (int k = 0; k < n; ++k) c.emplace_back(binomial(2 * k, k) / (k + 1));
    return c;
}

// Cauchy product of two coefficient lists, by definition
std::vector<Rational> convolve(const std::vector<Rational>& a, const std::vector<Rational>& b, int n) {
    std::vector<Rational> out(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        for (int i = 0; i <= k; ++i)
            if (i < static_cast<int>(a.size()) && k - i < static_cast<int>(b.size()))
                out[static_cast<std::size_t>(k)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k - i)];
    return out;
}

void check_equal_on(const Series& a, const Series& b, int n) {
    const auto m = first_mismatch(a, b, n);
    if (m) FAIL("degree " << m->degree << ": " << m->lhs << " vs " << m->rhs);
}

} // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(mpz_class(2), mpz_class(4)) == Rational(mpz_class(1), mpz_class(2)));
    CHECK(Rational(mpz_class(0), mpz_class(-7)).denominator() == 1);
    CHECK(Rational(mpz_class(3), mpz_class(-6)).str() == "-1/2");
    CHECK(Rational::parse(" -12/8 ") == Rational(mpz_class(-3), mpz_class(2)));
    CHECK(Rational::parse("+5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    Rational r;
    CHECK(rational_sqrt(Rational(mpz_class(9), mpz_class(4)), r));
    CHECK(r == Rational(mpz_class(3), mpz_class(2)));
    CHECK_FALSE(rational_sqrt(Rational(2), r));
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(6, 3) == 20);
}

TEST_CASE("series window bookkeeping") {
    const Series z(5);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 5);
    CHECK(z.coeff(4) == 0);
    CHECK_THROWS_AS(z.coeff(5), Error);

    const Series c = catalan_series(5);
    const Series xc = Series::x(6) * c;
    // shifting by x extends the exact window by one
    CHECK(xc.order() == 6);
    CHECK(xc.coeff(5) == 14);

    // leading zeros are stripped, never trailing unknowns
    const Series s = Series::from_coeffs(ints({0, 0, 3}), 6);
    CHECK(s.valuation() == 2);
    CHECK(s.order() == 6);
    CHECK(s.coeff(5) == 0);
}

TEST_CASE("add") {
    CHECK(first(poly({1, 1}, 8) + poly({-1, 1}, 8), 3) == ints({0, 2, 0}));
    CHECK((poly({1, 1}, 8) + poly({-1, 1}, 8)).valuation() == 1);
    const Series c = catalan_series(12);
    check_equal_on(c + Series(12), c, 12);
    const Series ls_g = poly({1, 2}, 8);
    check_equal_on(ls_g + poly({0, -2}, 8), Series::one(8), 8);
    CHECK((poly({1}, 4) + poly({1}, 9)).order() == 4);
}

TEST_CASE("mul") {
    CHECK(first(poly({1, 1}, 6) * poly({1, -1}, 6), 4) == ints({1, 0, -1, 0}));

    const int n = 12;
    const auto cat = catalan_oracle(n);
    const auto sq = convolve(cat, cat, n);
    std::vector<Rational> shifted{0};
    shifted.insert(shifted.end(), sq.begin(), sq.end() - 1);
    const Series c = catalan_series(n);
    CHECK(first(Series::x(n) * c * c, n) == shifted);
    CHECK(first(Series::x(n) * c * c, 5) == ints({0, 1, 2, 5, 14}));

    std::vector<Rational> w;
    for (int k = 0; k < n; ++k) w.emplace_back(binomial(2 * k, k));
    const auto w2 = convolve(w, w, n);
    const auto prod = convolve(ints({1, -4}), w2, n);
    const Series W = central_binomial_series(n);
    CHECK(first(poly({1, -4}, n) * W * W, n) == prod);
    CHECK(prod[0] == 1);
    for (int k = 1; k < n; ++k) CHECK(prod[static_cast<std::size_t>(k)] == 0);

    const Series inv_x = Series::from_coeffs(ints({1, 0, 0}), 2, -1);
    CHECK_THROWS_AS(inv_x * inv_x, Error);
    try {
        (void)(inv_x * inv_x);
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DoublePole);
    }
}

TEST_CASE("div") {
    const int n = 10;
    CHECK(first(Series::one(n) / poly({1, -1}, n), n) == std::vector<Rational>(n, Rational(1)));

    const Series c = catalan_series(n + 1);
    const Series q = Series::one(n) / (Series::one(n) - 2 * (Series::x(n) * c));
    CHECK(first(q, 5) == ints({1, 2, 6, 20, 70}));
    check_equal_on(q, central_binomial_series(n), n);

    // (2 - 2xC - x)/x = (2 - xC)/(xC), a simple pole with residue 2
    const Series xc = Series::x(n + 2) * catalan_series(n + 2);
    const Series num = Series::constant(2, n + 2) - 2 * xc - Series::x(n + 2);
    const Series lhs = num / Series::x(n + 2);
    CHECK(lhs.valuation() == -1);
    CHECK(lhs.coeff(-1) == 2);
    const Series rhs = (Series::constant(2, n + 2) - xc) / xc;
    check_equal_on(lhs, rhs, std::min(lhs.order(), rhs.order()));
    check_equal_on(rhs * xc, Series::constant(2, n + 2) - xc, rhs.order() + 1);

    try {
        (void)(Series::one(5) / Series(5));
        FAIL("expected InexactWindow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InexactWindow);
    }
    try {
        (void)(Series::one(5) / Series::monomial(1, 2, 5));
        FAIL("expected DoublePole");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DoublePole);
    }
}

TEST_CASE("compose") {
    const int n = 10;
    const Series one_minus_x = poly({1, -1}, n);
    const Series geo = Series::one(n) / one_minus_x;
    const Series res = compose(geo, Series::x(n) / one_minus_x);
    // [x^m] sum_k (x/(1-x))^k = sum_k binom(m-1, k-1)
    for (int m = 0; m < 8; ++m) {
        mpz_class s = (m == 0) ? 1 : 0;
        for (int k = 1; k <= m; ++k) s += binomial(m - 1, k - 1);
        CHECK(res.coeff(m) == Rational(s));
    }

    const Series c = catalan_series(n + 1);
    const Series c_minus_1_over_x = (c - Series::one(n + 1)) / Series::x(n + 1);
    const Series one_plus_x = poly({1, 1}, n);
    const Series m_series = compose(c_minus_1_over_x, Series::x(n) / one_plus_x) / one_plus_x;
    CHECK(first(m_series, 6) == ints({1, 1, 2, 4, 9, 21}));

    const Series a = catalan_series(n);
    check_equal_on(compose(a, Series::x(n)), a, n);

    try {
        (void)compose(a, poly({1, 1}, n));
        FAIL("expected NonformalComposition");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NonformalComposition);
    }

    // simple pole in the outer series: (1/x) o (x/(1-x)) = 1/x - 1
    const Series pole = Series::from_coeffs(ints({1}), n, -1);
    const Series r = compose(pole, Series::x(n) / one_minus_x);
    CHECK(r.valuation() == -1);
    CHECK(r.coeff(-1) == 1);
    CHECK(r.coeff(0) == -1);
    for (int k = 1; k < r.order(); ++k) CHECK(r.coeff(k) == 0);
    CHECK_THROWS_AS(compose(pole, Series::monomial(1, 2, n)), Error);
}

TEST_CASE("comp_inverse") {
    const int n = 12;
    const Series fbar = comp_inverse(poly({0, 1, 1}, n));
    CHECK(first(fbar, 6) == ints({0, 1, -1, 2, -5, 14}));
    const auto cat = catalan_oracle(n);
    for (int k = 1; k < n; ++k) {
        const Rational expected = (k % 2 == 1 ? 1 : -1) * cat[static_cast<std::size_t>(k - 1)];
        CHECK(fbar.coeff(k) == expected);
    }
    check_equal_on(comp_inverse(Series::x(n)), Series::x(n), n);

    const Series f = Series::x(n) / poly({1, -1}, n);
    const Series g = comp_inverse(f);
    check_equal_on(g, Series::x(n) / poly({1, 1}, n), n);
    check_equal_on(compose(f, g), Series::x(n), n);
    check_equal_on(compose(g, f), Series::x(n), n);

    try {
        (void)comp_inverse(Series::monomial(1, 2, n));
        FAIL("expected NotInvertible");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotInvertible);
    }
}

TEST_CASE("sqrt") {
    const int n = 12;
    const Series s = sqrt(poly({1, -4}, n));
    CHECK(first(s, 5) == ints({1, -2, -2, -4, -10}));
    check_equal_on(s * s, poly({1, -4}, n), n);
    const Series c = catalan_series(n);
    check_equal_on(s, Series::one(n) - 2 * (Series::x(n) * c), n);

    check_equal_on(sqrt(Series::one(n)), Series::one(n), n);

    const Series t = sqrt(poly({1, 4}, n));
    CHECK(first(t, 4) == ints({1, 2, -2, 4}));
    const Series half = Rational(mpz_class(1), mpz_class(2)) * (t - Series::one(n));
    check_equal_on(half, comp_inverse(poly({0, 1, 1}, n)), n);

    const Series r = sqrt(Series::from_coeffs({Rational(mpz_class(9), mpz_class(4)), 3}, n));
    CHECK(r.coeff(0) == Rational(mpz_class(3), mpz_class(2)));

    for (const Series& bad : {poly({2, 1}, n), Series::x(n), poly({-1, 1}, n)}) {
        try {
            (void)sqrt(bad);
            FAIL("expected NonSquareConstantTerm");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::NonSquareConstantTerm);
        }
    }
}

TEST_CASE("coeff") {
    CHECK(coeff(catalan_series(8), 4) == 14);
    CHECK(coeff(Series::x(8), 0) == 0);
    CHECK(coeff(central_binomial_series(8), 3) == 20);
    try {
        (void)coeff(catalan_series(5), 5);
        FAIL("expected OutOfWindow");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OutOfWindow);
    }
}

TEST_CASE("ring laws on random series") {
    Generator gen(20240611);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(gen.integer(2, 16));
        const Series a = gen.series(n), b = gen.series(n), c = gen.series(n, 1);
        check_equal_on(a + b, b + a, n);
        check_equal_on(a * b, b * a, n);
        check_equal_on((a + b) + c, a + (b + c), n);
        check_equal_on((a * b) * c, a * (b * c), n);
        check_equal_on(a * (b + c), a * b + a * c, n);
        check_equal_on((a / b) * b, a, n);
    }
}

TEST_CASE("composition and inversion round-trips") {
    Generator gen(77);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = static_cast<int>(gen.integer(3, 14));
        const Series a = gen.series(n);
        const Series b = gen.series(n, 1);
        const Series c = gen.series(n, static_cast<int>(gen.integer(1, 2)));
        check_equal_on(compose(compose(a, b), c), compose(a, compose(b, c)), n);

        const Series fbar = comp_inverse(b);
        check_equal_on(compose(b, fbar), Series::x(n), n);
        check_equal_on(compose(fbar, b), Series::x(n), n);

        std::vector<Rational> sq;
        sq.emplace_back(mpz_class(gen.integer(1, 5) * gen.integer(1, 5)));
        for (int k = 1; k < n; ++k) sq.push_back(gen.rational());
        const Series s = Series::from_coeffs(sq, n);
        Rational r0;
        if (rational_sqrt(s.coeff(0), r0)) {
            const Series root = sqrt(s);
            check_equal_on(root * root, s, n);
            CHECK(root.coeff(0).sign() > 0);
        }
    }
}
