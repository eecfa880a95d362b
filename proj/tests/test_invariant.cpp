#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "riordan/invariant.hpp"
#include "riordan/sequences.hpp"
#include "test_support.hpp"

using namespace riordan;
using namespace riordan::testing;

namespace {

const RiordanPair kAppell = pairs::appell_involution(40);
const RiordanPair kPseudo = pairs::catalan_pseudo_involution(40);

template <class Fn>
Errc error_code(Fn&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::InvalidArgument;
}

// (R^T v)_j = sum_i R(i, j) v_i over the finite support of v, from a big enough dense section.
std::vector<Rational> finite_transpose_sum(const RiordanPair& r, const SeqVec& v, int n) {
    const int support = *v.support_degree + 1;
    const TriMatrix m = to_matrix(r, std::max(support, n));
    std::vector<Rational> out(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        for (int i = j; i < support; ++i) out[j] += m(i, j) * v.at(i);
    return out;
}

} // namespace

TEST_CASE("first kind for D") {
    const int n = 10;
    const auto cols = build_first_kind(pairs::D(n + 4), 1, +1, InvolutionType::Involution, n);
    REQUIRE(cols.size() == static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> expect(static_cast<std::size_t>(n));
        if (j % 2 == 0) expect[j] = 2;
        CHECK(cols[j].entries == expect);
    }
    CHECK_FALSE(check_invariant_columns(pairs::D(n + 4), cols, InvariantKind::First, {1}, InvolutionType::Involution, n));
}

TEST_CASE("first kind for the appell involution, dense oracle") {
    const int n = 32;
    const TriMatrix r = to_matrix(kAppell, n);
    const TriMatrix d = TriMatrix::alternating_diagonal(n);
    for (int sign : {1, -1}) {
        for (int power : {1, 2}) {
            const auto cols = build_first_kind(kAppell, power, sign, InvolutionType::Involution, n);
            const TriMatrix base = sign > 0 ? r * d + d : r * d - d;
            const TriMatrix m = matrix_power(base, power);
            for (int j = 0; j < n; ++j) {
                CHECK(cols[j] == m.column(j));
                const SeqVec lhs = r * cols[j];
                for (int i = 0; i < n; ++i) CHECK(lhs[i] == (sign > 0 ? cols[j][i] : -cols[j][i]));
            }
        }
    }
}

TEST_CASE("second kind, finite-sum oracle") {
    const int n = 16;
    for (int sign : {1, -1}) {
        const auto cols = build_second_kind(kAppell, 1, sign, InvolutionType::Involution, n);
        for (const auto& c : cols) {
            REQUIRE(c.support_degree.has_value());
            const auto lhs = finite_transpose_sum(kAppell, c, n);
            for (int j = 0; j < n; ++j) CHECK(lhs[j] == (sign > 0 ? c.at(j) : -c.at(j)));
        }
        CHECK_FALSE(check_invariant_columns(kAppell, cols, InvariantKind::Second, {sign}, InvolutionType::Involution, n));
    }
    // D degenerates to columns of I +- D
    const auto cols = build_second_kind(pairs::D(n), 1, -1, InvolutionType::Involution, 6);
    for (int j = 0; j < 6; ++j) CHECK(cols[j].at(j) == Rational(j % 2 == 0 ? 0 : 2));
}

TEST_CASE("pseudo-involution invariants") {
    const int n = 16;
    for (int sign : {1, -1}) {
        const auto first_cols = build_first_kind(kPseudo, 2, sign, InvolutionType::Pseudo, n);
        CHECK_FALSE(check_invariant_columns(kPseudo, first_cols, InvariantKind::First, {sign}, InvolutionType::Pseudo, n));
        const auto second_cols = build_second_kind(kPseudo, 1, sign, InvolutionType::Pseudo, n);
        CHECK_FALSE(check_invariant_columns(kPseudo, second_cols, InvariantKind::Second, {sign}, InvolutionType::Pseudo, n));
    }
    // wrong sign is caught
    const auto cols = build_first_kind(kPseudo, 1, 1, InvolutionType::Pseudo, n);
    CHECK(check_invariant_columns(kPseudo, cols, InvariantKind::First, {-1}, InvolutionType::Pseudo, n));
    CHECK(certify_columns("R", kPseudo, 1, 1, InvariantKind::First, InvolutionType::Pseudo, 8).size() == 8);
}

TEST_CASE("type preconditions") {
    CHECK(error_code([] { build_first_kind(pairs::pascal(20), 1, 1, InvolutionType::Involution, 8); }) ==
          Errc::NotInvolution);
    CHECK(error_code([] { build_second_kind(kAppell, 1, 1, InvolutionType::Pseudo, 8); }) ==
          Errc::NotPseudoInvolution);
}

TEST_CASE("shift by identity") {
    const int n = 12;
    const RiordanPair one = shift_by_identity(RiordanPair::identity(n));
    CHECK(to_matrix(one, n) == Rational(2) * TriMatrix::identity(n));

    const RiordanPair g = RiordanPair(poly({1, 1}, n) / poly({1, -1}, n), Series::x(n));
    const RiordanPair shifted = shift_by_identity(g);
    const RiordanPair expect(Series::constant(2, n) / poly({1, -1}, n), Series::x(n));
    CHECK(to_matrix(shifted, n) == to_matrix(expect, n));
    CHECK(to_matrix(shifted, n) == to_matrix(g, n) + TriMatrix::identity(n));

    const RiordanPair not_appell(Series::one(n), Series::x(n) / poly({1, -1}, n));
    CHECK(error_code([&] { shift_by_identity(not_appell); }) == Errc::NotAppellForm);
    // dense oracle: column 0 of R + I is 2 but column 1 is not 2 * (x/(1-x))
    const TriMatrix sum = to_matrix(not_appell, n) + TriMatrix::identity(n);
    CHECK(sum(1, 1) == Rational(2));
    CHECK(sum(2, 1) == Rational(1));

    const RiordanPair negative(Series::constant(-1, n), Series::x(n));
    CHECK(error_code([&] { shift_by_identity(negative); }) == Errc::NonpositiveDiagonal);
}

TEST_CASE("conjugator for D and n = 1") {
    const int n = 32;
    const RiordanPair b = conjugator(pairs::D(n), 1);
    CHECK(to_matrix(b, n) == Rational(2) * TriMatrix::identity(n));
    CHECK_FALSE(verify_conjugation(pairs::D(n), b, n));

    const RiordanPair b1 = conjugator(kAppell, 1);
    const RiordanPair expect(Series::constant(2, 40) / poly({1, -1}, 40), Series::x(40));
    CHECK(to_matrix(b1, n) == to_matrix(expect, n));
    CHECK_FALSE(verify_conjugation(kAppell, b1, n));
}

TEST_CASE("conjugator for n = 3 is ((g+1)^3, x) but does not conjugate D to R") {
    const int n = 32;
    const Series one_minus_x = poly({1, -1}, 40);
    const RiordanPair b3 = conjugator(kAppell, 3);
    const RiordanPair expect(Series::constant(8, 40) / (one_minus_x * one_minus_x * one_minus_x), Series::x(40));
    CHECK(to_matrix(b3, n) == to_matrix(expect, n));

    // for an Appell B = (h, x), B D B^-1 = (h(x)/h(-x), -x); here h(x)/h(-x) = g^3
    const RiordanPair conj = rmul(rmul(b3, pairs::D(40)), rinv(b3));
    const Series g = kAppell.g();
    const RiordanPair cube(g * g * g, Series::monomial(-1, 1, 40));
    CHECK(to_matrix(conj, n) == to_matrix(cube, n));
    CHECK(verify_conjugation(kAppell, b3, n).has_value());
}

TEST_CASE("conjugator preconditions") {
    CHECK(error_code([] { conjugator(pairs::pascal(20), 1); }) == Errc::NotMinusOneAppell);
    const int n = 20;
    // (1 + x, -x) is not an involution
    const RiordanPair r(poly({1, 1}, n), Series::monomial(-1, 1, n));
    CHECK(error_code([&] { conjugator(r, 1); }) == Errc::NotInvolution);
    const RiordanPair neg(Series::constant(-1, n), Series::monomial(-1, 1, n));
    CHECK(error_code([&] { conjugator(neg, 1); }) == Errc::NonpositiveDiagonal);
}

TEST_CASE("dense conjugators") {
    const int n = 24;
    const DenseConjugator c1 = pseudo_conjugator(kPseudo, 1, InvolutionType::Pseudo, n);
    CHECK_FALSE(verify_dense_conjugation(c1));
    CHECK_FALSE(c1.pair.has_value());
    // RD B = B D forces RD B^2 = B D B, which equals B^2 D only when R = I
    const DenseConjugator c2 = pseudo_conjugator(kPseudo, 2, InvolutionType::Pseudo, n);
    CHECK(verify_dense_conjugation(c2).has_value());

    const DenseConjugator id = pseudo_conjugator(RiordanPair::identity(n), 2, InvolutionType::Pseudo, n);
    CHECK(id.b == Rational(2) * TriMatrix::identity(n));
    CHECK_FALSE(verify_dense_conjugation(id));

    const DenseConjugator a1 = pseudo_conjugator(kAppell, 1, InvolutionType::Involution, n);
    CHECK_FALSE(verify_dense_conjugation(a1));
    REQUIRE(a1.pair.has_value());
    CHECK(to_matrix(*a1.pair, n) == a1.b_power);
}

TEST_CASE("interleaved columns intertwine R and D for every power") {
    const int n = 20;
    const TriMatrix r = to_matrix(kAppell, n);
    const TriMatrix d = TriMatrix::alternating_diagonal(n);
    for (int power = 1; power <= 4; ++power) {
        const TriMatrix m = interleaved_conjugator(kAppell, power, n);
        CHECK(r * m == m * d);
        CHECK((m == to_matrix(conjugator(kAppell, power), n)) == (power == 1));
    }
}
