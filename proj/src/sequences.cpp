#include "riordan/sequences.hpp"

#include <algorithm>

#include "riordan/errors.hpp"

namespace riordan {

std::vector<mpz_class> catalan_numbers(int n) {
    std::vector<mpz_class> c;
    for (int k = 0; k < n; ++k) c.push_back(binomial(2 * k, k) / (k + 1));
    return c;
}

Series catalan_series(int order) {
    // C_{m+1} = sum_{k<=m} C_k C_{m-k}
    std::vector<mpz_class> c(static_cast<std::size_t>(std::max(order, 0)));
    if (order > 0) c[0] = 1;
    for (int m = 1; m < order; ++m) {
        mpz_class s = 0;
        for (int k = 0; k < m; ++k) s += c[static_cast<std::size_t>(k)] * c[static_cast<std::size_t>(m - 1 - k)];
        c[static_cast<std::size_t>(m)] = s;
    }
    std::vector<Rational> r(c.begin(), c.end());
    return Series::from_coeffs(std::move(r), order);
}

Series motzkin_series(int order) {
    const auto cat = catalan_numbers(order / 2 + 1);
    std::vector<Rational> m;
    for (int n = 0; n < order; ++n) {
        mpz_class s = 0;
        for (int k = 0; 2 * k <= n; ++k) s += binomial(n, 2 * k) * cat[static_cast<std::size_t>(k)];
        m.emplace_back(s);
    }
    return Series::from_coeffs(std::move(m), order);
}

Series central_binomial_series(int order) {
    std::vector<Rational> w;
    for (int n = 0; n < order; ++n) w.emplace_back(binomial(2 * n, n));
    return Series::from_coeffs(std::move(w), order);
}

namespace {

SeqVec two_term_recurrence(int n, long a0, long a1) {
    std::vector<Rational> v;
    mpz_class prev = a0, cur = a1;
    for (int i = 0; i < n; ++i) {
        v.emplace_back(prev);
        mpz_class next = prev + cur;
        prev = cur;
        cur = next;
    }
    return SeqVec(std::move(v));
}

} // namespace

SeqVec fibonacci_vec(int n) { return two_term_recurrence(n, 0, 1); }
SeqVec lucas_vec(int n) { return two_term_recurrence(n, 2, 1); }

SeqVec unit_vec(int j, int n) {
    std::vector<Rational> v(static_cast<std::size_t>(n));
    if (j < n) v[static_cast<std::size_t>(j)] = 1;
    return SeqVec(std::move(v), j);
}

SeqVec ones_vec(int n) { return SeqVec(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))); }

SeqVec shift_vec(const SeqVec& v) {
    SeqVec out;
    if (v.size() > 1) out.entries.assign(v.entries.begin() + 1, v.entries.end());
    if (v.support_degree) {
        out.support_degree = std::max(*v.support_degree - 1, -1);
        // a known-zero tail lets the window keep its length
        out.entries.resize(static_cast<std::size_t>(v.size()));
    }
    return out;
}

Series euler_transform(const Series& f) {
    if (f.valuation() < 0) {
        throw Error(Errc::InvalidArgument, "Euler transform expects a power series");
    }
    const int n = f.order();
    const Series one_plus_x = Series::from_coeffs({1, 1}, n);
    const Series inner = Series::x(n) / one_plus_x;
    return compose(f, inner) / one_plus_x;
}

namespace pairs {

namespace {
Series poly(std::vector<Rational> c, int order) { return Series::from_coeffs(std::move(c), order); }
} // namespace

RiordanPair pascal(int order) {
    const Series one_minus_x = poly({1, -1}, order);
    return RiordanPair(Series::one(order) / one_minus_x, Series::x(order) / one_minus_x);
}

RiordanPair q_matrix(int order) {
    const Series one_minus_x = poly({1, -1}, order);
    return RiordanPair(poly({2, -1}, order) / one_minus_x, Series::x(order) / one_minus_x);
}

RiordanPair D(int order) { return RiordanPair::alternating(order); }

RiordanPair FS(int order) { return RiordanPair(Series::one(order), poly({0, 1, 1}, order)); }

RiordanPair LS(int order) { return RiordanPair(poly({1, 2}, order), poly({0, 1, 1}, order)); }

RiordanPair FF(int order) {
    const Series one_minus_x = poly({1, -1}, order);
    return RiordanPair(Series::x(order) / one_minus_x, poly({0, 0, 1}, order) / one_minus_x, PairKind::Semi);
}

RiordanPair LF(int order) {
    const Series one_minus_x = poly({1, -1}, order);
    return RiordanPair(poly({2, -1}, order) / one_minus_x, poly({0, 0, 1}, order) / one_minus_x,
                       PairKind::Semi);
}

RiordanPair appell_involution(int order) {
    return RiordanPair(poly({1, 1}, order) / poly({1, -1}, order), Series::monomial(-1, 1, order));
}

RiordanPair catalan_pseudo_involution(int order) {
    const Series c = catalan_series(order);
    const Series g = (Series::one(order) + Series::x(order) * c) * c;
    return RiordanPair(g, Series::x(order) * g);
}

} // namespace pairs

std::vector<std::string> catalog_names() {
    return {"pascal", "Q", "D", "I", "FS", "LS", "FF", "LF",
            "FSinv", "LSinv", "DFSinvD", "DLSinvD", "appell", "R"};
}

RiordanPair catalog_pair(const std::string& name, int order) {
    if (name == "pascal" || name == "P") return pairs::pascal(order);
    if (name == "Q") return pairs::q_matrix(order);
    if (name == "D") return pairs::D(order);
    if (name == "I") return RiordanPair::identity(order);
    if (name == "FS" || name == "fibonacci") return pairs::FS(order);
    if (name == "LS") return pairs::LS(order);
    if (name == "FF") return pairs::FF(order);
    if (name == "LF") return pairs::LF(order);
    if (name == "FSinv") return rinv(pairs::FS(order));
    if (name == "LSinv") return rinv(pairs::LS(order));
    if (name == "DFSinvD") return conj_by_D(rinv(pairs::FS(order)));
    if (name == "DLSinvD") return conj_by_D(rinv(pairs::LS(order)));
    if (name == "appell") return pairs::appell_involution(order);
    if (name == "R") return pairs::catalan_pseudo_involution(order);
    throw Error(Errc::UnknownName, "no catalog matrix named '" + name + "'");
}

} // namespace riordan
