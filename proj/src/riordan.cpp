#include "riordan/riordan.hpp"

#include <algorithm>
#include <sstream>

#include "riordan/errors.hpp"

namespace riordan {

RiordanPair::RiordanPair(Series g, Series f, PairKind kind)
    : g_(std::move(g)), f_(std::move(f)), kind_(kind) {
    if (f_.order() < 1 || f_.valuation() < 1) {
        throw Error(Errc::NonformalComposition, "second component must vanish at 0");
    }
    if (kind_ == PairKind::Proper && (g_.valuation() != 0 || f_.valuation() != 1)) {
        throw Error(Errc::NotProper, "proper pair needs g(0) != 0 and f'(0) != 0");
    }
}

RiordanPair RiordanPair::classify(Series g, Series f) {
    const bool proper = g.valuation() == 0 && f.valuation() == 1;
    return RiordanPair(std::move(g), std::move(f), proper ? PairKind::Proper : PairKind::Semi);
}

RiordanPair RiordanPair::identity(int order) {
    return RiordanPair(Series::one(order), Series::x(order));
}

RiordanPair RiordanPair::alternating(int order) {
    return RiordanPair(Series::one(order), Series::monomial(-1, 1, order));
}

int RiordanPair::window() const {
    return std::min(g_.order(), f_.order() + std::min(g_.valuation(), 0));
}

std::string RiordanPair::str(int max_terms) const {
    return "(" + g_.str(max_terms) + ", " + f_.str(max_terms) + ")";
}

std::string PairMismatch::str() const {
    std::ostringstream os;
    os << component << "[" << degree << "]: " << lhs << " vs " << rhs;
    return os.str();
}

std::optional<PairMismatch> first_mismatch(const RiordanPair& a, const RiordanPair& b, int n) {
    if (auto m = first_mismatch(a.g(), b.g(), n)) return PairMismatch{'g', m->degree, m->lhs, m->rhs};
    if (auto m = first_mismatch(a.f(), b.f(), n)) return PairMismatch{'f', m->degree, m->lhs, m->rhs};
    return std::nullopt;
}

TriMatrix to_matrix(const RiordanPair& p, int n) {
    if (p.g().valuation() < 0) {
        throw Error(Errc::LaurentRealization, "pair with a pole in g has no lower-triangular realization");
    }
    if (p.window() < n) {
        throw Error(Errc::WindowTooSmall, "pair is exact on " + std::to_string(p.window()) +
                                              " rows, " + std::to_string(n) + " requested");
    }
    TriMatrix m(n, true);
    Series column = p.g().truncate(n);
    for (int j = 0; j < n; ++j) {
        if (j > 0) column = mul_truncated(column, p.f(), n);
        for (int i = std::max(column.valuation(), 0); i < n; ++i) m(i, j) = column.coeff(i);
    }
    return m;
}

RiordanPair rmul(const RiordanPair& a, const RiordanPair& b) {
    Series g = a.g() * compose(b.g(), a.f());
    Series f = compose(b.f(), a.f());
    if (a.proper() && b.proper()) return RiordanPair(std::move(g), std::move(f), PairKind::Proper);
    return RiordanPair(std::move(g), std::move(f), PairKind::Semi);
}

RiordanPair radd(const RiordanPair& a, const RiordanPair& b) {
    const int n = common_order(a.f(), b.f());
    if (auto m = first_mismatch(a.f(), b.f(), n)) {
        std::ostringstream os;
        os << "second components differ at degree " << m->degree << " (" << m->lhs << " vs " << m->rhs << ")";
        throw Error(Errc::MismatchedF, os.str());
    }
    return RiordanPair(a.g() + b.g(), a.f().truncate(n), PairKind::Semi);
}

RiordanPair rinv(const RiordanPair& a) {
    if (!a.proper()) throw Error(Errc::NotProper, "only proper pairs are invertible");
    Series fbar = comp_inverse(a.f());
    Series g = Series::one(a.g().order()) / compose(a.g(), fbar);
    return RiordanPair(std::move(g), std::move(fbar));
}

RiordanPair rpow(const RiordanPair& a, int k) {
    if (k < 0) return rpow(rinv(a), -k);
    RiordanPair result = RiordanPair::identity(a.window());
    RiordanPair base = a;
    while (k > 0) {
        if (k & 1) result = rmul(result, base);
        k >>= 1;
        if (k > 0) base = rmul(base, base);
    }
    return result;
}

RiordanPair conj_by_D(const RiordanPair& a) {
    if (!a.proper()) throw Error(Errc::NotProper, "conjugation by D expects a proper pair");
    const RiordanPair d = RiordanPair::alternating(std::max(a.g().order(), a.f().order()));
    return rmul(rmul(d, a), d);
}

bool is_involution(const RiordanPair& a, int n) {
    if (!a.proper()) throw Error(Errc::NotProper, "involution test expects a proper pair");
    return !first_mismatch(rmul(a, a), RiordanPair::identity(n), n);
}

bool is_pseudo_involution(const RiordanPair& a, int n) {
    if (!a.proper()) throw Error(Errc::NotProper, "pseudo-involution test expects a proper pair");
    const RiordanPair ad = rmul(a, RiordanPair::alternating(a.f().order()));
    return !first_mismatch(rmul(ad, ad), RiordanPair::identity(n), n);
}

SeqVec apply(const RiordanPair& p, const SeqVec& v) {
    Series gf = v.generating_function();
    if (v.support_degree && v.size() < p.f().order()) {
        gf = Series::from_coeffs(v.entries, p.f().order());
    }
    const Series product = p.g() * compose(gf, p.f());
    if (product.valuation() < 0) {
        throw Error(Errc::ResidualPole, "output has nonzero x^-1 coefficient " + product.coeff(-1).str());
    }
    return SeqVec(product.coefficients(0));
}

SeqVec transpose_apply(const TriMatrix& m, const SeqVec& v) {
    if (!v.support_degree) {
        throw Error(Errc::UnknownTail, "transposed action needs a finitely supported vector");
    }
    const int support = *v.support_degree;
    const int n = m.size();
    if (support >= n) {
        throw Error(Errc::UnknownTail, "support degree " + std::to_string(support) +
                                           " not inside the " + std::to_string(n) + "-section");
    }
    std::vector<Rational> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        Rational s;
        for (int k = 0; k <= support; ++k) {
            if (!v[k].is_zero()) s += m(k, i) * v[k];
        }
        out[static_cast<std::size_t>(i)] = std::move(s);
    }
    if (m.lower_triangular()) return SeqVec::finite(std::move(out));
    return SeqVec(std::move(out));
}

} // namespace riordan
