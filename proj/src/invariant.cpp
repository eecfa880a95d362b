#include "riordan/invariant.hpp"

#include "riordan/errors.hpp"

namespace riordan {

namespace {

void require_type(const RiordanPair& r, InvolutionType type, int order) {
    if (type == InvolutionType::Involution) {
        if (!is_involution(r, order)) throw Error(Errc::NotInvolution, "R^2 differs from I on the window");
    } else if (!is_pseudo_involution(r, order)) {
        throw Error(Errc::NotPseudoInvolution, "(RD)^2 differs from I on the window");
    }
}

SeqVec scaled(const SeqVec& v, int sign) { return sign < 0 ? -v : v; }

bool is_x(const Series& f) {
    return f.order() >= 2 && !first_mismatch(f, Series::x(f.order()), f.order());
}

} // namespace

std::vector<SeqVec> build_first_kind(const RiordanPair& r, int power, int sign, InvolutionType type, int order) {
    require_type(r, type, order);
    const TriMatrix rm = to_matrix(r, order);
    const TriMatrix d = TriMatrix::alternating_diagonal(order);
    const TriMatrix base = type == InvolutionType::Involution ? rm * d : rm;
    const TriMatrix m = matrix_power(sign > 0 ? base + d : base - d, power);
    std::vector<SeqVec> cols;
    for (int j = 0; j < order; ++j) cols.push_back(m.column(j));
    return cols;
}

std::vector<SeqVec> build_second_kind(const RiordanPair& r, int power, int sign, InvolutionType type, int order) {
    require_type(r, type, order);
    const TriMatrix rt = to_matrix(r, order).transpose();
    const TriMatrix d = TriMatrix::alternating_diagonal(order);
    // V^T = (DR)^T = R^T D
    const TriMatrix base = type == InvolutionType::Involution ? rt * d : rt;
    const TriMatrix m = matrix_power(sign > 0 ? base + d : base - d, power);
    std::vector<SeqVec> cols;
    for (int j = 0; j < order; ++j) cols.push_back(SeqVec::finite(m.column(j).entries));
    return cols;
}

namespace {

/// R, RD (first kind) or the matrix whose transpose acts for the second kind: R, DR.
TriMatrix acting_matrix(const RiordanPair& r, InvariantKind kind, InvolutionType type, int order) {
    const TriMatrix rm = to_matrix(r, order);
    if (type == InvolutionType::Involution) return rm;
    const TriMatrix d = TriMatrix::alternating_diagonal(order);
    // (DR)^T = R^T D
    return kind == InvariantKind::First ? rm * d : d * rm;
}

std::optional<Witness> check_with(const TriMatrix& a, const SeqVec& v, InvariantKind kind, int sign, int order) {
    if (kind == InvariantKind::First) {
        if (v.size() < order) {
            throw Error(Errc::WindowTooSmall, "vector has " + std::to_string(v.size()) + " entries, need " +
                                                  std::to_string(order));
        }
        const SeqVec head = v.prefix(order);
        return differ(a * head, scaled(head, sign), order);
    }
    const SeqVec lhs = transpose_apply(a, v);
    std::vector<Rational> rhs;
    for (int i = 0; i < order; ++i) rhs.push_back(v.at(i));
    return differ(lhs, scaled(SeqVec(rhs), sign), order);
}

} // namespace

std::optional<Witness> check_invariant(const RiordanPair& r, const SeqVec& v, InvariantKind kind, int sign,
                                       InvolutionType type, int order) {
    return check_with(acting_matrix(r, kind, type, order), v, kind, sign, order);
}

std::optional<Witness> check_invariant_columns(const RiordanPair& r, const std::vector<SeqVec>& cols,
                                               InvariantKind kind, const std::vector<int>& signs,
                                               InvolutionType type, int order) {
    const TriMatrix a = acting_matrix(r, kind, type, order);
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (auto w = check_with(a, cols[j], kind, signs[j % signs.size()], order)) {
            w->location = "column " + std::to_string(j) + " " + w->location;
            return w;
        }
    }
    return std::nullopt;
}

std::vector<InvariantCertificate> certify_columns(const std::string& matrix_id, const RiordanPair& r, int power,
                                                  int sign, InvariantKind kind, InvolutionType type, int order) {
    const auto cols = kind == InvariantKind::First ? build_first_kind(r, power, sign, type, order)
                                                   : build_second_kind(r, power, sign, type, order);
    if (auto w = check_invariant_columns(r, cols, kind, {sign}, type, order)) {
        throw Error(Errc::InvalidArgument, w->location + ": " + w->lhs + " vs " + w->rhs);
    }
    std::vector<InvariantCertificate> out;
    for (const auto& c : cols) out.push_back({matrix_id, c, kind, sign, order});
    return out;
}

RiordanPair shift_by_identity(const RiordanPair& r) {
    if (!r.proper()) throw Error(Errc::NotProper, "shift by I expects a proper pair");
    if (!is_x(r.f())) throw Error(Errc::NotAppellForm, "R + I is not a Riordan matrix unless f = x");
    if (r.g().coeff(0).sign() <= 0) throw Error(Errc::NonpositiveDiagonal, "g(0) = " + r.g().coeff(0).str());
    const int n = r.g().order();
    return RiordanPair(r.g() + Series::one(n), Series::x(n));
}

RiordanPair conjugator(const RiordanPair& r, int power) {
    const Series& f = r.f();
    if (f.order() < 2 || first_mismatch(f, Series::monomial(-1, 1, f.order()), f.order())) {
        throw Error(Errc::NotMinusOneAppell, "expected f = -x");
    }
    if (!is_involution(r, r.window())) throw Error(Errc::NotInvolution, "R^2 differs from I on the window");
    if (r.g().coeff(0).sign() <= 0) throw Error(Errc::NonpositiveDiagonal, "g(0) = " + r.g().coeff(0).str());
    const RiordanPair u = rmul(r, RiordanPair::alternating(f.order()));
    return rpow(shift_by_identity(u), power);
}

std::optional<Witness> verify_conjugation(const RiordanPair& r, const RiordanPair& b, int order) {
    const RiordanPair d = RiordanPair::alternating(b.f().order());
    if (auto w = differ(rmul(rmul(b, d), rinv(b)), r, order)) {
        w->location = "B D B^-1 vs R at " + w->location;
        return w;
    }
    const TriMatrix bm = to_matrix(b, order);
    return differ(to_matrix(r, order) * bm, bm * TriMatrix::alternating_diagonal(order));
}

DenseConjugator pseudo_conjugator(const RiordanPair& r, int power, InvolutionType type, int order) {
    require_type(r, type, order);
    const TriMatrix rm = to_matrix(r, order);
    const TriMatrix d = TriMatrix::alternating_diagonal(order);
    const TriMatrix shifted = type == InvolutionType::Involution ? rm * d : rm;
    for (int i = 0; i < order; ++i) {
        if (shifted(i, i).sign() <= 0) {
            throw Error(Errc::NonpositiveDiagonal,
                        "diagonal entry " + std::to_string(i) + " is " + shifted(i, i).str());
        }
    }
    DenseConjugator c;
    c.b = shifted + TriMatrix::identity(order);
    c.b_power = matrix_power(c.b, power);
    c.target = type == InvolutionType::Involution ? rm : rm * d;
    try {
        const RiordanPair base = type == InvolutionType::Involution ? rmul(r, RiordanPair::alternating(r.f().order())) : r;
        c.pair = rpow(shift_by_identity(base), power);
    } catch (const Error& e) {
        if (e.code() != Errc::NotAppellForm) throw;
    }
    return c;
}

std::optional<Witness> verify_dense_conjugation(const DenseConjugator& c) {
    const int n = c.b_power.size();
    for (int i = 0; i < n; ++i) {
        if (c.b_power(i, i).is_zero()) return Witness{"B^n(" + std::to_string(i) + "," + std::to_string(i) + ")", "0", "nonzero"};
    }
    return differ(c.target * c.b_power, c.b_power * TriMatrix::alternating_diagonal(n));
}

TriMatrix interleaved_conjugator(const RiordanPair& r, int power, int order) {
    const TriMatrix d = TriMatrix::alternating_diagonal(order);
    const TriMatrix u = to_matrix(r, order) * d;
    const TriMatrix x = matrix_power(u + d, power);
    const TriMatrix y = matrix_power(u - d, power);
    TriMatrix m(order, true);
    for (int i = 0; i < order; ++i) {
        for (int j = 0; j <= i; ++j) m(i, j) = j % 2 == 0 ? x(i, j) : y(i, j);
    }
    return m;
}

} // namespace riordan
