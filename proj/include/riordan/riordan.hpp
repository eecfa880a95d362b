#pragma once

/*
 * Riordan and semi-Riordan pairs (g, f).
 *
 * Column j of the infinite matrix has generating function g(x) f(x)^j.
 * Proper pairs (g(0) != 0, f'(0) != 0) form a group under
 *     (g, f)(h, l) = (g * h(f), l(f))
 * with inverse (1 / g(fbar), fbar). Semi pairs drop the nonzero
 * conditions and only require f(0) = 0; they still multiply the same way
 * and add when their second components agree.
 */

#include <optional>
#include <string>

#include "riordan/matrix.hpp"
#include "riordan/series.hpp"

namespace riordan {

enum class PairKind { Proper, Semi };

class RiordanPair {
public:
    /// Validates f(0) = 0, and g(0) != 0, f'(0) != 0 for proper pairs.
    RiordanPair(Series g, Series f, PairKind kind = PairKind::Proper);

    /// Proper when the nonzero conditions hold, semi otherwise.
    static RiordanPair classify(Series g, Series f);

    static RiordanPair identity(int order);
    /// D = (1, -x) = diag(1, -1, 1, ...)
    static RiordanPair alternating(int order);

    const Series& g() const { return g_; }
    const Series& f() const { return f_; }
    PairKind kind() const { return kind_; }
    bool proper() const { return kind_ == PairKind::Proper; }

    /// Largest n for which the first n rows are exact.
    int window() const;

    std::string str(int max_terms = 8) const;

private:
    Series g_;
    Series f_;
    PairKind kind_;
};

/// Component and degree of the first disagreement between two pairs.
struct PairMismatch {
    char component; // 'g' or 'f'
    int degree;
    Rational lhs;
    Rational rhs;
    std::string str() const;
};

/// Compares g and f on degrees [0, n). Throws WindowTooSmall when either window is shorter.
std::optional<PairMismatch> first_mismatch(const RiordanPair& a, const RiordanPair& b, int n);

TriMatrix to_matrix(const RiordanPair& p, int n);

RiordanPair rmul(const RiordanPair& a, const RiordanPair& b);
RiordanPair radd(const RiordanPair& a, const RiordanPair& b);
RiordanPair rinv(const RiordanPair& a);
RiordanPair rpow(const RiordanPair& a, int k);

/// D a D
RiordanPair conj_by_D(const RiordanPair& a);

/// a^2 = (1, x) on degrees [0, n)
bool is_involution(const RiordanPair& a, int n);
/// (a D)^2 = (1, x) on degrees [0, n)
bool is_pseudo_involution(const RiordanPair& a, int n);

/// Coefficients of g(x) V(f(x)), V the generating function of v. A Laurent g is
/// allowed as long as the degree -1 coefficient of the product vanishes.
SeqVec apply(const RiordanPair& p, const SeqVec& v);

/// m^T v for a finitely supported v with support inside the section.
SeqVec transpose_apply(const TriMatrix& m, const SeqVec& v);

} // namespace riordan
