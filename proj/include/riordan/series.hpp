#pragma once

/*
 * Truncated formal Laurent/power series over the rationals.
 *
 * A Series knows its coefficients exactly for degrees valuation .. order-1.
 * Degrees >= order are unknown (not zero). Valuation is the lowest degree
 * with a nonzero coefficient; a series that vanishes on its whole window
 * has valuation == order and no stored coefficients. Principal parts are
 * limited to a single x^-1 term.
 *
 * Every operation propagates the window on which its result is provably
 * exact, so identity checks never compare unknown coefficients.
 */

#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "riordan/errors.hpp"
#include "riordan/rational.hpp"

namespace riordan {

class Series {
public:
    /// Zero on [0, order).
    explicit Series(int order = 0);

    /// Coefficients of degrees valuation, valuation+1, ... ; order = valuation + coeffs.size().
    Series(std::vector<Rational> coeffs, int valuation = 0);

    /// Coefficients as above, explicitly padded with zeros up to `order`.
    static Series from_coeffs(std::vector<Rational> coeffs, int order, int valuation = 0);
    static Series constant(const Rational& c, int order);
    static Series monomial(const Rational& c, int degree, int order);
    static Series x(int order) { return monomial(1, 1, order); }
    static Series one(int order) { return constant(1, order); }

    int valuation() const { return valuation_; }
    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Exact coefficient of x^k. Throws OutOfWindow unless k < order.
    /// Degrees below the valuation are known zeros.
    Rational coeff(int k) const;

    /// Coefficients of degrees from .. order-1.
    std::vector<Rational> coefficients(int from = 0) const;

    Series truncate(int order) const;

    Series operator-() const;
    Series& operator*=(const Rational& c);

    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator/(const Series& a, const Series& b);
    friend Series operator*(Series a, const Rational& c) { return a *= c; }
    friend Series operator*(const Rational& c, Series a) { return a *= c; }

    std::string str(int max_terms = 12) const;
    friend std::ostream& operator<<(std::ostream& os, const Series& s);

private:
    Series(int valuation, int order, std::vector<Rational> coeffs);
    void normalize();

    // coeffs_[k] is the coefficient of x^(valuation_ + k)
    int valuation_ = 0;
    int order_ = 0;
    std::vector<Rational> coeffs_;

    friend Series mul_truncated(const Series& a, const Series& b, int order);
};

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series div(const Series& a, const Series& b);

/// Product limited to degrees < order (result order = min(order, natural order)).
Series mul_truncated(const Series& a, const Series& b, int order);

/// a^n for n >= 0; negative n inverts first.
Series pow(const Series& a, int n);

/// outer(inner). Requires inner.valuation() >= 1; a simple pole in outer
/// additionally requires inner.valuation() == 1.
Series compose(const Series& outer, const Series& inner);

/// Compositional inverse by degree-by-degree triangular back-substitution.
Series comp_inverse(const Series& f);

/// Square root with positive constant term; constant term must be a rational square.
Series sqrt(const Series& a);

inline Rational coeff(const Series& a, int k) { return a.coeff(k); }

/// First degree in [from, upto) at which a and b differ; both windows must cover it.
struct Mismatch {
    int degree;
    Rational lhs;
    Rational rhs;
};
std::optional<Mismatch> first_mismatch(const Series& a, const Series& b, int upto, int from = 0);

/// Common window of a and b (min order).
inline int common_order(const Series& a, const Series& b) {
    return a.order() < b.order() ? a.order() : b.order();
}

} // namespace riordan
