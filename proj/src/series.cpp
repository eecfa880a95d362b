#include "riordan/series.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace riordan {

namespace {

// acc += a * b without materializing a temporary Rational
inline void fma_into(mpq_class& acc, const mpq_class& a, const mpq_class& b, mpq_class& tmp) {
    mpq_mul(tmp.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
}

int clamp_order(long v) {
    if (v > std::numeric_limits<int>::max() / 2) return std::numeric_limits<int>::max() / 2;
    return static_cast<int>(v);
}

} // namespace

Series::Series(int order) : valuation_(order), order_(order) {}

Series::Series(std::vector<Rational> coeffs, int valuation)
    : valuation_(valuation),
      order_(valuation + static_cast<int>(coeffs.size())),
      coeffs_(std::move(coeffs)) {
    normalize();
}

Series::Series(int valuation, int order, std::vector<Rational> coeffs)
    : valuation_(valuation), order_(order), coeffs_(std::move(coeffs)) {
    normalize();
}

Series Series::from_coeffs(std::vector<Rational> coeffs, int order, int valuation) {
    if (order < valuation) {
        throw Error(Errc::InvalidArgument, "order below valuation");
    }
    coeffs.resize(static_cast<std::size_t>(order - valuation));
    return Series(valuation, order, std::move(coeffs));
}

Series Series::constant(const Rational& c, int order) {
    if (order <= 0) return Series(order);
    return from_coeffs({c}, order);
}

Series Series::monomial(const Rational& c, int degree, int order) {
    if (degree >= order) return Series(order);
    std::vector<Rational> v(static_cast<std::size_t>(order - degree));
    v[0] = c;
    return Series(degree, order, std::move(v));
}

void Series::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        valuation_ = order_;
        return;
    }
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
        valuation_ += static_cast<int>(lead);
    }
    if (valuation_ < -1) {
        throw Error(Errc::DoublePole, "principal part longer than one term (valuation " +
                                          std::to_string(valuation_) + ")");
    }
}

Rational Series::coeff(int k) const {
    if (k >= order_) {
        throw Error(Errc::OutOfWindow, "coefficient " + std::to_string(k) +
                                           " outside window [.., " + std::to_string(order_) + ")");
    }
    if (k < valuation_) return Rational(0);
    return coeffs_[static_cast<std::size_t>(k - valuation_)];
}

std::vector<Rational> Series::coefficients(int from) const {
    std::vector<Rational> out;
    for (int k = from; k < order_; ++k) out.push_back(coeff(k));
    return out;
}

Series Series::truncate(int order) const {
    if (order >= order_) return *this;
    if (order <= valuation_) return Series(order);
    std::vector<Rational> c(coeffs_.begin(), coeffs_.begin() + (order - valuation_));
    return Series(valuation_, order, std::move(c));
}

Series Series::operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

Series& Series::operator*=(const Rational& c) {
    if (c.is_zero()) {
        coeffs_.clear();
        valuation_ = order_;
        return *this;
    }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

Series operator+(const Series& a, const Series& b) {
    const int order = std::min(a.order_, b.order_);
    const int lo = std::min(a.valuation_, b.valuation_);
    if (lo >= order) return Series(order);
    std::vector<Rational> c(static_cast<std::size_t>(order - lo));
    for (int d = lo; d < order; ++d) {
        c[static_cast<std::size_t>(d - lo)] = a.coeff(d) + b.coeff(d);
    }
    return Series(lo, order, std::move(c));
}

Series operator-(const Series& a, const Series& b) { return a + (-b); }

Series mul_truncated(const Series& a, const Series& b, int order) {
    const int val = a.valuation_ + b.valuation_;
    const int natural = std::min(a.order_ + b.valuation_, b.order_ + a.valuation_);
    const int n = std::min(order, natural);
    if (a.is_zero() || b.is_zero()) return Series(n);
    if (val < -1) {
        throw Error(Errc::DoublePole, "product valuation " + std::to_string(val));
    }
    if (n <= val) return Series(n);
    const int len = n - val;
    const int la = static_cast<int>(a.coeffs_.size());
    const int lb = static_cast<int>(b.coeffs_.size());
    std::vector<Rational> c(static_cast<std::size_t>(len));
    mpq_class tmp;
    for (int k = 0; k < len; ++k) {
        mpq_class& acc = c[static_cast<std::size_t>(k)].raw();
        const int i_lo = std::max(0, k - lb + 1);
        const int i_hi = std::min(k, la - 1);
        for (int i = i_lo; i <= i_hi; ++i) {
            fma_into(acc, a.coeffs_[static_cast<std::size_t>(i)].raw(),
                     b.coeffs_[static_cast<std::size_t>(k - i)].raw(), tmp);
        }
    }
    return Series(val, n, std::move(c));
}

Series operator*(const Series& a, const Series& b) {
    return mul_truncated(a, b, std::numeric_limits<int>::max());
}

Series operator/(const Series& a, const Series& b) {
    if (b.is_zero()) {
        throw Error(Errc::InexactWindow, "divisor vanishes on its whole window [0, " +
                                             std::to_string(b.order()) + ")");
    }
    const int val = a.valuation() - b.valuation();
    if (a.is_zero()) return Series(a.order() - b.valuation());
    if (val < -1) {
        throw Error(Errc::DoublePole, "quotient valuation " + std::to_string(val));
    }
    const int rel = std::min(a.order() - a.valuation(), b.order() - b.valuation());
    const auto bc = b.coefficients(b.valuation());
    const auto ac = a.coefficients(a.valuation());
    const mpq_class& b0 = bc[0].raw();
    std::vector<Rational> q(static_cast<std::size_t>(rel));
    mpq_class acc, tmp;
    for (int k = 0; k < rel; ++k) {
        acc = ac[static_cast<std::size_t>(k)].raw();
        const int i_hi = std::min(k, static_cast<int>(bc.size()) - 1);
        for (int i = 1; i <= i_hi; ++i) {
            mpq_mul(tmp.get_mpq_t(), bc[static_cast<std::size_t>(i)].raw().get_mpq_t(),
                    q[static_cast<std::size_t>(k - i)].raw().get_mpq_t());
            mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
        }
        mpq_div(q[static_cast<std::size_t>(k)].raw().get_mpq_t(), acc.get_mpq_t(), b0.get_mpq_t());
    }
    return Series(std::move(q), val);
}

Series add(const Series& a, const Series& b) { return a + b; }
Series mul(const Series& a, const Series& b) { return a * b; }
Series div(const Series& a, const Series& b) { return a / b; }

Series pow(const Series& a, int n) {
    if (n < 0) return pow(Series::one(a.order() - a.valuation()) / a, -n);
    Series result = Series::one(a.order());
    Series base = a;
    while (n > 0) {
        if (n & 1) result = result * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return result;
}

Series compose(const Series& outer, const Series& inner) {
    if (inner.order() < 1) {
        throw Error(Errc::InexactWindow, "inner series has an empty window");
    }
    const int vi = inner.valuation();
    if (vi < 1) {
        throw Error(Errc::NonformalComposition, "inner series has nonzero constant term");
    }
    const int vo = outer.valuation();
    if (vo == -1 && vi != 1) {
        throw Error(Errc::NonformalComposition,
                    "simple pole composed with a series of valuation " + std::to_string(vi));
    }
    int n = std::min(clamp_order(static_cast<long>(outer.order()) * vi), inner.order());
    if (vo == -1) n = std::min(n, inner.order() - 2);

    // result coefficients for degrees -1 .. n-1 (index shift by one)
    std::vector<Rational> acc(static_cast<std::size_t>(std::max(n + 1, 0)));
    mpq_class tmp;
    auto accumulate = [&](const Rational& c, const Series& s) {
        for (int d = std::max(s.valuation(), -1); d < n && d < s.order(); ++d) {
            fma_into(acc[static_cast<std::size_t>(d + 1)].raw(), c.raw(), s.coeff(d).raw(), tmp);
        }
    };

    if (vo == -1 && !outer.is_zero()) {
        accumulate(outer.coeff(-1), Series::one(inner.order()) / inner);
    }
    Series power = Series::one(n);
    for (int k = 0; k < outer.order() && static_cast<long>(k) * vi < n; ++k) {
        if (k > 0) power = mul_truncated(power, inner, n);
        const Rational ok = outer.coeff(k);
        if (!ok.is_zero()) accumulate(ok, power);
    }
    if (n < -1) return Series(n);
    return Series(std::move(acc), -1).truncate(n);
}

Series comp_inverse(const Series& f) {
    if (f.valuation() != 1) {
        throw Error(Errc::NotInvertible, "compositional inverse needs [x^0]f = 0 and [x^1]f != 0");
    }
    const int n = f.order();
    const auto fc = f.coefficients(0);
    const mpq_class& f1 = fc[1].raw();

    // powers[k][m] = [x^m] g^k, filled one degree at a time
    std::vector<std::vector<mpq_class>> powers(static_cast<std::size_t>(n),
                                               std::vector<mpq_class>(static_cast<std::size_t>(n)));
    std::vector<Rational> g(static_cast<std::size_t>(n));
    mpq_class s, tmp;
    for (int m = 1; m < n; ++m) {
        s = 0;
        for (int k = 2; k <= m; ++k) {
            mpq_class& pk = powers[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
            pk = 0;
            for (int i = 1; i <= m - k + 1; ++i) {
                fma_into(pk, g[static_cast<std::size_t>(i)].raw(),
                         powers[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(m - i)], tmp);
            }
            fma_into(s, fc[static_cast<std::size_t>(k)].raw(), pk, tmp);
        }
        mpq_class rhs = (m == 1 ? mpq_class(1) : mpq_class(0)) - s;
        mpq_class gm = rhs / f1;
        g[static_cast<std::size_t>(m)] = Rational(gm);
        powers[1][static_cast<std::size_t>(m)] = gm;
    }
    return Series(std::move(g), 0);
}

Series sqrt(const Series& a) {
    if (a.is_zero() || a.valuation() != 0) {
        throw Error(Errc::NonSquareConstantTerm, "square root needs valuation 0");
    }
    Rational s0;
    if (!rational_sqrt(a.coeff(0), s0)) {
        throw Error(Errc::NonSquareConstantTerm,
                    "constant term " + a.coeff(0).str() + " is not a rational square");
    }
    const int n = a.order();
    std::vector<Rational> s(static_cast<std::size_t>(n));
    s[0] = s0;
    const mpq_class two_s0 = 2 * s0.raw();
    mpq_class acc, tmp;
    for (int k = 1; k < n; ++k) {
        acc = a.coeff(k).raw();
        for (int i = 1; i < k; ++i) {
            mpq_mul(tmp.get_mpq_t(), s[static_cast<std::size_t>(i)].raw().get_mpq_t(),
                    s[static_cast<std::size_t>(k - i)].raw().get_mpq_t());
            mpq_sub(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
        }
        mpq_div(s[static_cast<std::size_t>(k)].raw().get_mpq_t(), acc.get_mpq_t(), two_s0.get_mpq_t());
    }
    return Series(std::move(s), 0);
}

std::optional<Mismatch> first_mismatch(const Series& a, const Series& b, int upto, int from) {
    if (a.order() < upto || b.order() < upto) {
        throw Error(Errc::WindowTooSmall, "comparison up to degree " + std::to_string(upto) +
                                              " but windows end at " + std::to_string(a.order()) +
                                              " and " + std::to_string(b.order()));
    }
    for (int d = from; d < upto; ++d) {
        Rational x = a.coeff(d), y = b.coeff(d);
        if (x != y) return Mismatch{d, std::move(x), std::move(y)};
    }
    return std::nullopt;
}

std::string Series::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (int k = 0; k < static_cast<int>(coeffs_.size()) && shown < max_terms; ++k) {
        const Rational& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) continue;
        const int d = valuation_ + k;
        if (shown > 0) os << (c.sign() < 0 ? " - " : " + ");
        else if (c.sign() < 0) os << "-";
        const Rational mag = c.sign() < 0 ? -c : c;
        const bool unit = mag == Rational(1);
        if (d == 0 || !unit) os << mag.str();
        if (d != 0) {
            if (!unit) os << "*";
            os << "x";
            if (d != 1) os << "^" << d;
        }
        ++shown;
    }
    if (shown == 0) os << "0";
    os << " + O(x^" << order_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.str(); }

} // namespace riordan
