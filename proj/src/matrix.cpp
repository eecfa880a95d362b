#include "riordan/matrix.hpp"

#include <algorithm>

#include "riordan/errors.hpp"

namespace riordan {

SeqVec SeqVec::finite(std::vector<Rational> e) {
    int support = -1;
    for (int i = 0; i < static_cast<int>(e.size()); ++i) {
        if (!e[static_cast<std::size_t>(i)].is_zero()) support = i;
    }
    return SeqVec(std::move(e), support);
}

Rational SeqVec::at(int i) const {
    if (i < size()) return entries[static_cast<std::size_t>(i)];
    if (support_degree && i > *support_degree) return Rational(0);
    throw Error(Errc::UnknownTail, "entry " + std::to_string(i) + " beyond the known prefix of length " +
                                       std::to_string(size()));
}

Series SeqVec::generating_function() const { return Series::from_coeffs(entries, size()); }

SeqVec SeqVec::prefix(int n) const {
    n = std::min(n, size());
    SeqVec out(std::vector<Rational>(entries.begin(), entries.begin() + n));
    if (support_degree && *support_degree < n) out.support_degree = support_degree;
    return out;
}

SeqVec operator-(const SeqVec& v) {
    SeqVec out = v;
    for (auto& e : out.entries) e = -e;
    return out;
}

TriMatrix::TriMatrix(int n, bool lower_triangular)
    : n_(n), lower_(lower_triangular), a_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {}

TriMatrix TriMatrix::identity(int n) {
    TriMatrix m(n, true);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

TriMatrix TriMatrix::alternating_diagonal(int n) {
    TriMatrix m(n, true);
    for (int i = 0; i < n; ++i) m(i, i) = (i % 2 == 0) ? 1 : -1;
    return m;
}

TriMatrix TriMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    const int n = static_cast<int>(rows.size());
    TriMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < static_cast<int>(rows[static_cast<std::size_t>(i)].size()) && j < n; ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    m.refresh_shape();
    return m;
}

SeqVec TriMatrix::column(int j) const {
    std::vector<Rational> c(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return SeqVec(std::move(c));
}

std::vector<Rational> TriMatrix::row(int i) const {
    return {a_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)),
            a_.begin() + static_cast<std::ptrdiff_t>(index(i, 0)) + n_};
}

TriMatrix TriMatrix::transpose() const {
    TriMatrix t(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    t.refresh_shape();
    return t;
}

TriMatrix TriMatrix::leading(int m) const {
    m = std::min(m, n_);
    TriMatrix out(m, lower_);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) out(i, j) = (*this)(i, j);
    return out;
}

void TriMatrix::refresh_shape() {
    lower_ = true;
    for (int i = 0; i < n_ && lower_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!(*this)(i, j).is_zero()) {
                lower_ = false;
                break;
            }
}

TriMatrix operator+(const TriMatrix& a, const TriMatrix& b) {
    if (a.n_ != b.n_) throw Error(Errc::DimensionMismatch, "matrix sum of different sizes");
    TriMatrix out(a.n_, a.lower_ && b.lower_);
    for (std::size_t k = 0; k < a.a_.size(); ++k) out.a_[k] = a.a_[k] + b.a_[k];
    return out;
}

TriMatrix operator-(const TriMatrix& a, const TriMatrix& b) { return a + (Rational(-1) * b); }

TriMatrix operator*(const Rational& c, const TriMatrix& a) {
    TriMatrix out = a;
    for (auto& v : out.a_) v *= c;
    return out;
}

TriMatrix operator*(const TriMatrix& a, const TriMatrix& b) {
    if (a.n_ != b.n_) throw Error(Errc::DimensionMismatch, "matrix product of different sizes");
    const int n = a.n_;
    const bool lower = a.lower_ && b.lower_;
    TriMatrix out(n, lower);
    mpq_class tmp;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int k_lo = b.lower_ ? j : 0;
            const int k_hi = a.lower_ ? i : n - 1;
            mpq_class& acc = out(i, j).raw();
            for (int k = k_lo; k <= k_hi; ++k) {
                const mpq_class& x = a(i, k).raw();
                if (sgn(x) == 0) continue;
                mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), b(k, j).raw().get_mpq_t());
                mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
            }
        }
    }
    return out;
}

SeqVec TriMatrix::operator*(const SeqVec& v) const {
    std::vector<Rational> out(static_cast<std::size_t>(n_));
    mpq_class tmp;
    for (int i = 0; i < n_; ++i) {
        mpq_class& acc = out[static_cast<std::size_t>(i)].raw();
        const int hi = lower_ ? i : n_ - 1;
        for (int k = 0; k <= hi; ++k) {
            const mpq_class& x = (*this)(i, k).raw();
            if (sgn(x) == 0) continue;
            mpq_mul(tmp.get_mpq_t(), x.get_mpq_t(), v.at(k).raw().get_mpq_t());
            mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), tmp.get_mpq_t());
        }
    }
    return SeqVec(std::move(out));
}

TriMatrix matrix_power(const TriMatrix& m, int k) {
    if (k < 0) throw Error(Errc::InvalidArgument, "negative matrix power");
    TriMatrix result = TriMatrix::identity(m.size());
    TriMatrix base = m;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

std::optional<EntryMismatch> first_mismatch(const TriMatrix& a, const TriMatrix& b) {
    if (a.size() != b.size()) throw Error(Errc::DimensionMismatch, "comparing matrices of different sizes");
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j)
            if (a(i, j) != b(i, j)) return EntryMismatch{i, j, a(i, j), b(i, j)};
    return std::nullopt;
}

std::optional<IndexMismatch> first_mismatch(const SeqVec& a, const SeqVec& b, int upto) {
    for (int i = 0; i < upto; ++i) {
        Rational x = a.at(i), y = b.at(i);
        if (x != y) return IndexMismatch{i, std::move(x), std::move(y)};
    }
    return std::nullopt;
}

namespace {

// Integer matrix with one row per input row, each scaled by the lcm of its denominators.
std::vector<std::vector<mpz_class>> clear_denominators(const std::vector<std::vector<Rational>>& rows) {
    std::vector<std::vector<mpz_class>> out;
    out.reserve(rows.size());
    for (const auto& r : rows) {
        mpz_class l = 1;
        for (const auto& v : r) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
        std::vector<mpz_class> ir;
        ir.reserve(r.size());
        for (const auto& v : r) ir.push_back(v.numerator() * (l / v.denominator()));
        out.push_back(std::move(ir));
    }
    return out;
}

// In-place fraction-free row echelon form; returns pivot columns.
std::vector<int> bareiss_echelon(std::vector<std::vector<mpz_class>>& a) {
    const int rows = static_cast<int>(a.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
    std::vector<int> pivots;
    mpz_class prev = 1;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = r;
        while (p < rows && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[static_cast<std::size_t>(p)], a[static_cast<std::size_t>(r)]);
        const auto& prow = a[static_cast<std::size_t>(r)];
        const mpz_class pivot = prow[static_cast<std::size_t>(c)];
        for (int i = r + 1; i < rows; ++i) {
            auto& row = a[static_cast<std::size_t>(i)];
            const mpz_class lead = row[static_cast<std::size_t>(c)];
            for (int j = c + 1; j < cols; ++j) {
                mpz_class v = pivot * row[static_cast<std::size_t>(j)] - lead * prow[static_cast<std::size_t>(j)];
                mpz_divexact(row[static_cast<std::size_t>(j)].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
            row[static_cast<std::size_t>(c)] = 0;
        }
        prev = pivot;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace

std::vector<SeqVec> nullspace(const TriMatrix& m, const Rational& shift) {
    const int n = m.size();
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i < n; ++i) {
        auto r = m.row(i);
        r[static_cast<std::size_t>(i)] -= shift;
        rows.push_back(std::move(r));
    }
    auto a = clear_denominators(rows);
    const auto pivots = bareiss_echelon(a);

    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;

    std::vector<SeqVec> basis;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[static_cast<std::size_t>(free)]) continue;
        std::vector<Rational> x(static_cast<std::size_t>(n));
        x[static_cast<std::size_t>(free)] = 1;
        for (int k = static_cast<int>(pivots.size()) - 1; k >= 0; --k) {
            const int pc = pivots[static_cast<std::size_t>(k)];
            const auto& row = a[static_cast<std::size_t>(k)];
            Rational s;
            for (int j = pc + 1; j < n; ++j) {
                if (row[static_cast<std::size_t>(j)] != 0) s += Rational(row[static_cast<std::size_t>(j)]) * x[static_cast<std::size_t>(j)];
            }
            x[static_cast<std::size_t>(pc)] = -s / Rational(row[static_cast<std::size_t>(pc)]);
        }
        // primitive integer representative
        mpz_class l = 1, g = 0;
        for (const auto& v : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.denominator().get_mpz_t());
        for (auto& v : x) {
            v *= Rational(l);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.numerator().get_mpz_t());
        }
        for (auto& v : x) v /= Rational(g);
        basis.push_back(SeqVec(std::move(x)));
    }
    return basis;
}

int rank(const std::vector<SeqVec>& vectors) {
    std::vector<std::vector<Rational>> rows;
    for (const auto& v : vectors) rows.push_back(v.entries);
    auto a = clear_denominators(rows);
    return static_cast<int>(bareiss_echelon(a).size());
}

} // namespace riordan
