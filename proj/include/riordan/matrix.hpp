#pragma once

#include <optional>
#include <string>
#include <vector>

#include "riordan/rational.hpp"
#include "riordan/series.hpp"

namespace riordan {

/// Finite prefix of a sequence in R^inf.
///
/// When support_degree is set the whole infinite vector is known: entries past
/// support_degree are zero. Otherwise entries at index >= size() are unknown.
struct SeqVec {
    std::vector<Rational> entries;
    std::optional<int> support_degree;

    SeqVec() = default;
    explicit SeqVec(std::vector<Rational> e, std::optional<int> support = std::nullopt)
        : entries(std::move(e)), support_degree(support) {}

    /// Finitely supported vector; support degree is derived from the entries.
    static SeqVec finite(std::vector<Rational> e);

    int size() const { return static_cast<int>(entries.size()); }
    const Rational& operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
    Rational& operator[](int i) { return entries[static_cast<std::size_t>(i)]; }

    /// Entry i, or zero past the support; throws UnknownTail past a non-finite prefix.
    Rational at(int i) const;

    /// Generating function truncated to the known window.
    Series generating_function() const;

    SeqVec prefix(int n) const;

    friend bool operator==(const SeqVec& a, const SeqVec& b) { return a.entries == b.entries; }
};

SeqVec operator-(const SeqVec& v);

/// Dense n x n exact matrix. Used for finite sections of infinite matrices.
class TriMatrix {
public:
    TriMatrix() = default;
    explicit TriMatrix(int n, bool lower_triangular = false);

    static TriMatrix identity(int n);
    /// diag(1, -1, 1, ...)
    static TriMatrix alternating_diagonal(int n);
    static TriMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

    int size() const { return n_; }
    bool lower_triangular() const { return lower_; }

    const Rational& operator()(int i, int j) const { return a_[index(i, j)]; }
    Rational& operator()(int i, int j) { return a_[index(i, j)]; }

    SeqVec column(int j) const;
    std::vector<Rational> row(int i) const;

    TriMatrix transpose() const;
    TriMatrix leading(int m) const;

    /// Recomputes the lower-triangular flag from the entries.
    void refresh_shape();

    friend TriMatrix operator+(const TriMatrix& a, const TriMatrix& b);
    friend TriMatrix operator-(const TriMatrix& a, const TriMatrix& b);
    friend TriMatrix operator*(const TriMatrix& a, const TriMatrix& b);
    friend TriMatrix operator*(const Rational& c, const TriMatrix& a);
    friend bool operator==(const TriMatrix& a, const TriMatrix& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

    /// m * v on indices < n; v must cover n entries.
    SeqVec operator*(const SeqVec& v) const;

private:
    std::size_t index(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
    }

    int n_ = 0;
    bool lower_ = false;
    std::vector<Rational> a_;
};

TriMatrix matrix_power(const TriMatrix& m, int k);

struct EntryMismatch {
    int row;
    int col;
    Rational lhs;
    Rational rhs;
};
std::optional<EntryMismatch> first_mismatch(const TriMatrix& a, const TriMatrix& b);

struct IndexMismatch {
    int index;
    Rational lhs;
    Rational rhs;
};
/// First index < upto where the vectors differ.
std::optional<IndexMismatch> first_mismatch(const SeqVec& a, const SeqVec& b, int upto);

/// Exact basis of ker(m - shift*I) by fraction-free (Bareiss) elimination.
std::vector<SeqVec> nullspace(const TriMatrix& m, const Rational& shift);

/// Rank of a list of vectors (all of the same length), by fraction-free elimination.
int rank(const std::vector<SeqVec>& vectors);

} // namespace riordan
