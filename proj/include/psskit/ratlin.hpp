#pragma once

// Exact rational linear algebra and linear-feasibility decisions.
//
// Every predicate in the library bottoms out in one of three questions:
// the rank of a rational matrix, a basis of its kernel, and whether a system
// A a = b has a nonnegative solution. All three are answered exactly here.

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "psskit/error.hpp"

namespace psskit {

/// Arbitrary-precision rational kept in lowest terms with a positive denominator.
using Rat = mpq_class;

/// Parses "p/q", "p" or "-p/q" (surrounding whitespace allowed). Throws Error on
/// malformed text or a zero denominator.
Rat parse_rat(const std::string& text);

/// Canonical text form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);

class QVec {
public:
    QVec() = default;
    explicit QVec(std::size_t dim) : entries_(dim, Rat(0)) {}
    explicit QVec(std::vector<Rat> entries) : entries_(std::move(entries)) {}
    QVec(std::initializer_list<Rat> entries) : entries_(entries) {}

    static QVec unit(std::size_t dim, std::size_t axis);

    std::size_t dim() const noexcept { return entries_.size(); }
    const Rat& operator[](std::size_t i) const { return entries_[i]; }
    Rat& operator[](std::size_t i) { return entries_[i]; }
    const std::vector<Rat>& entries() const noexcept { return entries_; }

    bool is_zero() const;

    QVec operator-() const;
    QVec& operator+=(const QVec& o);
    QVec& operator-=(const QVec& o);
    QVec& operator*=(const Rat& s);

    friend QVec operator+(QVec a, const QVec& b) { return a += b; }
    friend QVec operator-(QVec a, const QVec& b) { return a -= b; }
    friend QVec operator*(QVec a, const Rat& s) { return a *= s; }
    friend QVec operator*(const Rat& s, QVec a) { return a *= s; }

    friend bool operator==(const QVec& a, const QVec& b) { return a.entries_ == b.entries_; }
    /// Lexicographic; only used for canonical ordering.
    friend bool operator<(const QVec& a, const QVec& b) { return a.entries_ < b.entries_; }

private:
    std::vector<Rat> entries_;
};

Rat dot(const QVec& a, const QVec& b);
std::string to_string(const QVec& v);

/// Dense row-major rational matrix.
class QMat {
public:
    QMat() = default;
    QMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

    /// Matrix whose j-th column is `columns[j]`; all columns must share `dim`.
    static QMat from_columns(std::span<const QVec> columns, std::size_t dim);
    static QMat identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

    QVec column(std::size_t c) const;
    QVec operator*(const QVec& v) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Reduced row echelon form; returns the pivot column of every nonzero row.
std::vector<std::size_t> rref_in_place(QMat& m);

std::size_t rank(const QMat& m);

/// Basis of {v : M v = 0}, one vector per free column in ascending order, each
/// scaled so that its first nonzero entry is 1. Empty iff the kernel is trivial.
std::vector<QVec> kernel_basis(const QMat& m);

/// Some solution of M v = b, or nullopt when the system is inconsistent.
std::optional<QVec> solve_linear(const QMat& m, const QVec& b);

struct FeasWitness {
    enum class Kind { Coefficients, Separator, Infeasible };

    Kind kind = Kind::Infeasible;
    /// Present iff kind == Coefficients; one entry per column, all >= 0.
    std::optional<std::vector<Rat>> coeffs;
    /// Present iff kind == Separator.
    std::optional<QVec> separator;

    bool feasible() const noexcept { return kind != Kind::Infeasible; }

    static FeasWitness infeasible() { return {}; }
    static FeasWitness with_coeffs(std::vector<Rat> a) { return {Kind::Coefficients, std::move(a), std::nullopt}; }
    static FeasWitness with_separator(QVec z) { return {Kind::Separator, std::nullopt, std::move(z)}; }
};

/// Decides whether A a = b has a solution with a >= 0.
///
/// Exact phase-I simplex with Bland's rule (lowest-index entering column,
/// lowest-index leaving basic variable on ratio ties), so the result is a
/// deterministic function of (A, b). On success the coefficients have been
/// re-multiplied against A and checked to reproduce b exactly.
///
/// Throws DimensionError if b.dim() != A.rows().
FeasWitness solve_nonneg(const QMat& a, const QVec& b);

/// Finds z with z . x >= 1 for every x in `xs`, or reports Infeasible.
///
/// Strict separation z . x > 0 is equivalent to this closed system because the
/// constraint set is a cone. `dim` is needed for the empty family. Throws
/// ZeroVectorError if some x is zero and DimensionError on mixed dimensions.
FeasWitness strict_separator(std::span<const QVec> xs, std::size_t dim);

}  // namespace psskit
