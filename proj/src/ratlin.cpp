#include "psskit/ratlin.hpp"

#include <algorithm>
#include <cctype>

namespace psskit {

namespace {

bool is_integer_literal(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

bool is_natural_literal(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Rat parse_rat(const std::string& text) {
    const std::string s = trim(text);
    const auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_integer_literal(num) || !is_natural_literal(den))
        throw Error("malformed rational '" + text + "'");
    if (num[0] == '+') num.erase(0, 1);
    mpz_class d(den, 10);
    if (d == 0) throw Error("zero denominator in '" + text + "'");
    Rat r(mpz_class(num, 10), d);
    r.canonicalize();
    return r;
}

std::string to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

QVec QVec::unit(std::size_t dim, std::size_t axis) {
    QVec v(dim);
    v[axis] = 1;
    return v;
}

bool QVec::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rat& r) { return sgn(r) == 0; });
}

QVec QVec::operator-() const {
    QVec r(*this);
    for (auto& e : r.entries_) e = -e;
    return r;
}

QVec& QVec::operator+=(const QVec& o) {
    if (o.dim() != dim()) throw DimensionError("vector dimensions differ");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] += o.entries_[i];
    return *this;
}

QVec& QVec::operator-=(const QVec& o) {
    if (o.dim() != dim()) throw DimensionError("vector dimensions differ");
    for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= o.entries_[i];
    return *this;
}

QVec& QVec::operator*=(const Rat& s) {
    for (auto& e : entries_) e *= s;
    return *this;
}

Rat dot(const QVec& a, const QVec& b) {
    if (a.dim() != b.dim()) throw DimensionError("vector dimensions differ");
    Rat s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

std::string to_string(const QVec& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.dim(); ++i) {
        if (i) s += ", ";
        s += to_string(v[i]);
    }
    return s + ")";
}

QMat QMat::from_columns(std::span<const QVec> columns, std::size_t dim) {
    QMat m(dim, columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].dim() != dim) throw DimensionError("column " + std::to_string(c) + " has wrong dimension");
        for (std::size_t r = 0; r < dim; ++r) m(r, c) = columns[c][r];
    }
    return m;
}

QMat QMat::identity(std::size_t n) {
    QMat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

QVec QMat::column(std::size_t c) const {
    QVec v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

QVec QMat::operator*(const QVec& v) const {
    if (v.dim() != cols_) throw DimensionError("matrix-vector dimensions differ");
    QVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
    return out;
}

std::vector<std::size_t> rref_in_place(QMat& m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
        const Rat inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            const Rat f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0) m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t rank(const QMat& m) {
    QMat w = m;
    return rref_in_place(w).size();
}

std::vector<QVec> kernel_basis(const QMat& m) {
    QMat r = m;
    const auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<QVec> basis;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        QVec v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, f);
        for (std::size_t i = 0; i < v.dim(); ++i) {
            if (sgn(v[i]) != 0) {
                v *= 1 / Rat(v[i]);
                break;
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QVec> solve_linear(const QMat& m, const QVec& b) {
    if (b.dim() != m.rows()) throw DimensionError("right-hand side has wrong dimension");
    QMat aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    const auto pivots = rref_in_place(aug);
    if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
    QVec x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, m.cols());
    return x;
}

FeasWitness solve_nonneg(const QMat& a, const QVec& b) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    if (b.dim() != m) throw DimensionError("right-hand side has wrong dimension");

    // Tableau columns: n originals, m artificials, rhs. Row m is the phase-I
    // objective (reduced costs of minimizing the sum of artificials).
    const std::size_t width = n + m + 1;
    const std::size_t rhs = n + m;
    QMat t(m + 1, width);
    std::vector<std::size_t> basic(m);
    for (std::size_t r = 0; r < m; ++r) {
        const bool flip = sgn(b[r]) < 0;
        for (std::size_t c = 0; c < n; ++c) t(r, c) = flip ? Rat(-a(r, c)) : a(r, c);
        t(r, n + r) = 1;
        t(r, rhs) = flip ? Rat(-b[r]) : b[r];
        basic[r] = n + r;
        for (std::size_t c = 0; c < n; ++c) t(m, c) -= t(r, c);
        t(m, rhs) -= t(r, rhs);
    }

    for (;;) {
        std::size_t enter = n;
        for (std::size_t c = 0; c < n; ++c) {
            if (sgn(t(m, c)) < 0) {
                enter = c;
                break;
            }
        }
        if (enter == n) break;

        std::size_t leave = m;
        Rat best;
        for (std::size_t r = 0; r < m; ++r) {
            if (sgn(t(r, enter)) <= 0) continue;
            Rat ratio = t(r, rhs) / t(r, enter);
            if (leave == m || ratio < best || (ratio == best && basic[r] < basic[leave])) {
                leave = r;
                best = ratio;
            }
        }
        // The phase-I objective is bounded below by zero, so a ratio row always exists.
        if (leave == m) throw CertificateError("phase-I simplex reported an unbounded ray");

        const Rat inv = 1 / t(leave, enter);
        for (std::size_t c = 0; c < width; ++c) t(leave, c) *= inv;
        for (std::size_t r = 0; r <= m; ++r) {
            if (r == leave || sgn(t(r, enter)) == 0) continue;
            const Rat f = t(r, enter);
            for (std::size_t c = 0; c < width; ++c)
                if (sgn(t(leave, c)) != 0) t(r, c) -= f * t(leave, c);
        }
        basic[leave] = enter;
    }

    if (sgn(t(m, rhs)) != 0) return FeasWitness::infeasible();

    std::vector<Rat> x(n, Rat(0));
    for (std::size_t r = 0; r < m; ++r)
        if (basic[r] < n) x[basic[r]] = t(r, rhs);

    if (!(a * QVec(x) == b)) throw CertificateError("nonnegative solution failed re-multiplication");
    return FeasWitness::with_coeffs(std::move(x));
}

FeasWitness strict_separator(std::span<const QVec> xs, std::size_t dim) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (xs[i].dim() != dim) throw DimensionError("vector " + std::to_string(i) + " has wrong dimension");
        if (xs[i].is_zero()) throw ZeroVectorError("vector " + std::to_string(i) + " is zero", i);
    }
    const std::size_t k = xs.size();
    if (k == 0) return FeasWitness::with_separator(QVec(dim));

    // z = u - v with u, v >= 0 and slack s >= 0:  x_i . (u - v) - s_i = 1.
    QMat a(k, 2 * dim + k);
    QVec b(k);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            a(i, j) = xs[i][j];
            a(i, dim + j) = -xs[i][j];
        }
        a(i, 2 * dim + i) = -1;
        b[i] = 1;
    }
    const FeasWitness w = solve_nonneg(a, b);
    if (!w.feasible()) return FeasWitness::infeasible();

    QVec z(dim);
    for (std::size_t j = 0; j < dim; ++j) z[j] = (*w.coeffs)[j] - (*w.coeffs)[dim + j];
    for (const auto& x : xs)
        if (dot(z, x) < 1) throw CertificateError("separator failed re-check");
    return FeasWitness::with_separator(std::move(z));
}

}  // namespace psskit
