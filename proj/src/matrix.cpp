#include "symcone/matrix.hpp"

#include <algorithm>
#include <utility>

namespace symcone {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw DomainError("matrix entry count does not match shape");
}

RationalMatrix RationalMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
    RationalMatrix m(0, rows.empty() ? 0 : rows[0].size());
    for (const auto& r : rows) m.append_row(r);
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

std::vector<Rational> RationalMatrix::row(std::size_t i) const {
    return {a_.begin() + static_cast<long>(i * cols_), a_.begin() + static_cast<long>((i + 1) * cols_)};
}

void RationalMatrix::append_row(const std::vector<Rational>& r) {
    if (rows_ == 0 && cols_ == 0) cols_ = r.size();
    if (r.size() != cols_) throw DomainError("row length does not match column count");
    a_.insert(a_.end(), r.begin(), r.end());
    ++rows_;
}

RationalMatrix RationalMatrix::bordered_above(const std::vector<Rational>& r) const {
    if (r.size() != cols_) throw DomainError("border row length does not match column count");
    RationalMatrix m(0, cols_);
    m.append_row(r);
    for (std::size_t i = 0; i < rows_; ++i) m.append_row(row(i));
    return m;
}

RationalMatrix RationalMatrix::without(const std::vector<std::size_t>& drop_rows,
                                       const std::vector<std::size_t>& drop_cols) const {
    auto dropped = [](const std::vector<std::size_t>& v, std::size_t k) {
        return std::find(v.begin(), v.end(), k) != v.end();
    };
    std::vector<Rational> out;
    std::size_t nr = 0, nc = 0;
    for (std::size_t j = 0; j < cols_; ++j)
        if (!dropped(drop_cols, j)) ++nc;
    for (std::size_t i = 0; i < rows_; ++i) {
        if (dropped(drop_rows, i)) continue;
        ++nr;
        for (std::size_t j = 0; j < cols_; ++j)
            if (!dropped(drop_cols, j)) out.push_back((*this)(i, j));
    }
    return RationalMatrix(nr, nc, std::move(out));
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw DomainError("vector length does not match column count");
    std::vector<Rational> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < cols_; ++j)
            if (sgn(v[j])) s += (*this)(i, j) * v[j];
        out[i] = s;
    }
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) throw DomainError("incompatible matrix shapes");
    RationalMatrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& x = (*this)(i, k);
            if (!sgn(x)) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) p(i, j) += x * other(k, j);
        }
    return p;
}

namespace {

// Rows scaled to integers; scale[i] is the factor applied to row i.
struct IntegerRows {
    std::vector<std::vector<Integer>> rows;
    std::vector<Integer> scale;
};

IntegerRows to_integer_rows(const RationalMatrix& m) {
    IntegerRows out;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        std::vector<Integer> r(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) r[j] = m(i, j).get_num() * (l / m(i, j).get_den());
        out.rows.push_back(std::move(r));
        out.scale.push_back(l);
    }
    return out;
}

// Bareiss elimination in place. Returns the rank; for square full-rank input
// the last pivot is the determinant up to the returned swap parity.
std::size_t bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols, int& swap_sign, Integer& last_pivot) {
    std::size_t n = a.size(), r = 0;
    Integer prev = 1;
    swap_sign = 1;
    last_pivot = 0;
    for (std::size_t c = 0; c < cols && r < n; ++c) {
        std::size_t p = r;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) continue;
        if (p != r) {
            std::swap(a[p], a[r]);
            swap_sign = -swap_sign;
        }
        for (std::size_t i = r + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        last_pivot = prev;
        ++r;
    }
    return r;
}

}  // namespace

Rational det(const RationalMatrix& m) {
    if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
    if (m.rows() == 0) return 1;
    IntegerRows ir = to_integer_rows(m);
    int s;
    Integer piv;
    std::size_t r = bareiss(ir.rows, m.cols(), s, piv);
    if (r < m.rows()) return 0;
    Integer denom = 1;
    for (const auto& l : ir.scale) denom *= l;
    Rational d(piv * s, denom);
    d.canonicalize();
    return d;
}

std::size_t rank(const RationalMatrix& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    IntegerRows ir = to_integer_rows(m);
    int s;
    Integer piv;
    return bareiss(ir.rows, m.cols(), s, piv);
}

std::vector<Rational> primitive(std::vector<Rational> v) {
    Integer l = 1, g = 0;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (auto& x : v) {
        x *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_num_mpz_t());
    }
    if (g == 0) return v;
    int lead = 0;
    for (const auto& x : v)
        if (sgn(x)) {
            lead = sgn(x);
            break;
        }
    for (auto& x : v) x /= Rational(g * lead);
    return v;
}

std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m) {
    std::size_t n = m.rows(), cols = m.cols();
    IntegerRows ir = to_integer_rows(m);
    auto& a = ir.rows;
    // Integer row echelon form (Bareiss), then exact back substitution per free column.
    int s;
    Integer piv;
    std::size_t r = bareiss(a, cols, s, piv);
    std::vector<std::size_t> pivot_cols;
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t c = 0;
        while (a[i][c] == 0) ++c;
        pivot_cols.push_back(c);
    }
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rational> v(cols);
        v[f] = 1;
        for (std::size_t ii = r; ii-- > 0;) {
            std::size_t c = pivot_cols[ii];
            Rational acc = 0;
            for (std::size_t j = c + 1; j < cols; ++j)
                if (a[ii][j] != 0 && sgn(v[j])) acc += Rational(a[ii][j]) * v[j];
            v[c] = -acc / Rational(a[ii][c]);
        }
        basis.push_back(primitive(std::move(v)));
    }
    (void)n;
    return basis;
}

std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b) {
    if (b.size() != m.rows()) throw DomainError("right-hand side has wrong length");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
        aug(i, m.cols()) = b[i];
    }
    // The kernel vector attached to the last column (if it is free) encodes a solution.
    for (const auto& v : kernel_basis(aug)) {
        const Rational& last = v.back();
        if (!sgn(last)) continue;
        std::vector<Rational> x(m.cols());
        for (std::size_t j = 0; j < m.cols(); ++j) x[j] = -v[j] / last;
        return x;
    }
    return std::nullopt;
}

bool in_span(const std::vector<std::vector<Rational>>& span, const std::vector<Rational>& v) {
    if (span.empty()) {
        for (const auto& x : v)
            if (sgn(x)) return false;
        return true;
    }
    RationalMatrix a = RationalMatrix::from_rows(span);
    std::size_t r0 = rank(a);
    a.append_row(v);
    return rank(a) == r0;
}

}  // namespace symcone
