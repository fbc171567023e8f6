#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symcone/rational.hpp"

namespace symcone {

class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
    static RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const std::vector<Rational>& entries() const { return a_; }

    Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    void append_row(const std::vector<Rational>& r);
    // New matrix with r inserted as the first row.
    RationalMatrix bordered_above(const std::vector<Rational>& r) const;
    RationalMatrix without(const std::vector<std::size_t>& drop_rows,
                           const std::vector<std::size_t>& drop_cols) const;
    RationalMatrix transpose() const;

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    bool operator==(const RationalMatrix& other) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

// Fraction-free (Bareiss) determinant. Throws DomainError if not square.
Rational det(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

// Basis of the right null space, one vector per free column of the reduced
// row echelon form. Each vector is scaled to have integer entries with gcd 1
// and a positive leading nonzero entry.
std::vector<std::vector<Rational>> kernel_basis(const RationalMatrix& m);

// One solution of m x = b (free unknowns set to 0), or nothing if inconsistent.
std::optional<std::vector<Rational>> solve(const RationalMatrix& m, const std::vector<Rational>& b);

// True when v lies in the span of the given vectors.
bool in_span(const std::vector<std::vector<Rational>>& span, const std::vector<Rational>& v);

// Scales v so its entries are coprime integers with a positive first nonzero entry.
std::vector<Rational> primitive(std::vector<Rational> v);

}  // namespace symcone
