#pragma once

#include "weitz/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace weitz {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    static RationalMatrix from_rows(const std::vector<RationalVector>& rows);
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalVector row(std::size_t r) const;
    RationalVector operator*(const RationalVector& v) const;

    friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Result of Gauss-Jordan elimination.
struct EchelonForm {
    RationalMatrix reduced;            // reduced row echelon form
    std::vector<std::size_t> pivots;   // pivot column of each nonzero row, increasing
    std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan with first-nonzero pivoting in column order; pivots are
/// normalized to 1 and cleared above and below.
EchelonForm reduced_row_echelon(RationalMatrix m);

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : Mv = 0}, itself in reduced row echelon form: each vector's
/// first nonzero entry is 1 and that column is zero in every other vector.
/// Vectors are ordered by leading column.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// One solution of Mx = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b);

} // namespace weitz
