#include "weitz/linalg.hpp"

#include <stdexcept>

namespace weitz {

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    RationalMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw std::invalid_argument("ragged rows");
        }
        for (std::size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = Rational(1);
    }
    return m;
}

RationalVector RationalMatrix::row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

RationalVector RationalMatrix::operator*(const RationalVector& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("dimension mismatch in matrix-vector product");
    }
    RationalVector out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) {
            const Rational& e = (*this)(r, c);
            if (!e.is_zero() && !v[c].is_zero()) {
                out[r] += e * v[c];
            }
        }
    }
    return out;
}

EchelonForm reduced_row_echelon(RationalMatrix m) {
    EchelonForm out;
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < m.cols() && next_row < m.rows(); ++col) {
        std::size_t pivot = next_row;
        while (pivot < m.rows() && m(pivot, col).is_zero()) {
            ++pivot;
        }
        if (pivot == m.rows()) {
            continue;
        }
        if (pivot != next_row) {
            for (std::size_t c = col; c < m.cols(); ++c) {
                std::swap(m(pivot, c), m(next_row, c));
            }
        }
        const Rational inv = Rational(1) / m(next_row, col);
        for (std::size_t c = col; c < m.cols(); ++c) {
            if (!m(next_row, c).is_zero()) {
                m(next_row, c) *= inv;
            }
        }
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == next_row || m(r, col).is_zero()) {
                continue;
            }
            const Rational factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!m(next_row, c).is_zero()) {
                    m(r, c) -= factor * m(next_row, c);
                }
            }
        }
        out.pivots.push_back(col);
        ++next_row;
    }
    out.reduced = std::move(m);
    return out;
}

std::size_t rank(const RationalMatrix& m) {
    return reduced_row_echelon(m).rank();
}

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
    const EchelonForm e = reduced_row_echelon(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : e.pivots) {
        is_pivot[p] = true;
    }

    std::vector<RationalVector> raw;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) {
            continue;
        }
        RationalVector v(n);
        v[free] = Rational(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            const Rational& entry = e.reduced(r, free);
            if (!entry.is_zero()) {
                v[e.pivots[r]] = -entry;
            }
        }
        raw.push_back(std::move(v));
    }
    if (raw.empty()) {
        return raw;
    }

    // Re-echelonize the basis itself so its form depends only on the kernel.
    const EchelonForm basis = reduced_row_echelon(RationalMatrix::from_rows(raw));
    std::vector<RationalVector> out;
    out.reserve(basis.rank());
    for (std::size_t r = 0; r < basis.rank(); ++r) {
        out.push_back(basis.reduced.row(r));
    }
    return out;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& b) {
    if (b.size() != m.rows()) {
        throw std::invalid_argument("right-hand side has wrong length");
    }
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            aug(r, c) = m(r, c);
        }
        aug(r, m.cols()) = b[r];
    }
    const EchelonForm e = reduced_row_echelon(std::move(aug));
    if (!e.pivots.empty() && e.pivots.back() == m.cols()) {
        return std::nullopt;
    }
    RationalVector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        x[e.pivots[r]] = e.reduced(r, m.cols());
    }
    return x;
}

} // namespace weitz
