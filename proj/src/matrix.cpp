#include "conjal/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace conjal {

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        throw std::invalid_argument("matrix: entry count does not match rows*cols");
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols_ != o.rows_) {
        throw std::invalid_argument("matrix: inner dimensions differ");
    }
    RationalMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& a = at(r, k);
            if (a.is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) {
                out.at(r, c) += a * o.at(k, c);
            }
        }
    }
    return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) {
        throw std::invalid_argument("matrix: vector length does not match column count");
    }
    std::vector<Rational> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        Rational acc;
        for (std::size_t c = 0; c < cols_; ++c) {
            if (!at(r, c).is_zero() && !v[c].is_zero()) acc += at(r, c) * v[c];
        }
        out[r] = acc;
    }
    return out;
}

namespace {

// Reduced row echelon form in place; returns the pivot column of each
// pivot row. Pivot choice is the first row with a nonzero entry, so the
// output is deterministic.
std::vector<std::size_t> reduce(RationalMatrix& m) {
    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == m.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(pivot, c), m.at(row, c));
        }
        Rational inv = Rational(1) / m.at(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m.at(r, col).is_zero()) continue;
            Rational factor = m.at(r, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                m.at(r, c) -= factor * m.at(row, c);
            }
        }
        pivot_cols.push_back(col);
        ++row;
    }
    return pivot_cols;
}

} // namespace

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    RationalMatrix r = m;
    std::vector<std::size_t> pivot_cols = reduce(r);

    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<Rational>> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(m.cols());
        v[free] = Rational(1);
        for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
            v[pivot_cols[i]] = -r.at(i, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::size_t rank(const RationalMatrix& m) {
    RationalMatrix r = m;
    return reduce(r).size();
}

} // namespace conjal
