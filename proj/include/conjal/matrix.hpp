#pragma once

#include "conjal/rational.hpp"

#include <cstddef>
#include <vector>

namespace conjal {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {}

    /// Throws std::invalid_argument if entries.size() != rows*cols.
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    const Rational& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    Rational& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }

    const std::vector<Rational>& entries() const { return entries_; }

    RationalMatrix operator*(const RationalMatrix& o) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }

private:
    std::size_t rows_, cols_;
    std::vector<Rational> entries_;
};

/// Basis of {v : m v = 0} from exact Gauss-Jordan elimination. One vector per
/// free column, ordered by free-column index; the free coordinate is set to 1
/// and pivot coordinates are read off the reduced echelon form.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

} // namespace conjal
