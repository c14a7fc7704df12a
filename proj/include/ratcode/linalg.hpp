#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "ratcode/gf.hpp"

namespace ratcode {

/// Dense matrix over a FieldSpec. Row-major, value semantics.
class Matrix {
   public:
    Matrix(FieldSpecPtr spec, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const FieldSpecPtr& owner() const noexcept { return spec_; }

    FieldElement& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

   private:
    FieldSpecPtr spec_;
    std::size_t rows_, cols_;
    std::vector<FieldElement> a_;
};

/// In-place reduced row echelon form. Exact Gaussian elimination with
/// partial pivoting by first nonzero entry in the column. Returns the rank;
/// pivot columns are appended to *pivots if given.
std::size_t rref(Matrix& m, std::vector<std::size_t>* pivots = nullptr);

/// Basis of the right nullspace of m (solutions of m x = 0), one vector per
/// free column in ascending column order. Deterministic.
std::vector<std::vector<FieldElement>> nullspace(const Matrix& m);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace ratcode
