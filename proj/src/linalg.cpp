#include "ratcode/linalg.hpp"

namespace ratcode {

Matrix::Matrix(FieldSpecPtr spec, std::size_t rows, std::size_t cols)
    : spec_(std::move(spec)), rows_(rows), cols_(cols), a_(rows * cols, spec_->zero()) {}

std::size_t rref(Matrix& m, std::vector<std::size_t>* pivots) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        // first nonzero entry at or below the current row
        std::size_t pivot = rank;
        while (pivot < rows && m.at(pivot, col).is_zero()) ++pivot;
        if (pivot == rows) continue;
        if (pivot != rank)
            for (std::size_t c = col; c < cols; ++c) std::swap(m.at(rank, c), m.at(pivot, c));
        const FieldElement inv = m.at(rank, col).inv();
        for (std::size_t c = col; c < cols; ++c) m.at(rank, c) = m.at(rank, c) * inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            const FieldElement f = m.at(r, col);
            for (std::size_t c = col; c < cols; ++c)
                m.at(r, c) = m.at(r, c) - f * m.at(rank, c);
        }
        if (pivots) pivots->push_back(col);
        ++rank;
    }
    return rank;
}

std::vector<std::vector<FieldElement>> nullspace(const Matrix& m) {
    Matrix r = m;
    std::vector<std::size_t> pivots;
    rref(r, &pivots);

    const auto& spec = m.owner();
    const std::size_t cols = m.cols();
    std::vector<bool> is_pivot(cols, false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::vector<FieldElement>> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<FieldElement> v(cols, spec->zero());
        v[free_col] = spec->one();
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -r.at(i, free_col);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Matrix> inverse(const Matrix& m) {
    if (m.rows() != m.cols()) return std::nullopt;
    const std::size_t n = m.rows();
    const auto& spec = m.owner();
    Matrix aug(spec, n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, n + r) = spec->one();
    }
    std::vector<std::size_t> pivots;
    if (rref(aug, &pivots) != n) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        if (pivots[i] != i) return std::nullopt;
    Matrix out(spec, n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.at(r, c) = aug.at(r, n + c);
    return out;
}

}  // namespace ratcode
