#include "symprod/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace symprod {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matrix shape mismatch");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k))) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                if (!is_zero(b(k, j))) out(i, j) += a(i, k) * b(k, j);
            }
        }
    }
    return out;
}

namespace {

void swap_rows(Matrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

}  // namespace

std::size_t rank(Matrix m) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < m.rows() && is_zero(m(found, col))) ++found;
        if (found == m.rows()) continue;
        swap_rows(m, pivot_row, found);
        for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
            if (is_zero(m(r, col))) continue;
            Scalar factor = m(r, col) / m(pivot_row, col);
            for (std::size_t c = col; c < m.cols(); ++c) {
                if (!is_zero(m(pivot_row, c))) m(r, c) -= factor * m(pivot_row, c);
            }
        }
        ++pivot_row;
    }
    return pivot_row;
}

std::optional<Matrix> inverse(const Matrix& input) {
    if (input.rows() != input.cols()) return std::nullopt;
    const std::size_t n = input.rows();
    Matrix m = input;
    Matrix inv = Matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t found = col;
        while (found < n && is_zero(m(found, col))) ++found;
        if (found == n) return std::nullopt;
        swap_rows(m, col, found);
        swap_rows(inv, col, found);
        Scalar scale = 1 / m(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            m(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(m(r, col))) continue;
            Scalar factor = m(r, col);
            for (std::size_t c = 0; c < n; ++c) {
                if (!is_zero(m(col, c))) m(r, c) -= factor * m(col, c);
                if (!is_zero(inv(col, c))) inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

}  // namespace symprod
