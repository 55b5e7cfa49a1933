#include "todorov/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace todorov::gf2 {

namespace {

struct Echelon {
  Matrix m;
  std::vector<std::size_t> pivot_cols;  // pivot column of row r
};

// Reduced row echelon form of [A | extra columns].
Echelon reduce(Matrix m) {
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows) continue;
    std::swap(m.data[row], m.data[pivot]);
    for (std::size_t r = 0; r < m.rows; ++r) {
      if (r != row && m(r, col) != 0) {
        for (std::size_t c = col; c < m.cols; ++c) m(r, c) ^= m(row, c);
      }
    }
    out.pivot_cols.push_back(col);
    ++row;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows) throw std::invalid_argument("gf2::solve: dimension mismatch");
  Matrix aug(a.rows, a.cols + 1);
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) aug(i, j) = a(i, j) & 1U;
    aug(i, a.cols) = b[i] & 1U;
  }
  Echelon e = reduce(std::move(aug));
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == a.cols) return std::nullopt;
  Vector x(a.cols, 0);
  for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) x[e.pivot_cols[r]] = e.m(r, a.cols);
  return x;
}

std::vector<Vector> nullspace(const Matrix& a) {
  Matrix m(a.rows, a.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < a.cols; ++j) m(i, j) = a(i, j) & 1U;
  Echelon e = reduce(std::move(m));

  std::vector<bool> is_pivot(a.cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < a.cols; ++free) {
    if (is_pivot[free]) continue;
    Vector v(a.cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivot_cols.size(); ++r) v[e.pivot_cols[r]] = e.m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace todorov::gf2
