#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace todorov::gf2 {

using Vector = std::vector<std::uint8_t>;

/// Dense matrix over F2, stored row-major; entries are 0 or 1.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Vector> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r, Vector(c, 0)) {}

  std::uint8_t& operator()(std::size_t i, std::size_t j) { return data[i][j]; }
  std::uint8_t operator()(std::size_t i, std::size_t j) const { return data[i][j]; }
};

/// Solves A x = b. Free variables are set to zero, so the answer is
/// deterministic even when A has dependent columns.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Basis of {x : A x = 0}, one vector per free column in increasing order.
std::vector<Vector> nullspace(const Matrix& a);

}  // namespace todorov::gf2
