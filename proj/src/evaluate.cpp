#include "jmkit/evaluate.hpp"

#include <stdexcept>

namespace jmkit {

namespace {

void require_point(const std::vector<Rational>& point) {
  if (point.empty()) throw std::invalid_argument("evaluation point must have >= 1 entries");
}

// h_0..h_max at the given point, one variable folded in at a time:
// h_k(x_1..x_m) = h_k(x_1..x_{m-1}) + x_m * h_{k-1}(x_1..x_m).
std::vector<Rational> complete_homogeneous(int max_degree, const std::vector<Rational>& point) {
  std::vector<Rational> h(static_cast<std::size_t>(max_degree) + 1, Rational(0));
  h[0] = 1;
  for (const Rational& x : point)
    for (int k = 1; k <= max_degree; ++k)
      h[static_cast<std::size_t>(k)] += x * h[static_cast<std::size_t>(k - 1)];
  return h;
}

// Exact determinant by Gaussian elimination with row swaps.
Rational determinant(std::vector<std::vector<Rational>> m) {
  const std::size_t size = m.size();
  Rational det(1);
  for (std::size_t col = 0; col < size; ++col) {
    std::size_t pivot = col;
    while (pivot < size && m[pivot][col] == 0) ++pivot;
    if (pivot == size) return Rational(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t row = col + 1; row < size; ++row) {
      if (m[row][col] == 0) continue;
      Rational factor = m[row][col] / m[col][col];
      for (std::size_t k = col; k < size; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

}  // namespace

Rational eval_schur(const Partition& lambda, const std::vector<Rational>& point) {
  require_point(point);
  if (lambda.empty()) return Rational(1);
  const int rows = lambda.rows();
  const auto h = complete_homogeneous(lambda.parts()[0] + rows, point);

  // s_lambda = det( h_{lambda_i - i + j} ), 1 <= i, j <= rows.
  std::vector<std::vector<Rational>> matrix(
      static_cast<std::size_t>(rows),
      std::vector<Rational>(static_cast<std::size_t>(rows), Rational(0)));
  for (int i = 1; i <= rows; ++i) {
    for (int j = 1; j <= rows; ++j) {
      int index = lambda.parts()[static_cast<std::size_t>(i - 1)] - i + j;
      if (index >= 0) matrix[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = h[static_cast<std::size_t>(index)];
    }
  }
  return determinant(std::move(matrix));
}

Rational eval_power(const Partition& lambda, const std::vector<Rational>& point) {
  require_point(point);
  Rational value(1);
  for (int part : lambda.parts()) {
    Rational sum(0);
    for (const Rational& x : point) {
      Rational power(1);
      for (int e = 0; e < part; ++e) power *= x;
      sum += power;
    }
    value *= sum;
  }
  return value;
}

Rational evaluate(const SchurExpansion& f, const std::vector<Rational>& point) {
  require_point(point);
  Rational value(0);
  for (const auto& [p, c] : f.terms()) value += c * eval_schur(p, point);
  return value;
}

Rational evaluate(const PowerExpansion& f, const std::vector<Rational>& point) {
  require_point(point);
  Rational value(0);
  for (const auto& [p, c] : f.terms()) value += c * eval_power(p, point);
  return value;
}

}  // namespace jmkit
