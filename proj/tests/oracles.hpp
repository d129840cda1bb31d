#pragma once

// Test-side oracles, kept deliberately independent of the code paths they
// check: subset filtering instead of beta numbers, explicit tableau
// backtracking instead of character recursion, hook products instead of
// either.

#include <functional>
#include <random>
#include <set>
#include <vector>

#include "jmkit/characters.hpp"
#include "jmkit/partition.hpp"
#include "jmkit/rational.hpp"

namespace jmkit::test {

// All partitions contained in lambda with the given weight.
inline std::vector<Partition> subpartitions(const Partition& lambda, int weight) {
  std::vector<Partition> result;
  std::vector<int> current;
  std::function<void(int, int, int)> recurse = [&](int row, int remaining, int prev) {
    if (remaining == 0) {
      result.push_back(Partition(current));
      return;
    }
    if (row > lambda.rows()) return;
    int cap = std::min(prev, lambda.row_length(row));
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      current.push_back(part);
      recurse(row + 1, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(1, weight, weight == 0 ? 1 : weight);
  std::sort(result.begin(), result.end());
  return result;
}

// Rimhook removals by brute force: filter every contained partition of the
// right weight through the skew classifier.
inline std::vector<HookMove> brute_rimhook_removals(const Partition& lambda, int length) {
  std::vector<HookMove> moves;
  if (length > lambda.weight()) return moves;
  for (const Partition& nu : subpartitions(lambda, lambda.weight() - length)) {
    SkewShape shape = classify_skew(lambda, nu);
    if (shape.is_rimhook) moves.push_back({nu, *shape.height});
  }
  return moves;  // already sorted: subpartitions() sorts lexicographically
}

// Dimension via the hook length product.
inline long long hook_length_dimension(const Partition& lambda) {
  BigInt numerator(1);
  for (int k = 2; k <= lambda.weight(); ++k) numerator *= k;
  BigInt denominator(1);
  for (int i = 1; i <= lambda.rows(); ++i)
    for (int j = 1; j <= lambda.row_length(i); ++j)
      denominator *= (lambda.row_length(i) - j) + (lambda.column_length(j) - i) + 1;
  BigInt result = numerator / denominator;
  return result.get_si();
}

// Dimension by explicit standard-tableau backtracking: entries 1..n placed
// one at a time, each row filled left to right and no deeper than the row
// above.
inline long long syt_count(const Partition& lambda) {
  const int n = lambda.weight();
  std::vector<int> fill(static_cast<std::size_t>(lambda.rows()), 0);
  long long count = 0;
  std::function<void(int)> place = [&](int placed) {
    if (placed == n) {
      ++count;
      return;
    }
    for (int r = 0; r < lambda.rows(); ++r) {
      if (fill[static_cast<std::size_t>(r)] >= lambda.parts()[static_cast<std::size_t>(r)]) continue;
      if (r > 0 && fill[static_cast<std::size_t>(r)] >= fill[static_cast<std::size_t>(r - 1)]) continue;
      ++fill[static_cast<std::size_t>(r)];
      place(placed + 1);
      --fill[static_cast<std::size_t>(r)];
    }
  };
  place(0);
  return count;
}

// Every 2-subset of cells whose removal leaves a partition, as (cell, cell)
// pairs in row-major order.
inline std::vector<std::pair<Cell, Cell>> brute_removable_pairs(const Partition& lambda) {
  std::vector<std::pair<Cell, Cell>> result;
  const std::vector<Cell> cells = cells_of(lambda);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t k = i + 1; k < cells.size(); ++k) {
      std::vector<int> row_loss(static_cast<std::size_t>(lambda.rows()), 0);
      ++row_loss[static_cast<std::size_t>(cells[i].row - 1)];
      ++row_loss[static_cast<std::size_t>(cells[k].row - 1)];
      std::vector<int> parts = lambda.parts();
      bool valid = true;
      std::set<Cell> removed{cells[i], cells[k]};
      // Cells removed must be the rightmost of their row.
      for (const Cell& c : removed) {
        int loss_here = row_loss[static_cast<std::size_t>(c.row - 1)];
        if (c.col <= lambda.row_length(c.row) - loss_here) valid = false;
      }
      if (!valid) continue;
      for (std::size_t r = 0; r < parts.size(); ++r) parts[r] -= row_loss[r];
      for (std::size_t r = 0; r + 1 < parts.size(); ++r)
        if (parts[r] < parts[r + 1]) valid = false;
      if (valid) result.emplace_back(cells[i], cells[k]);
    }
  }
  return result;
}

// Fixed-seed rational sample points in four variables.
inline std::vector<std::vector<Rational>> sample_points(int count = 3, int variables = 4) {
  std::mt19937 rng(0xC0FFEE);
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 4);
  std::vector<std::vector<Rational>> points;
  for (int p = 0; p < count; ++p) {
    std::vector<Rational> point;
    for (int v = 0; v < variables; ++v) {
      int numerator = num(rng);
      if (numerator == 0) numerator = 1;
      point.push_back(make_rational(numerator, den(rng)));
    }
    points.push_back(std::move(point));
  }
  return points;
}

}  // namespace jmkit::test
