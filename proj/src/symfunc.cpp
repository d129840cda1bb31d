#include "jmkit/symfunc.hpp"

#include <stdexcept>

namespace jmkit {

long long z_of(const Partition& mu) {
  long long z = 1;
  for (const auto& [part, mult] : mu.multiplicities()) {
    for (int m = 1; m <= mult; ++m) z *= m;
    for (int m = 0; m < mult; ++m) z *= part;
  }
  return z;
}

SchurExpansion mult_p(const SchurExpansion& f, int j) {
  if (j < 1) throw std::invalid_argument("mult_p requires j >= 1");
  SchurExpansion result(f.degree() + j);
  for (const auto& [lambda, coeff] : f.terms()) {
    for (const HookMove& move : rimhook_additions(lambda, j))
      result.add_term(move.shape, move.height % 2 == 0 ? coeff : -coeff);
  }
  return result;
}

SchurExpansion skew_dp(const SchurExpansion& f, int j) {
  if (j < 1) throw std::invalid_argument("skew_dp requires j >= 1");
  SchurExpansion result(f.degree() >= j ? f.degree() - j : 0);
  for (const auto& [lambda, coeff] : f.terms()) {
    for (const HookMove& move : rimhook_removals(lambda, j))
      result.add_term(move.shape, move.height % 2 == 0 ? coeff : -coeff);
  }
  return result;
}

SchurExpansion lhs_eq3(const Partition& lambda) {
  if (lambda.weight() < 1) throw std::invalid_argument("lhs_eq3 requires weight >= 1");
  const SchurExpansion unit = SchurExpansion::unit(lambda);
  SchurExpansion result(lambda.weight() - 1);
  for (int j = 1; j + 1 <= lambda.weight(); ++j)
    result += mult_p(skew_dp(unit, j + 1), j);
  return result;
}

SchurExpansion rhs_eq3(const Partition& lambda) {
  if (lambda.weight() < 1) throw std::invalid_argument("rhs_eq3 requires weight >= 1");
  SchurExpansion result(lambda.weight() - 1);
  for (const Cell& x : corner_cells(lambda)) {
    std::vector<int> parts = lambda.parts();
    parts[static_cast<std::size_t>(x.row - 1)] -= 1;
    result.add_term(Partition::from_unsorted(std::move(parts)), Rational(content(x)));
  }
  return result;
}

SchurExpansion lhs_eq6(const Partition& lambda) {
  if (lambda.weight() < 2) throw std::invalid_argument("lhs_eq6 requires weight >= 2");
  const SchurExpansion unit = SchurExpansion::unit(lambda);
  SchurExpansion result(lambda.weight() - 2);
  for (int j = 1; j + 2 <= lambda.weight(); ++j)
    result += mult_p(skew_dp(unit, j + 2), j);
  return result;
}

SchurExpansion rhs_eq6(const Partition& lambda) {
  if (lambda.weight() < 2) throw std::invalid_argument("rhs_eq6 requires weight >= 2");
  SchurExpansion result(lambda.weight() - 2);
  for (const CellPair& pair : removable_pairs(lambda))
    result.add_term(pair.remaining, Rational(pair.pair_content));
  return result;
}

SchurExpansion lhs_t3(const Partition& lambda) {
  const SchurExpansion unit = SchurExpansion::unit(lambda);
  SchurExpansion result(lambda.weight() + 1);
  for (int j = 1; j <= lambda.weight(); ++j)
    result += mult_p(skew_dp(unit, j), j + 1);
  return result;
}

SchurExpansion rhs_t3(const Partition& lambda) {
  SchurExpansion result(lambda.weight() + 1);
  for (const Cell& x : addable_cells(lambda)) {
    std::vector<int> parts = lambda.parts();
    if (x.row <= lambda.rows())
      parts[static_cast<std::size_t>(x.row - 1)] += 1;
    else
      parts.push_back(1);
    result.add_term(Partition(std::move(parts)), Rational(content(x)));
  }
  return result;
}

}  // namespace jmkit
