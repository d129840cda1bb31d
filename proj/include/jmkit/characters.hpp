#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <unordered_map>
#include <vector>

#include "jmkit/expansion.hpp"
#include "jmkit/partition.hpp"
#include "jmkit/rational.hpp"

namespace jmkit {

// Memo for irreducible character values, keyed by the (lambda, mu) pair.
// Concurrent readers are always allowed; races may duplicate a computation
// but every store writes the same value, so results are deterministic.
class CharacterCache {
 public:
  // chi^lambda(mu) by rimhook recursion on the largest part of mu.
  // Throws std::invalid_argument on weight mismatch.
  long long chi(const Partition& lambda, const Partition& mu);

  std::size_t size() const;

 private:
  struct VectorHash {
    std::size_t operator()(const std::vector<int>& v) const noexcept;
  };

  long long chi_inner(const Partition& lambda, const Partition& mu);

  mutable std::shared_mutex mutex_;
  std::unordered_map<std::vector<int>, long long, VectorHash> memo_;
};

// Convenience entry points with a transient cache.
long long chi(const Partition& lambda, const Partition& mu);

// f^lambda = chi(lambda, (1^n)).
long long dimension(const Partition& lambda);
long long dimension(const Partition& lambda, CharacterCache& cache);

// Sum over corner cells x of chi(lambda - x, sigma_bar_type); equals
// chi(lambda, sigma_bar_type plus a part 1). Requires
// weight(lambda) = weight(sigma_bar_type) + 1.
long long restrict_branching(const Partition& lambda, const Partition& sigma_bar_type);
long long restrict_branching(const Partition& lambda, const Partition& sigma_bar_type,
                             CharacterCache& cache);

// Full table of chi^lambda(mu) for lambda, mu partitions of n, both indices
// in lexicographic order. Invariants (trivial row, positive dimension
// column, orthogonality) are verified on construction.
struct CharacterTable {
  int n = 0;
  std::vector<Partition> lambdas;               // row index
  std::vector<Partition> mus;                   // column index
  std::vector<std::vector<long long>> values;   // values[row][col]
  std::vector<long long> class_sizes;           // n! / z_mu per column
};

// Throws GuardExceeded when n exceeds the limit.
CharacterTable character_table(int n, CharacterCache* cache = nullptr,
                               std::optional<int> guard_override = std::nullopt);

// Class function on S_n: one exact rational value per cycle type.
class ClassFunction {
 public:
  explicit ClassFunction(int n);

  int n() const { return n_; }
  const Rational& at(const Partition& mu) const;
  void set(const Partition& mu, Rational value);
  const std::map<Partition, Rational>& values() const { return values_; }

 private:
  int n_ = 0;
  std::map<Partition, Rational> values_;
};

// chi^lambda packaged as a class function.
ClassFunction irreducible_character(const Partition& lambda);
ClassFunction irreducible_character(const Partition& lambda, CharacterCache& cache);

// Frobenius characteristic: sum over mu of f(mu)/z_mu * p_mu.
PowerExpansion characteristic(const ClassFunction& f);

}  // namespace jmkit
