#include "jmkit/characters.hpp"

#include <mutex>
#include <stdexcept>

#include "jmkit/guard.hpp"
#include "jmkit/symfunc.hpp"

namespace jmkit {

namespace {

// lambda parts, -1, mu parts. Parts are positive, so -1 is an unambiguous
// separator.
std::vector<int> memo_key(const Partition& lambda, const Partition& mu) {
  std::vector<int> key;
  key.reserve(lambda.parts().size() + mu.parts().size() + 1);
  key.insert(key.end(), lambda.parts().begin(), lambda.parts().end());
  key.push_back(-1);
  key.insert(key.end(), mu.parts().begin(), mu.parts().end());
  return key;
}

}  // namespace

std::size_t CharacterCache::VectorHash::operator()(const std::vector<int>& v) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int x : v) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

std::size_t CharacterCache::size() const {
  std::shared_lock lock(mutex_);
  return memo_.size();
}

long long CharacterCache::chi(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("chi: weight mismatch between " + lambda.to_string() + " and " +
                                mu.to_string());
  return chi_inner(lambda, mu);
}

long long CharacterCache::chi_inner(const Partition& lambda, const Partition& mu) {
  if (mu.empty()) return 1;

  std::vector<int> key = memo_key(lambda, mu);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }

  // Recurse on the largest part; it minimizes branching.
  const int strip = mu.parts()[0];
  const Partition rest = mu.without_part(0);
  long long value = 0;
  for (const HookMove& move : rimhook_removals(lambda, strip)) {
    long long inner = chi_inner(move.shape, rest);
    value += move.height % 2 == 0 ? inner : -inner;
  }

  {
    std::unique_lock lock(mutex_);
    memo_.emplace(std::move(key), value);
  }
  return value;
}

long long chi(const Partition& lambda, const Partition& mu) {
  CharacterCache cache;
  return cache.chi(lambda, mu);
}

long long dimension(const Partition& lambda, CharacterCache& cache) {
  return cache.chi(lambda, Partition(std::vector<int>(static_cast<std::size_t>(lambda.weight()), 1)));
}

long long dimension(const Partition& lambda) {
  CharacterCache cache;
  return dimension(lambda, cache);
}

long long restrict_branching(const Partition& lambda, const Partition& sigma_bar_type,
                             CharacterCache& cache) {
  if (lambda.weight() != sigma_bar_type.weight() + 1)
    throw std::invalid_argument("restrict_branching: weight(lambda) must be weight(type) + 1");
  long long total = 0;
  for (const Cell& x : corner_cells(lambda)) {
    std::vector<int> parts = lambda.parts();
    parts[static_cast<std::size_t>(x.row - 1)] -= 1;
    total += cache.chi(Partition::from_unsorted(std::move(parts)), sigma_bar_type);
  }
  return total;
}

long long restrict_branching(const Partition& lambda, const Partition& sigma_bar_type) {
  CharacterCache cache;
  return restrict_branching(lambda, sigma_bar_type, cache);
}

CharacterTable character_table(int n, CharacterCache* cache, std::optional<int> guard_override) {
  if (n < 1) throw std::invalid_argument("character_table requires n >= 1");
  check_guard(n, guard_override);

  CharacterCache local;
  CharacterCache& memo = cache ? *cache : local;

  CharacterTable table;
  table.n = n;
  table.lambdas = partitions_of(n);
  table.mus = table.lambdas;

  BigInt factorial(1);
  for (int k = 2; k <= n; ++k) factorial *= k;
  for (const Partition& mu : table.mus) {
    BigInt size = factorial / BigInt(static_cast<long>(z_of(mu)));
    table.class_sizes.push_back(size.get_si());
  }

  for (const Partition& lambda : table.lambdas) {
    std::vector<long long> row;
    row.reserve(table.mus.size());
    for (const Partition& mu : table.mus) row.push_back(memo.chi(lambda, mu));
    table.values.push_back(std::move(row));
  }

  // Construction-time verification. Failures here signal a bug, not bad input.
  const std::size_t count = table.lambdas.size();
  const std::size_t trivial_row = count - 1;           // (n) is lexicographically last
  const std::size_t dimension_col = 0;                 // (1^n) is lexicographically first
  for (std::size_t col = 0; col < count; ++col)
    if (table.values[trivial_row][col] != 1)
      throw std::logic_error("character table: trivial character row is not all ones");
  for (std::size_t row = 0; row < count; ++row)
    if (table.values[row][dimension_col] <= 0)
      throw std::logic_error("character table: non-positive dimension entry");
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      BigInt sum(0);
      for (std::size_t col = 0; col < count; ++col)
        sum += BigInt(table.class_sizes[col]) * table.values[a][col] * table.values[b][col];
      if (sum != (a == b ? factorial : BigInt(0)))
        throw std::logic_error("character table: orthogonality violated");
    }
  }
  return table;
}

ClassFunction::ClassFunction(int n) : n_(n) {
  if (n < 0) throw std::invalid_argument("class function requires n >= 0");
  for (const Partition& mu : partitions_of(n)) values_.emplace(mu, Rational(0));
}

const Rational& ClassFunction::at(const Partition& mu) const {
  auto it = values_.find(mu);
  if (it == values_.end())
    throw std::invalid_argument("class function: " + mu.to_string() + " is not a cycle type of " +
                                std::to_string(n_));
  return it->second;
}

void ClassFunction::set(const Partition& mu, Rational value) {
  auto it = values_.find(mu);
  if (it == values_.end())
    throw std::invalid_argument("class function: " + mu.to_string() + " is not a cycle type of " +
                                std::to_string(n_));
  it->second = std::move(value);
}

ClassFunction irreducible_character(const Partition& lambda, CharacterCache& cache) {
  ClassFunction f(lambda.weight());
  for (const Partition& mu : partitions_of(lambda.weight()))
    f.set(mu, Rational(static_cast<long>(cache.chi(lambda, mu))));
  return f;
}

ClassFunction irreducible_character(const Partition& lambda) {
  CharacterCache cache;
  return irreducible_character(lambda, cache);
}

PowerExpansion characteristic(const ClassFunction& f) {
  PowerExpansion result(f.n());
  for (const auto& [mu, value] : f.values()) {
    Rational coeff = value / Rational(static_cast<long>(z_of(mu)));
    result.add_term(mu, coeff);
  }
  return result;
}

}  // namespace jmkit
