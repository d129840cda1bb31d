#include "jmkit/group_algebra.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace jmkit {

Permutation::Permutation(int n) {
  if (n < 0) throw std::invalid_argument("permutation degree must be >= 0");
  images_.resize(static_cast<std::size_t>(n));
  std::iota(images_.begin(), images_.end(), 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : images) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v - 1)])
      throw std::invalid_argument("permutation images are not a bijection on {1..n}");
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::parse_cycles(std::string_view text, std::optional<int> n) {
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  int max_point = 0;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == ' ' || c == '\t') {
      ++pos;
      continue;
    }
    if (c != '(') throw std::invalid_argument("cycle notation: expected '('");
    std::size_t close = text.find(')', pos);
    if (close == std::string_view::npos) throw std::invalid_argument("cycle notation: missing ')'");
    std::vector<int> cycle;
    std::size_t p = pos + 1;
    while (p < close) {
      while (p < close && (text[p] == ' ' || text[p] == ',')) ++p;
      if (p >= close) break;
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + p, text.data() + close, value);
      if (ec != std::errc() || value < 1)
        throw std::invalid_argument("cycle notation: malformed point");
      cycle.push_back(value);
      max_point = std::max(max_point, value);
      p = static_cast<std::size_t>(ptr - text.data());
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    pos = close + 1;
  }

  const int degree = n.value_or(max_point);
  if (degree < max_point)
    throw std::invalid_argument("cycle notation: point exceeds the stated degree");
  std::vector<int> images(static_cast<std::size_t>(degree));
  std::iota(images.begin(), images.end(), 1);
  std::vector<bool> seen(static_cast<std::size_t>(degree), false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      int from = cycle[i];
      int to = cycle[(i + 1) % cycle.size()];
      if (seen[static_cast<std::size_t>(from - 1)])
        throw std::invalid_argument("cycle notation: repeated point");
      seen[static_cast<std::size_t>(from - 1)] = true;
      images[static_cast<std::size_t>(from - 1)] = to;
    }
  }
  return from_images(std::move(images));
}

Permutation Permutation::from_cycle_type(const Partition& type) {
  std::vector<int> images(static_cast<std::size_t>(type.weight()));
  int start = 1;
  for (int part : type.parts()) {
    for (int k = 0; k < part; ++k) {
      int from = start + k;
      int to = k + 1 == part ? start : from + 1;
      images[static_cast<std::size_t>(from - 1)] = to;
    }
    start += part;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

int Permutation::image(int i) const {
  if (i < 1 || i > n()) throw std::invalid_argument("permutation point out of range");
  return images_[static_cast<std::size_t>(i - 1)];
}

Permutation Permutation::extended(int new_n) const {
  if (new_n < n()) throw std::invalid_argument("extended: new degree smaller than current");
  std::vector<int> images = images_;
  for (int i = n() + 1; i <= new_n; ++i) images.push_back(i);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Partition Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<int> lengths;
  for (int i = 1; i <= n(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    int length = 0;
    int j = i;
    do {
      seen[static_cast<std::size_t>(j - 1)] = true;
      j = image(j);
      ++length;
    } while (j != i);
    lengths.push_back(length);
  }
  return Partition::from_unsorted(std::move(lengths));
}

int Permutation::fixed_point_count() const {
  int count = 0;
  for (int i = 1; i <= n(); ++i)
    if (image(i) == i) ++count;
  return count;
}

bool Permutation::is_identity() const { return fixed_point_count() == n(); }

std::string Permutation::to_cycles() const {
  if (n() == 0) return "()";
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (int i = 1; i <= n(); ++i) {
    if (seen[static_cast<std::size_t>(i - 1)]) continue;
    out += '(';
    int j = i;
    bool first = true;
    do {
      if (!first) out += ' ';
      out += std::to_string(j);
      seen[static_cast<std::size_t>(j - 1)] = true;
      j = image(j);
      first = false;
    } while (j != i);
    out += ')';
  }
  return out;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.n() != tau.n()) throw std::invalid_argument("composition: degree mismatch");
  std::vector<int> images(static_cast<std::size_t>(sigma.n()));
  for (int k = 1; k <= sigma.n(); ++k)
    images[static_cast<std::size_t>(k - 1)] = sigma.image(tau.image(k));
  return Permutation::from_images(std::move(images));
}

Permutation transposition(int n, int i, int j) {
  if (i < 1 || j < 1 || i > n || j > n || i == j)
    throw std::invalid_argument("transposition points must be distinct and within {1..n}");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  std::swap(images[static_cast<std::size_t>(i - 1)], images[static_cast<std::size_t>(j - 1)]);
  return Permutation::from_images(std::move(images));
}

Permutation three_cycle(int n, int i, int j, int k) {
  if (i == j || j == k || i == k)
    throw std::invalid_argument("three_cycle points must be distinct");
  if (i < 1 || j < 1 || k < 1 || i > n || j > n || k > n)
    throw std::invalid_argument("three_cycle points must lie in {1..n}");
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 1);
  images[static_cast<std::size_t>(i - 1)] = j;
  images[static_cast<std::size_t>(j - 1)] = k;
  images[static_cast<std::size_t>(k - 1)] = i;
  return Permutation::from_images(std::move(images));
}

GroupAlgebraElement build_R(const Permutation& sigma) {
  const int n = sigma.n();
  if (n < 1) throw std::invalid_argument("build_R requires degree >= 1");
  if (sigma.image(n) != n) throw std::invalid_argument("build_R requires sigma(n) = n");
  GroupAlgebraElement element{n, {}};
  element.terms.reserve(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i) element.terms.emplace_back(sigma * transposition(n, i, n), 1);
  return element;
}

GroupAlgebraElement build_T(const Permutation& sigma) {
  const int n = sigma.n();
  if (n < 2) throw std::invalid_argument("build_T requires degree >= 2");
  if (sigma.image(n) != n || sigma.image(n - 1) != n - 1)
    throw std::invalid_argument("build_T requires sigma to fix n-1 and n");
  GroupAlgebraElement element{n, {}};
  for (int i = 1; i <= n - 2; ++i)
    element.terms.emplace_back(sigma * three_cycle(n, i, n - 1, n), 1);
  return element;
}

GroupAlgebraElement build_V(const Permutation& sigma) {
  const int n = sigma.n();
  GroupAlgebraElement element{n, {}};
  for (int i = 1; i <= n; ++i) {
    if (sigma.image(i) == i) continue;
    element.terms.emplace_back(sigma * transposition(n, i, sigma.image(i)), 1);
  }
  return element;
}

long long eval_class_function(const GroupAlgebraElement& element, const Partition& lambda,
                              int drop_fixed_points, CharacterCache& cache) {
  if (drop_fixed_points < 0 || drop_fixed_points > 1)
    throw std::invalid_argument("drop_fixed_points must be 0 or 1");
  long long total = 0;
  for (const auto& [perm, coeff] : element.terms) {
    std::vector<int> parts = perm.cycle_type().parts();
    for (int d = 0; d < drop_fixed_points; ++d) {
      if (parts.empty() || parts.back() != 1)
        throw std::invalid_argument("eval_class_function: term " + perm.to_cycles() +
                                    " has no fixed point to drop");
      parts.pop_back();
    }
    total += coeff * cache.chi(lambda, Partition(std::move(parts)));
  }
  return total;
}

long long eval_class_function(const GroupAlgebraElement& element, const Partition& lambda,
                              int drop_fixed_points) {
  CharacterCache cache;
  return eval_class_function(element, lambda, drop_fixed_points, cache);
}

}  // namespace jmkit
