#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jmkit/characters.hpp"
#include "jmkit/partition.hpp"

namespace jmkit {

// Permutation of {1..n}, stored as the image sequence. Immutable after
// construction.
class Permutation {
 public:
  // Identity on {1..n}.
  explicit Permutation(int n = 0);

  // 1-based images; must be a bijection on {1..n}.
  static Permutation from_images(std::vector<int> images);

  // Cycle notation, e.g. "(2 5 3)(1)(4)". Fixed points may be omitted when
  // n is given explicitly; otherwise n is the largest point mentioned.
  static Permutation parse_cycles(std::string_view text, std::optional<int> n = std::nullopt);

  // Canonical permutation of the given cycle type: cycles taken largest
  // first and filled with consecutive integers starting from 1.
  static Permutation from_cycle_type(const Partition& type);

  int n() const { return static_cast<int>(images_.size()); }
  int image(int i) const;  // 1-based

  // Same mapping on {1..n} with fixed points appended up to new_n.
  Permutation extended(int new_n) const;

  Partition cycle_type() const;
  int fixed_point_count() const;
  bool is_identity() const;

  std::string to_cycles() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

  // Composition applies the right factor first: (sigma * tau)(k) = sigma(tau(k)).
  friend Permutation operator*(const Permutation& sigma, const Permutation& tau);

 private:
  std::vector<int> images_;  // images_[i] = image of i+1
};

Permutation transposition(int n, int i, int j);
// The 3-cycle sending i -> j -> k -> i.
Permutation three_cycle(int n, int i, int j, int k);

// Finite formal integer combination of permutations of a common {1..n}.
struct GroupAlgebraElement {
  int n = 0;
  std::vector<std::pair<Permutation, long long>> terms;
};

// R_n(sigma) = sum over i < n of sigma * (i n). Requires sigma(n) = n.
GroupAlgebraElement build_R(const Permutation& sigma);

// T_n(sigma) = sum over i <= n-2 of sigma * (i n-1 n). Requires sigma to fix
// both n-1 and n.
GroupAlgebraElement build_T(const Permutation& sigma);

// V_n(sigma) = sum over non-fixed i of sigma * (i sigma(i)). Empty for the
// identity; every term has at least one fixed point.
GroupAlgebraElement build_V(const Permutation& sigma);

// Linear evaluation through cycle types: sum of coeff * chi(lambda, type of
// term), where each term's type first loses drop_fixed_points parts equal
// to 1 (the restriction to a smaller symmetric group). Throws when a term
// lacks enough fixed points or the adjusted type mismatches lambda's weight.
long long eval_class_function(const GroupAlgebraElement& element, const Partition& lambda,
                              int drop_fixed_points, CharacterCache& cache);
long long eval_class_function(const GroupAlgebraElement& element, const Partition& lambda,
                              int drop_fixed_points);

}  // namespace jmkit
