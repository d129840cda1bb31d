#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "jmkit/partition.hpp"
#include "jmkit/rational.hpp"

namespace jmkit {

enum class Basis { schur, power };

constexpr std::string_view basis_name(Basis basis) {
  return basis == Basis::schur ? "schur" : "power";
}

// Sparse homogeneous linear combination of basis partitions with exact
// rational coefficients. Every stored index partition has weight equal to
// the degree; zero coefficients are never stored. The degree is carried
// explicitly so the zero expansion stays homogeneous.
template <Basis B>
class Expansion {
 public:
  Expansion() = default;

  explicit Expansion(int degree) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("expansion degree must be >= 0");
  }

  static Expansion unit(const Partition& p) {
    Expansion e(p.weight());
    e.add_term(p, Rational(1));
    return e;
  }

  int degree() const { return degree_; }
  const std::map<Partition, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(const Partition& p) const {
    auto it = terms_.find(p);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Partition& p, const Rational& coeff) {
    if (p.weight() != degree_)
      throw std::invalid_argument("expansion term of weight " + std::to_string(p.weight()) +
                                  " in a degree-" + std::to_string(degree_) + " expansion");
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(p, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Expansion& operator+=(const Expansion& other) {
    require_same_degree(other);
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
  }

  Expansion& operator-=(const Expansion& other) {
    require_same_degree(other);
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
  }

  Expansion& operator*=(const Rational& scalar) {
    if (scalar == 0) {
      terms_.clear();
    } else {
      for (auto& [p, c] : terms_) c *= scalar;
    }
    return *this;
  }

  friend Expansion operator+(Expansion a, const Expansion& b) { return a += b; }
  friend Expansion operator-(Expansion a, const Expansion& b) { return a -= b; }
  friend Expansion operator*(const Rational& s, Expansion e) { return e *= s; }

  friend bool operator==(const Expansion&, const Expansion&) = default;

  // Compact deterministic text form, e.g. "s[2,1] - s[1,1,1]"; "0" when zero.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    const char* symbol = B == Basis::schur ? "s" : "p";
    std::string out;
    for (const auto& [p, c] : terms_) {
      std::string coeff = rational_to_string(c < 0 ? Rational(-c) : c);
      out += out.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
      if (coeff != "1") out += coeff + "*";
      out += symbol;
      out += "[" + p.to_string() + "]";
    }
    return out;
  }

 private:
  void require_same_degree(const Expansion& other) const {
    if (degree_ != other.degree_)
      throw std::invalid_argument("expansion degree mismatch: " + std::to_string(degree_) +
                                  " vs " + std::to_string(other.degree_));
  }

  int degree_ = 0;
  std::map<Partition, Rational> terms_;
};

using SchurExpansion = Expansion<Basis::schur>;
using PowerExpansion = Expansion<Basis::power>;

}  // namespace jmkit
