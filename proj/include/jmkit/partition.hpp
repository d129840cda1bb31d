#pragma once

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jmkit {

// Weakly decreasing sequence of strictly positive parts. The empty sequence
// is the unique partition of 0. Canonical form (no trailing zeros) is an
// invariant, so equality is plain sequence equality and operator<=> gives
// the lexicographic order used everywhere for deterministic output.
class Partition {
 public:
  Partition() = default;

  // Requires parts already weakly decreasing and positive.
  explicit Partition(std::vector<int> parts);

  // Sorts descending and drops zeros; negative parts are rejected.
  static Partition from_unsorted(std::vector<int> parts);

  // Text form: comma-separated parts, e.g. "4,3,2"; "" is the empty
  // partition. Exponent tokens like "3,1^2" are accepted on input.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }

  // 1-based row length; 0 outside the diagram.
  int row_length(int row) const;
  // 1-based column length (number of rows of length >= col).
  int column_length(int col) const;

  bool contains(const Partition& inner) const;

  // (part size, multiplicity) pairs, largest part first.
  std::vector<std::pair<int, int>> multiplicities() const;

  // Copy with the part at the given index removed (0-based).
  Partition without_part(int index) const;
  // Copy with one extra part inserted, keeping the order canonical.
  Partition with_part(int part) const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

// 1-based (row, col) coordinate, rows top-down.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
  std::string to_string() const;  // "(row,col)"
};

inline int content(const Cell& cell) { return cell.col - cell.row; }

// Difference of two nested Ferrers diagrams with its derived classification.
// height is rows occupied minus one, present only for non-empty shapes.
struct SkewShape {
  Partition outer;
  Partition inner;
  int length = 0;
  bool is_rimhook = false;
  std::optional<int> height;
};

// Unordered pair of cells whose joint removal leaves a partition of n-2.
// pair_content follows the domino orientation: the left cell's content for a
// horizontal domino, minus the top cell's content for a vertical one, and -1
// for two non-contiguous corners.
struct CellPair {
  enum class Kind { horizontal_domino, vertical_domino, disjoint_corners };
  Cell first;
  Cell second;
  Kind kind = Kind::disjoint_corners;
  int pair_content = 0;
  Partition remaining;  // the partition left after removing both cells
};

std::string_view to_string(CellPair::Kind kind);

// All cells of the diagram, row-major.
std::vector<Cell> cells_of(const Partition& lambda);

// Cells whose removal leaves a partition of n-1, by increasing row.
std::vector<Cell> corner_cells(const Partition& lambda);

// Cells whose addition yields a partition of n+1, by increasing row.
std::vector<Cell> addable_cells(const Partition& lambda);

// Throws std::invalid_argument unless inner is contained in outer.
SkewShape classify_skew(const Partition& outer, const Partition& inner);

struct HookMove {
  Partition shape;  // the smaller (removal) or larger (addition) partition
  int height = 0;
  friend bool operator==(const HookMove&, const HookMove&) = default;
};

// All ways to remove (resp. add) a rimhook of the given length, each with the
// height of the removed (added) strip. Results are sorted lexicographically
// by shape. length must be >= 1.
std::vector<HookMove> rimhook_removals(const Partition& lambda, int length);
std::vector<HookMove> rimhook_additions(const Partition& lambda, int length);

// All two-cell removals: removable dominoes plus unordered pairs of distinct
// corner cells. Requires weight >= 2.
std::vector<CellPair> removable_pairs(const Partition& lambda);

// All partitions of n in lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace jmkit
