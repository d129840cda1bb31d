#include "jmkit/partition.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace jmkit {

namespace {

int parse_int(std::string_view token) {
  int value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw std::invalid_argument("malformed integer in partition: '" + std::string(token) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    std::string_view token = trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (token.empty()) throw std::invalid_argument("empty component in partition text");
    std::size_t caret = token.find('^');
    if (caret == std::string_view::npos) {
      parts.push_back(parse_int(token));
    } else {
      int part = parse_int(trim(token.substr(0, caret)));
      int mult = parse_int(trim(token.substr(caret + 1)));
      if (mult < 0) throw std::invalid_argument("negative multiplicity in partition text");
      for (int m = 0; m < mult; ++m) parts.push_back(part);
    }
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return from_unsorted(std::move(parts));
}

int Partition::row_length(int row) const {
  if (row < 1 || row > rows()) return 0;
  return parts_[row - 1];
}

int Partition::column_length(int col) const {
  int count = 0;
  for (int part : parts_) {
    if (part >= col)
      ++count;
    else
      break;
  }
  return count;
}

bool Partition::contains(const Partition& inner) const {
  if (inner.rows() > rows()) return false;
  for (int i = 0; i < inner.rows(); ++i)
    if (inner.parts_[i] > parts_[i]) return false;
  return true;
}

std::vector<std::pair<int, int>> Partition::multiplicities() const {
  std::vector<std::pair<int, int>> result;
  for (int part : parts_) {
    if (!result.empty() && result.back().first == part)
      ++result.back().second;
    else
      result.emplace_back(part, 1);
  }
  return result;
}

Partition Partition::without_part(int index) const {
  if (index < 0 || index >= rows()) throw std::invalid_argument("part index out of range");
  std::vector<int> parts = parts_;
  parts.erase(parts.begin() + index);
  return Partition(std::move(parts));
}

Partition Partition::with_part(int part) const {
  if (part <= 0) throw std::invalid_argument("partition parts must be positive");
  std::vector<int> parts = parts_;
  auto at = std::lower_bound(parts.begin(), parts.end(), part, std::greater<>());
  parts.insert(at, part);
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

std::string Cell::to_string() const {
  return "(" + std::to_string(row) + "," + std::to_string(col) + ")";
}

std::string_view to_string(CellPair::Kind kind) {
  switch (kind) {
    case CellPair::Kind::horizontal_domino: return "horizontal-domino";
    case CellPair::Kind::vertical_domino: return "vertical-domino";
    case CellPair::Kind::disjoint_corners: return "disjoint-corners";
  }
  return "?";
}

std::vector<Cell> cells_of(const Partition& lambda) {
  std::vector<Cell> cells;
  cells.reserve(static_cast<std::size_t>(lambda.weight()));
  for (int row = 1; row <= lambda.rows(); ++row)
    for (int col = 1; col <= lambda.row_length(row); ++col) cells.push_back({row, col});
  return cells;
}

std::vector<Cell> corner_cells(const Partition& lambda) {
  std::vector<Cell> corners;
  const auto& parts = lambda.parts();
  for (int i = 0; i < lambda.rows(); ++i) {
    bool corner = (i + 1 == lambda.rows()) || parts[i] > parts[i + 1];
    if (corner) corners.push_back({i + 1, parts[i]});
  }
  return corners;
}

std::vector<Cell> addable_cells(const Partition& lambda) {
  std::vector<Cell> cells;
  const auto& parts = lambda.parts();
  for (int i = 0; i < lambda.rows(); ++i) {
    bool addable = (i == 0) || parts[i] < parts[i - 1];
    if (addable) cells.push_back({i + 1, parts[i] + 1});
  }
  cells.push_back({lambda.rows() + 1, 1});
  return cells;
}

SkewShape classify_skew(const Partition& outer, const Partition& inner) {
  if (!outer.contains(inner))
    throw std::invalid_argument("classify_skew: inner partition not contained in outer");
  SkewShape shape;
  shape.outer = outer;
  shape.inner = inner;
  shape.length = outer.weight() - inner.weight();
  if (shape.length == 0) {
    shape.is_rimhook = false;
    return shape;
  }

  std::set<Cell> cells;
  std::set<int> rows_occupied;
  for (int row = 1; row <= outer.rows(); ++row) {
    for (int col = inner.row_length(row) + 1; col <= outer.row_length(row); ++col) {
      cells.insert({row, col});
      rows_occupied.insert(row);
    }
  }
  shape.height = static_cast<int>(rows_occupied.size()) - 1;

  // 2x2 square test.
  bool has_square = false;
  for (const Cell& c : cells) {
    if (cells.count({c.row, c.col + 1}) && cells.count({c.row + 1, c.col}) &&
        cells.count({c.row + 1, c.col + 1})) {
      has_square = true;
      break;
    }
  }

  // Edge connectivity by flood fill.
  bool connected = true;
  if (!has_square) {
    std::set<Cell> seen;
    std::vector<Cell> stack{*cells.begin()};
    seen.insert(*cells.begin());
    while (!stack.empty()) {
      Cell c = stack.back();
      stack.pop_back();
      for (Cell next : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col}, Cell{c.row, c.col - 1},
                        Cell{c.row, c.col + 1}}) {
        if (cells.count(next) && !seen.count(next)) {
          seen.insert(next);
          stack.push_back(next);
        }
      }
    }
    connected = seen.size() == cells.size();
  }
  shape.is_rimhook = connected && !has_square;
  return shape;
}

namespace {

// First-column hook lengths with a fixed number of slots: beta[i] =
// part(i+1) + slots - 1 - i, strictly decreasing. Removing a rimhook of
// length L is lowering one beta by L onto a free value; adding is raising.
// The height of the strip equals the number of betas jumped over.
std::vector<int> beta_numbers(const Partition& lambda, int slots) {
  std::vector<int> beta(static_cast<std::size_t>(slots));
  for (int i = 0; i < slots; ++i) beta[static_cast<std::size_t>(i)] = lambda.row_length(i + 1) + slots - 1 - i;
  return beta;
}

Partition partition_from_betas(std::vector<int> betas, int slots) {
  std::sort(betas.begin(), betas.end(), std::greater<>());
  std::vector<int> parts;
  parts.reserve(betas.size());
  for (int i = 0; i < slots; ++i) {
    int part = betas[static_cast<std::size_t>(i)] - (slots - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

int betas_strictly_between(const std::vector<int>& betas, int lo, int hi) {
  int count = 0;
  for (int b : betas)
    if (b > lo && b < hi) ++count;
  return count;
}

}  // namespace

std::vector<HookMove> rimhook_removals(const Partition& lambda, int length) {
  if (length < 1) throw std::invalid_argument("rimhook length must be >= 1");
  const int slots = lambda.rows();
  std::vector<int> betas = beta_numbers(lambda, slots);
  std::vector<HookMove> moves;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    int target = betas[i] - length;
    if (target < 0) continue;
    if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
    std::vector<int> next = betas;
    next[i] = target;
    moves.push_back({partition_from_betas(std::move(next), slots),
                     betas_strictly_between(betas, target, betas[i])});
  }
  std::sort(moves.begin(), moves.end(),
            [](const HookMove& a, const HookMove& b) { return a.shape < b.shape; });
  return moves;
}

std::vector<HookMove> rimhook_additions(const Partition& lambda, int length) {
  if (length < 1) throw std::invalid_argument("rimhook length must be >= 1");
  const int slots = lambda.rows() + length;  // enough room for a vertical strip below
  std::vector<int> betas = beta_numbers(lambda, slots);
  std::vector<HookMove> moves;
  for (std::size_t i = 0; i < betas.size(); ++i) {
    int target = betas[i] + length;
    if (std::find(betas.begin(), betas.end(), target) != betas.end()) continue;
    std::vector<int> next = betas;
    next[i] = target;
    moves.push_back({partition_from_betas(std::move(next), slots),
                     betas_strictly_between(betas, betas[i], target)});
  }
  std::sort(moves.begin(), moves.end(),
            [](const HookMove& a, const HookMove& b) { return a.shape < b.shape; });
  return moves;
}

namespace {

// The two cells of lambda minus nu, for a two-cell difference.
std::vector<Cell> two_cell_difference(const Partition& lambda, const Partition& nu) {
  std::vector<Cell> cells;
  for (int row = 1; row <= lambda.rows(); ++row)
    for (int col = nu.row_length(row) + 1; col <= lambda.row_length(row); ++col)
      cells.push_back({row, col});
  return cells;
}

}  // namespace

std::vector<CellPair> removable_pairs(const Partition& lambda) {
  if (lambda.weight() < 2) throw std::invalid_argument("removable_pairs requires weight >= 2");
  std::vector<CellPair> pairs;

  for (const HookMove& move : rimhook_removals(lambda, 2)) {
    std::vector<Cell> cells = two_cell_difference(lambda, move.shape);
    std::sort(cells.begin(), cells.end());
    CellPair pair;
    pair.first = cells[0];
    pair.second = cells[1];
    pair.remaining = move.shape;
    if (move.height == 0) {
      pair.kind = CellPair::Kind::horizontal_domino;
      pair.pair_content = content(pair.first);  // leftmost cell
    } else {
      pair.kind = CellPair::Kind::vertical_domino;
      pair.pair_content = -content(pair.first);  // topmost cell
    }
    pairs.push_back(std::move(pair));
  }

  std::vector<Cell> corners = corner_cells(lambda);
  for (std::size_t i = 0; i < corners.size(); ++i) {
    for (std::size_t j = i + 1; j < corners.size(); ++j) {
      CellPair pair;
      pair.first = corners[i];
      pair.second = corners[j];
      pair.kind = CellPair::Kind::disjoint_corners;
      pair.pair_content = -1;
      std::vector<int> parts = lambda.parts();
      parts[static_cast<std::size_t>(corners[i].row - 1)] -= 1;
      parts[static_cast<std::size_t>(corners[j].row - 1)] -= 1;
      pair.remaining = Partition::from_unsorted(std::move(parts));
      pairs.push_back(std::move(pair));
    }
  }

  std::sort(pairs.begin(), pairs.end(), [](const CellPair& a, const CellPair& b) {
    return std::pair(a.first, a.second) < std::pair(b.first, b.second);
  });
  return pairs;
}

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of requires n >= 0");
  std::vector<Partition> result;
  std::vector<int> current;
  auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      result.push_back(Partition(current));
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, n, n == 0 ? 1 : n);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace jmkit
