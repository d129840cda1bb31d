#include "jmkit/json_io.hpp"

#include <algorithm>
#include <sstream>

namespace jmkit {

namespace {

template <Basis B>
Json expansion_json(const Expansion<B>& f) {
  Json out;
  out["basis"] = std::string(basis_name(B));
  out["degree"] = f.degree();
  Json terms = Json::array();
  for (const auto& [p, c] : f.terms()) {  // map order is the lexicographic order
    Json term;
    term["partition"] = p.parts();
    term["coeff"] = rational_to_string(c);
    terms.push_back(std::move(term));
  }
  out["terms"] = std::move(terms);
  return out;
}

std::string csv_quote(const std::string& field) { return "\"" + field + "\""; }

}  // namespace

Json partition_to_json(const Partition& p) { return Json(p.parts()); }

Json expansion_to_json(const SchurExpansion& f) { return expansion_json(f); }
Json expansion_to_json(const PowerExpansion& f) { return expansion_json(f); }

Json record_to_json(const VerificationRecord& record, bool include_elapsed) {
  Json out;
  out["identity"] = std::string(identity_name(record.identity));
  out["n"] = record.n;
  if (record.lambda) out["lambda"] = record.lambda->parts();
  if (record.type) out["type"] = record.type->parts();
  if (record.zeta) out["zeta"] = record.zeta->parts();
  if (record.j) out["j"] = *record.j;
  auto side = [](const std::variant<std::string, SchurExpansion>& value) -> Json {
    if (const auto* text = std::get_if<std::string>(&value)) return *text;
    return expansion_to_json(std::get<SchurExpansion>(value));
  };
  out["lhs"] = side(record.lhs);
  out["rhs"] = side(record.rhs);
  out["ok"] = record.ok;
  if (record.note) out["note"] = *record.note;
  if (include_elapsed)
    out["elapsed_ms"] =
        std::chrono::duration_cast<std::chrono::milliseconds>(record.elapsed).count();
  return out;
}

Json hook_moves_to_json(const std::vector<HookMove>& moves) {
  Json out = Json::array();
  for (const HookMove& move : moves) {
    Json entry;
    entry["partition"] = move.shape.parts();
    entry["height"] = move.height;
    out.push_back(std::move(entry));
  }
  return out;
}

std::string table_to_csv(const CharacterTable& table) {
  std::ostringstream out;
  out << csv_quote("lambda\\mu");
  for (const Partition& mu : table.mus) out << ',' << csv_quote(mu.to_string());
  out << '\n';
  out << csv_quote("classsize");
  for (long long size : table.class_sizes) out << ',' << size;
  out << '\n';
  for (std::size_t row = 0; row < table.lambdas.size(); ++row) {
    out << csv_quote(table.lambdas[row].to_string());
    for (long long value : table.values[row]) out << ',' << value;
    out << '\n';
  }
  return out.str();
}

std::string table_to_text(const CharacterTable& table) {
  std::vector<std::string> row_labels;
  row_labels.reserve(table.lambdas.size());
  for (const Partition& lambda : table.lambdas) row_labels.push_back("(" + lambda.to_string() + ")");

  std::vector<std::vector<std::string>> grid;
  std::vector<std::string> header{"lambda\\mu"};
  for (const Partition& mu : table.mus) header.push_back("(" + mu.to_string() + ")");
  grid.push_back(header);
  std::vector<std::string> sizes{"classsize"};
  for (long long size : table.class_sizes) sizes.push_back(std::to_string(size));
  grid.push_back(sizes);
  for (std::size_t row = 0; row < table.lambdas.size(); ++row) {
    std::vector<std::string> line{row_labels[row]};
    for (long long value : table.values[row]) line.push_back(std::to_string(value));
    grid.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(grid[0].size(), 0);
  for (const auto& line : grid)
    for (std::size_t col = 0; col < line.size(); ++col)
      widths[col] = std::max(widths[col], line[col].size());

  std::ostringstream out;
  for (const auto& line : grid) {
    for (std::size_t col = 0; col < line.size(); ++col) {
      if (col) out << "  ";
      out << std::string(widths[col] - line[col].size(), ' ') << line[col];
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace jmkit
