#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "jmkit/characters.hpp"
#include "jmkit/evaluate.hpp"
#include "jmkit/group_algebra.hpp"
#include "jmkit/guard.hpp"
#include "jmkit/identities.hpp"
#include "jmkit/json_io.hpp"
#include "jmkit/symfunc.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct CommonOptions {
  std::string format;
  std::string output_path;
  bool stable = false;
  int jobs = 0;
  std::optional<int> guard;
};

void write_output(const CommonOptions& options, const std::string& payload) {
  if (options.output_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(options.output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output path: " + options.output_path);
  out << payload;
}

int run_char_table(int n, const std::string& ch_lambda, const CommonOptions& options) {
  std::ostringstream out;
  if (ch_lambda != "-") {
    jmkit::Partition lambda = jmkit::Partition::parse(ch_lambda);
    jmkit::check_guard(lambda.weight(), options.guard);
    jmkit::PowerExpansion ch = jmkit::characteristic(jmkit::irreducible_character(lambda));
    out << jmkit::expansion_to_json(ch).dump() << '\n';
    write_output(options, out.str());
    return kExitOk;
  }

  if (n < 1) throw std::invalid_argument("char-table requires --n >= 1");
  jmkit::CharacterTable table = jmkit::character_table(n, nullptr, options.guard);
  if (options.format == "csv")
    out << jmkit::table_to_csv(table);
  else if (options.format == "text" || options.format.empty())
    out << jmkit::table_to_text(table);
  else
    throw std::invalid_argument("char-table supports --format text|csv");
  write_output(options, out.str());
  return kExitOk;
}

int run_schur(const std::string& op, const std::string& lambda_text, std::optional<int> j,
              const CommonOptions& options) {
  jmkit::Partition lambda = jmkit::Partition::parse(lambda_text);
  jmkit::SchurExpansion result;
  if (op == "mult-p" || op == "skew-dp") {
    if (!j) throw std::invalid_argument("--j is required for " + op);
    if (*j < 1) throw std::invalid_argument("--j must be >= 1");
    const jmkit::SchurExpansion unit = jmkit::SchurExpansion::unit(lambda);
    result = op == "mult-p" ? jmkit::mult_p(unit, *j) : jmkit::skew_dp(unit, *j);
  } else if (op == "eq3") {
    result = jmkit::lhs_eq3(lambda);
  } else if (op == "eq6") {
    result = jmkit::lhs_eq6(lambda);
  } else if (op == "t3") {
    result = jmkit::lhs_t3(lambda);
  } else {
    throw std::invalid_argument("unknown --op: " + op);
  }

  std::ostringstream out;
  if (options.format == "text")
    out << result.to_string() << '\n';
  else if (options.format == "json" || options.format.empty())
    out << jmkit::expansion_to_json(result).dump() << '\n';
  else
    throw std::invalid_argument("schur supports --format json|text");
  write_output(options, out.str());
  return kExitOk;
}

int run_rimhooks(const std::string& lambda_text, int length, const std::string& mode,
                 const CommonOptions& options) {
  jmkit::Partition lambda = jmkit::Partition::parse(lambda_text);
  if (length < 1) throw std::invalid_argument("--length must be >= 1");
  std::vector<jmkit::HookMove> moves;
  if (mode == "remove")
    moves = jmkit::rimhook_removals(lambda, length);
  else if (mode == "add")
    moves = jmkit::rimhook_additions(lambda, length);
  else
    throw std::invalid_argument("--mode must be remove or add");

  std::ostringstream out;
  if (options.format == "json") {
    out << jmkit::hook_moves_to_json(moves).dump() << '\n';
  } else if (options.format == "text" || options.format.empty()) {
    for (const jmkit::HookMove& move : moves)
      out << move.shape.to_string() << '\t' << move.height << '\n';
  } else {
    throw std::invalid_argument("rimhooks supports --format text|json");
  }
  write_output(options, out.str());
  return kExitOk;
}

int run_verify(int n, const std::vector<std::string>& suite_names, const std::string& lambda_text,
               const std::string& type_text, const std::string& zeta_text,
               const CommonOptions& options) {
  if (n < 1) throw std::invalid_argument("verify requires --n >= 1");

  std::set<jmkit::IdentityKind> suites;
  for (const std::string& name : suite_names) {
    if (name == "all") {
      for (jmkit::IdentityKind kind : jmkit::all_identities()) suites.insert(kind);
      continue;
    }
    auto kind = jmkit::parse_identity(name);
    if (!kind) throw std::invalid_argument("unknown suite: " + name);
    suites.insert(*kind);
  }
  if (suites.empty()) throw std::invalid_argument("no suites selected");

  jmkit::SweepOptions sweep_options;
  sweep_options.jobs = options.jobs;
  sweep_options.guard_override = options.guard;
  if (lambda_text != "-") sweep_options.lambda_filter = jmkit::Partition::parse(lambda_text);
  if (type_text != "-") sweep_options.type_filter = jmkit::Partition::parse(type_text);
  if (zeta_text != "-") sweep_options.zeta_filter = jmkit::Partition::parse(zeta_text);

  const auto start = std::chrono::steady_clock::now();
  std::vector<jmkit::VerificationRecord> records = jmkit::sweep(n, suites, sweep_options);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  std::size_t failures = 0;
  for (const auto& record : records)
    if (!record.ok) ++failures;

  std::ostringstream out;
  const bool include_elapsed = !options.stable;
  if (options.format == "text") {
    for (const auto& record : records) {
      out << jmkit::identity_name(record.identity) << " n=" << record.n;
      if (record.lambda) out << " lambda=[" << record.lambda->to_string() << "]";
      if (record.type) out << " type=[" << record.type->to_string() << "]";
      if (record.zeta) out << " zeta=[" << record.zeta->to_string() << "]";
      if (record.j) out << " j=" << *record.j;
      auto side = [](const std::variant<std::string, jmkit::SchurExpansion>& v) {
        if (const auto* s = std::get_if<std::string>(&v)) return *s;
        return std::get<jmkit::SchurExpansion>(v).to_string();
      };
      out << " lhs=" << side(record.lhs) << " rhs=" << side(record.rhs)
          << (record.ok ? " ok" : " FAIL") << '\n';
    }
    out << "records=" << records.size() << " failures=" << failures;
    if (include_elapsed) out << " elapsed_ms=" << elapsed.count();
    out << '\n';
  } else if (options.format == "json" || options.format.empty()) {
    for (const auto& record : records)
      out << jmkit::record_to_json(record, include_elapsed).dump() << '\n';
    jmkit::Json summary;
    summary["records"] = records.size();
    summary["failures"] = failures;
    summary["first_failure"] =
        failures > 0 ? jmkit::record_to_json(records.front(), include_elapsed) : jmkit::Json(nullptr);
    if (include_elapsed) summary["elapsed_ms"] = elapsed.count();
    out << summary.dump() << '\n';
  } else {
    throw std::invalid_argument("verify supports --format json|text");
  }
  write_output(options, out.str());
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification engine for symmetric group character identities"};
  app.require_subcommand(1);

  CommonOptions common;
  app.add_option("--format", common.format, "output format (subcommand dependent)");
  app.add_option("--output", common.output_path, "write output to a file instead of stdout");
  app.add_flag("--stable", common.stable, "strip timing fields for byte-stable output");
  app.add_option("--jobs", common.jobs, "worker threads for sweeps (default: all cores)");
  int guard_value = -1;
  app.add_option("--guard", guard_value, "override the size guard (default 14 or JMKIT_GUARD_N)");

  auto* cmd_table = app.add_subcommand("char-table", "print the character table of S_n");
  int table_n = 0;
  std::string ch_lambda = "-";
  cmd_table->add_option("--n", table_n, "the n in S_n");
  cmd_table->add_option("--ch", ch_lambda,
                        "print the characteristic-map image of chi^lambda instead (JSON)");

  auto* cmd_schur = app.add_subcommand("schur", "apply operators in the Schur basis");
  std::string schur_op;
  std::string schur_lambda;
  int schur_j = 0;
  cmd_schur->add_option("--op", schur_op, "mult-p | skew-dp | eq3 | eq6 | t3")->required();
  cmd_schur->add_option("--lambda", schur_lambda, "partition, e.g. \"3,3,2\" (\"\" for empty)");
  auto* j_option = cmd_schur->add_option("--j", schur_j, "rimhook length (mult-p, skew-dp)");

  auto* cmd_verify = app.add_subcommand("verify", "run identity sweeps and stream records");
  int verify_n = 0;
  std::vector<std::string> suite_names;
  std::string verify_lambda = "-", verify_type = "-", verify_zeta = "-";
  cmd_verify->add_option("--suite", suite_names, "t1 eq2 t2 t3 eq8 eq9 eq3 eq4 eq6 lemma-adj pair-cancel all")
      ->required();
  cmd_verify->add_option("--n", verify_n, "sweep size")->required();
  cmd_verify->add_option("--lambda", verify_lambda, "restrict to one lambda");
  cmd_verify->add_option("--type", verify_type, "restrict to one cycle type");
  cmd_verify->add_option("--zeta", verify_zeta, "restrict to one zeta");

  auto* cmd_rimhooks = app.add_subcommand("rimhooks", "list rimhook removals or additions");
  std::string hooks_lambda;
  int hooks_length = 0;
  std::string hooks_mode = "remove";
  cmd_rimhooks->add_option("--lambda", hooks_lambda, "partition");
  cmd_rimhooks->add_option("--length", hooks_length, "rimhook length")->required();
  cmd_rimhooks->add_option("--mode", hooks_mode, "remove | add");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (guard_value >= 1) common.guard = guard_value;

  try {
    if (cmd_table->parsed()) return run_char_table(table_n, ch_lambda, common);
    if (cmd_schur->parsed())
      return run_schur(schur_op, schur_lambda,
                       j_option->count() > 0 ? std::optional<int>(schur_j) : std::nullopt, common);
    if (cmd_verify->parsed())
      return run_verify(verify_n, suite_names, verify_lambda, verify_type, verify_zeta, common);
    if (cmd_rimhooks->parsed()) return run_rimhooks(hooks_lambda, hooks_length, hooks_mode, common);
    std::cerr << "no subcommand given\n";
    return kExitUsage;
  } catch (const jmkit::GuardExceeded& e) {
    std::cerr << "guard: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
