#include "jmkit/identities.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "jmkit/group_algebra.hpp"
#include "jmkit/guard.hpp"
#include "jmkit/symfunc.hpp"

namespace jmkit {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::microseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - start);
}

std::string scalar(long long value) { return std::to_string(value); }

// The corner cell x with lambda - x == zeta, when one exists.
std::optional<Cell> corner_for(const Partition& lambda, const Partition& zeta) {
  for (const Cell& x : corner_cells(lambda)) {
    std::vector<int> parts = lambda.parts();
    parts[static_cast<std::size_t>(x.row - 1)] -= 1;
    if (Partition::from_unsorted(std::move(parts)) == zeta) return x;
  }
  return std::nullopt;
}

Partition remove_corner(const Partition& lambda, const Cell& x) {
  std::vector<int> parts = lambda.parts();
  parts[static_cast<std::size_t>(x.row - 1)] -= 1;
  return Partition::from_unsorted(std::move(parts));
}

Partition add_cell(const Partition& lambda, const Cell& x) {
  std::vector<int> parts = lambda.parts();
  if (x.row <= lambda.rows())
    parts[static_cast<std::size_t>(x.row - 1)] += 1;
  else
    parts.push_back(1);
  return Partition(std::move(parts));
}

}  // namespace

std::string_view identity_name(IdentityKind kind) {
  switch (kind) {
    case IdentityKind::T1: return "T1";
    case IdentityKind::EQ2: return "EQ2";
    case IdentityKind::T2: return "T2";
    case IdentityKind::T3: return "T3";
    case IdentityKind::EQ8: return "EQ8";
    case IdentityKind::EQ9: return "EQ9";
    case IdentityKind::EQ3: return "EQ3";
    case IdentityKind::EQ4: return "EQ4";
    case IdentityKind::EQ6: return "EQ6";
    case IdentityKind::LEMMA_ADJ: return "LEMMA_ADJ";
    case IdentityKind::PAIR_CANCEL: return "PAIR_CANCEL";
  }
  return "?";
}

std::optional<IdentityKind> parse_identity(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  static const std::map<std::string, IdentityKind, std::less<>> table = {
      {"t1", IdentityKind::T1},
      {"eq2", IdentityKind::EQ2},
      {"t2", IdentityKind::T2},
      {"t3", IdentityKind::T3},
      {"eq8", IdentityKind::EQ8},
      {"eq9", IdentityKind::EQ9},
      {"eq3", IdentityKind::EQ3},
      {"eq4", IdentityKind::EQ4},
      {"eq6", IdentityKind::EQ6},
      {"lemma-adj", IdentityKind::LEMMA_ADJ},
      {"lemma_adj", IdentityKind::LEMMA_ADJ},
      {"pair-cancel", IdentityKind::PAIR_CANCEL},
      {"pair_cancel", IdentityKind::PAIR_CANCEL},
  };
  auto it = table.find(lower);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

const std::vector<IdentityKind>& all_identities() {
  static const std::vector<IdentityKind> all = {
      IdentityKind::T1,  IdentityKind::EQ2, IdentityKind::T2,
      IdentityKind::T3,  IdentityKind::EQ8, IdentityKind::EQ9,
      IdentityKind::EQ3, IdentityKind::EQ4, IdentityKind::EQ6,
      IdentityKind::LEMMA_ADJ, IdentityKind::PAIR_CANCEL,
  };
  return all;
}

std::vector<CancellationWay> cancellation_ways(const Partition& lambda, const Partition& zeta) {
  if (zeta.weight() != lambda.weight() - 1)
    throw std::invalid_argument("cancellation_ways: weight(zeta) must be weight(lambda) - 1");

  const std::set<Cell> lambda_cells = [&] {
    auto v = cells_of(lambda);
    return std::set<Cell>(v.begin(), v.end());
  }();
  const std::set<Cell> zeta_cells = [&] {
    auto v = cells_of(zeta);
    return std::set<Cell>(v.begin(), v.end());
  }();

  std::vector<CancellationWay> ways;
  for (int j = 1; j + 1 <= lambda.weight(); ++j) {
    for (const HookMove& removal : rimhook_removals(lambda, j + 1)) {
      for (const HookMove& addition : rimhook_additions(removal.shape, j)) {
        if (addition.shape != zeta) continue;
        CancellationWay way;
        way.j = j;
        way.nu = removal.shape;
        way.sign_removed = removal.height % 2 == 0 ? 1 : -1;
        way.sign_added = addition.height % 2 == 0 ? 1 : -1;

        const std::set<Cell> nu_cells = [&] {
          auto v = cells_of(removal.shape);
          return std::set<Cell>(v.begin(), v.end());
        }();
        std::set<int> deleted, added, replaced;
        for (const Cell& c : lambda_cells) {
          if (nu_cells.count(c)) continue;  // not removed
          if (zeta_cells.count(c))
            replaced.insert(c.row);
          else
            deleted.insert(c.row);
        }
        for (const Cell& c : zeta_cells) {
          if (nu_cells.count(c)) continue;  // not added
          if (!lambda_cells.count(c)) added.insert(c.row);
        }
        way.deleted_rows = static_cast<int>(deleted.size());
        way.added_rows = static_cast<int>(added.size());
        way.replaced_rows = static_cast<int>(replaced.size());
        ways.push_back(std::move(way));
      }
    }
  }
  std::sort(ways.begin(), ways.end(), [](const CancellationWay& a, const CancellationWay& b) {
    return std::pair(a.j, a.nu) < std::pair(b.j, b.nu);
  });
  return ways;
}

CancellationReport analyze_pair_cancellation(const Partition& lambda, const Partition& zeta) {
  if (corner_for(lambda, zeta))
    throw std::invalid_argument("analyze_pair_cancellation: zeta is a corner removal of lambda");
  CancellationReport report;
  report.lambda = lambda;
  report.zeta = zeta;
  report.ways = cancellation_ways(lambda, zeta);
  if (!report.ways.empty()) {
    if (report.ways.size() != 2 || report.ways[0].net_sign() != -report.ways[1].net_sign())
      throw std::logic_error("pair cancellation: expected exactly two ways of opposite sign");
  }
  return report;
}

VerificationRecord verify_t1(const Partition& lambda, const Partition& sigma_bar_type,
                             CharacterCache& cache) {
  const auto start = Clock::now();
  const int n = lambda.weight();
  if (sigma_bar_type.weight() != n - 1)
    throw std::invalid_argument("verify_t1: weight(type) must be weight(lambda) - 1");

  const Permutation sigma = Permutation::from_cycle_type(sigma_bar_type).extended(n);
  const long long lhs = eval_class_function(build_R(sigma), lambda, 0, cache);

  long long rhs = 0;
  for (const Cell& x : corner_cells(lambda))
    rhs += static_cast<long long>(content(x)) * cache.chi(remove_corner(lambda, x), sigma_bar_type);

  VerificationRecord record;
  record.identity = IdentityKind::T1;
  record.n = n;
  record.lambda = lambda;
  record.type = sigma_bar_type;
  record.lhs = scalar(lhs);
  record.rhs = scalar(rhs);
  record.ok = lhs == rhs;
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_eq2(const Partition& lambda, const Partition& sigma_bar_type,
                              CharacterCache& cache) {
  const auto start = Clock::now();
  const int n = lambda.weight();
  if (sigma_bar_type.weight() != n - 1)
    throw std::invalid_argument("verify_eq2: weight(type) must be weight(lambda) - 1");

  const Permutation sigma = Permutation::from_cycle_type(sigma_bar_type).extended(n);
  long long lhs = eval_class_function(build_R(sigma), lambda, 0, cache);
  lhs += cache.chi(lambda, sigma_bar_type.with_part(1));

  long long rhs = 0;
  for (const Cell& x : corner_cells(lambda))
    rhs += (1 + static_cast<long long>(content(x))) *
           cache.chi(remove_corner(lambda, x), sigma_bar_type);

  VerificationRecord record;
  record.identity = IdentityKind::EQ2;
  record.n = n;
  record.lambda = lambda;
  record.type = sigma_bar_type;
  record.lhs = scalar(lhs);
  record.rhs = scalar(rhs);
  record.ok = lhs == rhs;
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_t2(const Partition& lambda, const Partition& sigma_bar_type,
                             CharacterCache& cache) {
  const auto start = Clock::now();
  const int n = lambda.weight();
  if (sigma_bar_type.weight() != n - 2)
    throw std::invalid_argument("verify_t2: weight(type) must be weight(lambda) - 2");

  const Permutation sigma = Permutation::from_cycle_type(sigma_bar_type).extended(n);
  const long long lhs = eval_class_function(build_T(sigma), lambda, 0, cache);

  long long rhs = 0;
  for (const CellPair& pair : removable_pairs(lambda))
    rhs += static_cast<long long>(pair.pair_content) * cache.chi(pair.remaining, sigma_bar_type);

  VerificationRecord record;
  record.identity = IdentityKind::T2;
  record.n = n;
  record.lambda = lambda;
  record.type = sigma_bar_type;
  record.lhs = scalar(lhs);
  record.rhs = scalar(rhs);
  record.ok = lhs == rhs;
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_t3(const Partition& lambda, const Partition& sigma_type,
                             CharacterCache& cache) {
  const auto start = Clock::now();
  const int n = sigma_type.weight();
  if (lambda.weight() + 1 != n)
    throw std::invalid_argument("verify_t3: weight(lambda) + 1 must be weight(type)");

  const Permutation sigma = Permutation::from_cycle_type(sigma_type);
  const long long lhs = eval_class_function(build_V(sigma), lambda, 1, cache);

  long long rhs = 0;
  for (const Cell& x : addable_cells(lambda))
    rhs += static_cast<long long>(content(x)) * cache.chi(add_cell(lambda, x), sigma_type);

  VerificationRecord record;
  record.identity = IdentityKind::T3;
  record.n = n;
  record.lambda = lambda;
  record.type = sigma_type;
  record.lhs = scalar(lhs);
  record.rhs = scalar(rhs);
  record.ok = lhs == rhs;
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_eq8(const Partition& lambda, const Partition& sigma_type,
                              CharacterCache& cache) {
  const auto start = Clock::now();
  const int n = sigma_type.weight();
  if (lambda.weight() + 1 != n)
    throw std::invalid_argument("verify_eq8: weight(lambda) + 1 must be weight(type)");

  const Permutation sigma = Permutation::from_cycle_type(sigma_type);
  long long lhs = eval_class_function(build_V(sigma), lambda, 1, cache);

  // Each fixed point i makes sigma * (i sigma(i)) = sigma itself, read as an
  // element of S_{n-1} by dropping one fixed point from the type.
  const int fixed = sigma.fixed_point_count();
  std::optional<std::string> note;
  if (fixed > 0) {
    std::vector<int> parts = sigma_type.parts();
    parts.pop_back();  // smallest part; it is 1 when fixed points exist
    lhs += static_cast<long long>(fixed) * cache.chi(lambda, Partition(std::move(parts)));
    note = "fixed-point terms: " + std::to_string(fixed);
  }

  long long rhs = 0;
  for (const Cell& x : addable_cells(lambda))
    rhs += (1 + static_cast<long long>(content(x))) * cache.chi(add_cell(lambda, x), sigma_type);

  VerificationRecord record;
  record.identity = IdentityKind::EQ8;
  record.n = n;
  record.lambda = lambda;
  record.type = sigma_type;
  record.lhs = scalar(lhs);
  record.rhs = scalar(rhs);
  record.ok = lhs == rhs;
  record.note = note;
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_eq9(const Partition& lambda, CharacterCache& cache) {
  const auto start = Clock::now();
  long long lhs = 0;
  for (const Cell& x : addable_cells(lambda))
    lhs += static_cast<long long>(content(x)) * dimension(add_cell(lambda, x), cache);

  VerificationRecord record;
  record.identity = IdentityKind::EQ9;
  record.n = lambda.weight() + 1;
  record.lambda = lambda;
  record.lhs = scalar(lhs);
  record.rhs = scalar(0);
  record.ok = lhs == 0;
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_eq3(const Partition& lambda) {
  const auto start = Clock::now();
  SchurExpansion lhs = lhs_eq3(lambda);
  SchurExpansion rhs = rhs_eq3(lambda);
  VerificationRecord record;
  record.identity = IdentityKind::EQ3;
  record.n = lambda.weight();
  record.lambda = lambda;
  record.ok = lhs == rhs;
  record.lhs = std::move(lhs);
  record.rhs = std::move(rhs);
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_eq6(const Partition& lambda) {
  const auto start = Clock::now();
  SchurExpansion lhs = lhs_eq6(lambda);
  SchurExpansion rhs = rhs_eq6(lambda);
  VerificationRecord record;
  record.identity = IdentityKind::EQ6;
  record.n = lambda.weight();
  record.lambda = lambda;
  record.ok = lhs == rhs;
  record.lhs = std::move(lhs);
  record.rhs = std::move(rhs);
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_t3_operator(const Partition& lambda) {
  const auto start = Clock::now();
  SchurExpansion lhs = lhs_t3(lambda);
  SchurExpansion rhs = rhs_t3(lambda);
  VerificationRecord record;
  record.identity = IdentityKind::T3;
  record.n = lambda.weight();
  record.lambda = lambda;
  record.ok = lhs == rhs;
  record.lhs = std::move(lhs);
  record.rhs = std::move(rhs);
  record.note = "operator form";
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_eq4_coefficient(const Partition& lambda, const Partition& zeta) {
  const auto start = Clock::now();
  long long lhs = 0;
  for (const CancellationWay& way : cancellation_ways(lambda, zeta)) lhs += way.net_sign();

  long long rhs = 0;
  if (auto x = corner_for(lambda, zeta)) rhs = content(*x);

  VerificationRecord record;
  record.identity = IdentityKind::EQ4;
  record.n = lambda.weight();
  record.lambda = lambda;
  record.zeta = zeta;
  record.lhs = scalar(lhs);
  record.rhs = scalar(rhs);
  record.ok = lhs == rhs;
  record.elapsed = since(start);
  return record;
}

VerificationRecord verify_lemma_adjoint(int j, const Partition& beta) {
  const auto start = Clock::now();
  const int n = beta.weight();
  const int low = n >= j ? n - j : 0;

  // Column of the pairing read through mult_p, against the removal route.
  SchurExpansion via_mult(low);
  for (const Partition& alpha : partitions_of(low)) {
    Rational coeff = mult_p(SchurExpansion::unit(alpha), j).coefficient(beta);
    via_mult.add_term(alpha, coeff);
  }
  SchurExpansion via_skew = skew_dp(SchurExpansion::unit(beta), j);

  VerificationRecord record;
  record.identity = IdentityKind::LEMMA_ADJ;
  record.n = n;
  record.lambda = beta;
  record.j = j;
  record.ok = via_mult == via_skew;
  record.lhs = std::move(via_mult);
  record.rhs = std::move(via_skew);
  record.elapsed = since(start);
  return record;
}

std::optional<VerificationRecord> verify_pair_cancellation(const Partition& lambda,
                                                           const Partition& zeta) {
  const auto start = Clock::now();
  const std::vector<CancellationWay> ways = cancellation_ways(lambda, zeta);
  if (ways.empty()) return std::nullopt;

  VerificationRecord record;
  record.identity = IdentityKind::PAIR_CANCEL;
  record.n = lambda.weight();
  record.lambda = lambda;
  record.zeta = zeta;

  if (auto x = corner_for(lambda, zeta)) {
    long long net = 0;
    for (const CancellationWay& way : ways) net += way.net_sign();
    record.lhs = scalar(net);
    record.rhs = scalar(content(*x));
    record.ok = net == content(*x);
    record.note = "corner case, " + std::to_string(ways.size()) + " ways";
  } else {
    std::string detail;
    for (const CancellationWay& way : ways) {
      if (!detail.empty()) detail += "; ";
      detail += "j=" + std::to_string(way.j) + " nu=[" + way.nu.to_string() +
                "] d=" + std::to_string(way.deleted_rows) + " a=" + std::to_string(way.added_rows) +
                " r=" + std::to_string(way.replaced_rows) +
                " sign=" + std::to_string(way.net_sign());
    }
    record.note = detail;
    record.ok = ways.size() == 2 && ways[0].net_sign() == -ways[1].net_sign();
    record.lhs = scalar(ways[0].net_sign());
    record.rhs = scalar(ways.size() == 2 ? -ways[1].net_sign() : 0);
  }
  record.elapsed = since(start);
  return record;
}

namespace {

struct SweepTask {
  std::function<std::optional<VerificationRecord>()> run;
};

bool matches(const std::optional<Partition>& filter, const Partition& value) {
  return !filter || *filter == value;
}

}  // namespace

std::vector<VerificationRecord> sweep(int n, const std::set<IdentityKind>& suites,
                                      const SweepOptions& options) {
  if (n < 1) throw std::invalid_argument("sweep requires n >= 1");
  check_guard(n, options.guard_override);

  CharacterCache local_cache;
  CharacterCache& cache = options.cache ? *options.cache : local_cache;

  const std::vector<Partition> level_n = partitions_of(n);
  const std::vector<Partition> level_n1 = n >= 1 ? partitions_of(n - 1) : std::vector<Partition>{};
  const std::vector<Partition> level_n2 = n >= 2 ? partitions_of(n - 2) : std::vector<Partition>{};

  std::vector<SweepTask> tasks;
  for (IdentityKind kind : all_identities()) {
    if (!suites.count(kind)) continue;
    switch (kind) {
      case IdentityKind::T1:
      case IdentityKind::EQ2:
        for (const Partition& lambda : level_n) {
          if (!matches(options.lambda_filter, lambda)) continue;
          for (const Partition& type : level_n1) {
            if (!matches(options.type_filter, type)) continue;
            tasks.push_back({[&cache, kind, lambda, type] {
              return std::optional(kind == IdentityKind::T1 ? verify_t1(lambda, type, cache)
                                                            : verify_eq2(lambda, type, cache));
            }});
          }
        }
        break;
      case IdentityKind::T2:
        if (n < 2) break;
        for (const Partition& lambda : level_n) {
          if (!matches(options.lambda_filter, lambda)) continue;
          for (const Partition& type : level_n2) {
            if (!matches(options.type_filter, type)) continue;
            tasks.push_back({[&cache, lambda, type] {
              return std::optional(verify_t2(lambda, type, cache));
            }});
          }
        }
        break;
      case IdentityKind::T3:
      case IdentityKind::EQ8:
        for (const Partition& lambda : level_n1) {
          if (!matches(options.lambda_filter, lambda)) continue;
          for (const Partition& type : level_n) {
            if (!matches(options.type_filter, type)) continue;
            tasks.push_back({[&cache, kind, lambda, type] {
              return std::optional(kind == IdentityKind::T3 ? verify_t3(lambda, type, cache)
                                                            : verify_eq8(lambda, type, cache));
            }});
          }
        }
        break;
      case IdentityKind::EQ9:
        for (const Partition& lambda : level_n1) {
          if (!matches(options.lambda_filter, lambda)) continue;
          tasks.push_back({[&cache, lambda] { return std::optional(verify_eq9(lambda, cache)); }});
        }
        break;
      case IdentityKind::EQ3:
        for (const Partition& lambda : level_n) {
          if (!matches(options.lambda_filter, lambda)) continue;
          tasks.push_back({[lambda] { return std::optional(verify_eq3(lambda)); }});
        }
        break;
      case IdentityKind::EQ6:
        if (n < 2) break;
        for (const Partition& lambda : level_n) {
          if (!matches(options.lambda_filter, lambda)) continue;
          tasks.push_back({[lambda] { return std::optional(verify_eq6(lambda)); }});
        }
        break;
      case IdentityKind::EQ4:
        for (const Partition& lambda : level_n) {
          if (!matches(options.lambda_filter, lambda)) continue;
          for (const Partition& zeta : level_n1) {
            if (!matches(options.zeta_filter, zeta)) continue;
            tasks.push_back(
                {[lambda, zeta] { return std::optional(verify_eq4_coefficient(lambda, zeta)); }});
          }
        }
        break;
      case IdentityKind::LEMMA_ADJ:
        for (int j = 1; j <= n; ++j) {
          for (const Partition& beta : level_n) {
            if (!matches(options.lambda_filter, beta)) continue;
            tasks.push_back({[j, beta] { return std::optional(verify_lemma_adjoint(j, beta)); }});
          }
        }
        break;
      case IdentityKind::PAIR_CANCEL:
        for (const Partition& lambda : level_n) {
          if (!matches(options.lambda_filter, lambda)) continue;
          for (const Partition& zeta : level_n1) {
            if (!matches(options.zeta_filter, zeta)) continue;
            tasks.push_back({[lambda, zeta] { return verify_pair_cancellation(lambda, zeta); }});
          }
        }
        break;
    }
  }

  std::vector<std::optional<VerificationRecord>> slots(tasks.size());
  int jobs = options.jobs > 0 ? options.jobs
                              : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(tasks.size()) > 0 ? static_cast<int>(tasks.size()) : 1);

  if (jobs <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = tasks[i].run();
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (true) {
          std::size_t index = next.fetch_add(1);
          if (index >= tasks.size()) return;
          try {
            slots[index] = tasks[index].run();
          } catch (...) {
            std::scoped_lock lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            return;
          }
        }
      });
    }
    for (auto& worker : workers) worker.join();
    if (failure) std::rethrow_exception(failure);
  }

  // Failures first, each group keeping enumeration order.
  std::vector<VerificationRecord> records;
  records.reserve(slots.size());
  for (auto& slot : slots)
    if (slot && !slot->ok) records.push_back(std::move(*slot));
  for (auto& slot : slots)
    if (slot && slot->ok) records.push_back(std::move(*slot));
  return records;
}

}  // namespace jmkit
