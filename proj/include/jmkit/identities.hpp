#pragma once

#include <chrono>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jmkit/characters.hpp"
#include "jmkit/expansion.hpp"
#include "jmkit/partition.hpp"

namespace jmkit {

enum class IdentityKind { T1, EQ2, T2, T3, EQ8, EQ9, EQ3, EQ4, EQ6, LEMMA_ADJ, PAIR_CANCEL };

std::string_view identity_name(IdentityKind kind);
std::optional<IdentityKind> parse_identity(std::string_view name);  // accepts "t1", "lemma-adj", ...
const std::vector<IdentityKind>& all_identities();

// One verified equation instance. lhs and rhs hold either an exact integer
// rendered as a string or a Schur expansion; ok means exact equality.
struct VerificationRecord {
  IdentityKind identity = IdentityKind::T1;
  int n = 0;
  std::optional<Partition> lambda;
  std::optional<Partition> type;
  std::optional<Partition> zeta;
  std::optional<int> j;
  std::variant<std::string, SchurExpansion> lhs;
  std::variant<std::string, SchurExpansion> rhs;
  bool ok = false;
  std::optional<std::string> note;
  std::chrono::microseconds elapsed{0};
};

// One remove-then-add path from lambda to zeta: strip a rimhook of length
// j+1 leaving nu, then add a rimhook of length j. Row counts: deleted holds
// rows with cells deleted and not replaced, added rows with cells added that
// were not deleted, replaced rows with cells deleted and put back.
struct CancellationWay {
  int j = 0;
  Partition nu;
  int sign_removed = 1;
  int sign_added = 1;
  int deleted_rows = 0;
  int added_rows = 0;
  int replaced_rows = 0;
  int net_sign() const { return sign_removed * sign_added; }
};

struct CancellationReport {
  Partition lambda;
  Partition zeta;
  std::vector<CancellationWay> ways;  // ascending j
};

// All remove-then-add paths from lambda to zeta (weight(zeta) must be
// weight(lambda) - 1).
std::vector<CancellationWay> cancellation_ways(const Partition& lambda, const Partition& zeta);

// Requires zeta distinct from every corner removal of lambda. Ways may be
// empty when zeta is unreachable; otherwise there are exactly two, of
// opposite net sign.
CancellationReport analyze_pair_cancellation(const Partition& lambda, const Partition& zeta);

// Character identities, each evaluated on both sides through independent
// code paths (group algebra vs corner/pair contents).
VerificationRecord verify_t1(const Partition& lambda, const Partition& sigma_bar_type,
                             CharacterCache& cache);
VerificationRecord verify_eq2(const Partition& lambda, const Partition& sigma_bar_type,
                              CharacterCache& cache);
VerificationRecord verify_t2(const Partition& lambda, const Partition& sigma_bar_type,
                             CharacterCache& cache);
VerificationRecord verify_t3(const Partition& lambda, const Partition& sigma_type,
                             CharacterCache& cache);
VerificationRecord verify_eq8(const Partition& lambda, const Partition& sigma_type,
                              CharacterCache& cache);
VerificationRecord verify_eq9(const Partition& lambda, CharacterCache& cache);

// Operator identities in the Schur basis.
VerificationRecord verify_eq3(const Partition& lambda);
VerificationRecord verify_eq6(const Partition& lambda);
VerificationRecord verify_t3_operator(const Partition& lambda);

// Coefficient of s_zeta in the double rimhook sum against the corner content.
VerificationRecord verify_eq4_coefficient(const Partition& lambda, const Partition& zeta);

// Adjointness of mult_p and skew_dp at a fixed j against degree-n basis
// elements.
VerificationRecord verify_lemma_adjoint(int j, const Partition& beta);

// Case dichotomy for one reachable (lambda, zeta) pair; nullopt when
// unreachable.
std::optional<VerificationRecord> verify_pair_cancellation(const Partition& lambda,
                                                           const Partition& zeta);

struct SweepOptions {
  int jobs = 0;  // 0 means all hardware threads
  std::optional<int> guard_override;
  std::optional<Partition> lambda_filter;
  std::optional<Partition> type_filter;
  std::optional<Partition> zeta_filter;
  CharacterCache* cache = nullptr;  // shared across workers when given
};

// Runs every requested identity over every admissible input at size n.
// Records come back failures first, each group in deterministic enumeration
// order. Throws GuardExceeded when n exceeds the limit.
std::vector<VerificationRecord> sweep(int n, const std::set<IdentityKind>& suites,
                                      const SweepOptions& options = {});

}  // namespace jmkit
