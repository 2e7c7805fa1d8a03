#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lg/enumerate.hpp"
#include "lg/strata.hpp"

namespace lg {

/// Resource guard for the brute-force machinery: any single Grassmannian
/// with more points than this is refused.
struct EnumBudget {
  std::uint64_t max_grassmannian_points = 1'000'000;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All linked tuples of the chain, depth first: V_1 runs through every
/// r-dimensional subspace, each later space through the r-dimensional
/// superspaces of the forward image filtered by the backward condition.
/// Deterministic order.
std::vector<std::vector<Subspace>> enum_lg_points(const LinkedChain& chain,
                                                  int r,
                                                  const EnumBudget& budget = {});

/// Streaming variant used when only counts or classifications are needed.
void walk_lg_points(const LinkedChain& chain, int r, const EnumBudget& budget,
                    const std::function<void(const std::vector<Subspace>&)>& fn);

enum class FiberStatus { Ok, InadmissiblePair };

struct FiberResult {
  FiberStatus status = FiberStatus::Ok;
  std::string diagnostic;
  std::vector<std::vector<Subspace>> points;
};

/// All linked tuples with the given first and last member. An inadmissible
/// pair is reported as such, distinct from an admissible pair whose fiber
/// happens to be empty.
FiberResult enum_fiber(const LinkedChain& chain, int r, const Subspace& v1,
                       const Subspace& vn, const EnumBudget& budget = {});

FiberResult enum_fiber(const PairAnalyzer& analyzer, const Subspace& v1,
                       const Subspace& vn, const EnumBudget& budget = {});

/// Point counts of one fiber bucketed by stratum key.
struct FiberCensus {
  std::map<std::vector<int>, std::uint64_t> counts;
  std::uint64_t total = 0;
};

FiberCensus stratify(const PairAnalyzer& analyzer, const PairInvariants& inv,
                     const std::vector<std::vector<Subspace>>& fiber);

/// Exact interpolation of per-prime counts. Coefficients are exact
/// rationals rendered as strings ("num" or "num/den"), ascending degree.
/// degree is -1 for the zero polynomial. exact_fit means the interpolant
/// left at least one sample to spare: the minimal-degree polynomial through
/// all samples has degree <= samples - 2, so the last sample confirmed the
/// fit rather than being consumed by it.
struct CountPolynomial {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> samples;
  std::vector<std::string> coefficients;
  int degree = -1;
  bool exact_fit = false;
  bool integer_coefficients = false;

  /// Exact evaluation; throws std::domain_error if the value at q is not a
  /// non-negative integer.
  std::uint64_t eval(std::uint64_t q) const;
};

/// Lagrange/Newton interpolation over the rationals. If expected_degree is
/// given, at least expected_degree + 1 samples are required; the error
/// message states how many more primes are needed.
CountPolynomial fit_count_polynomial(
    const std::vector<std::pair<std::uint64_t, std::uint64_t>>& samples,
    std::optional<int> expected_degree = std::nullopt);

struct VerifyOptions {
  int max_d = 3;
  int max_n = 4;
  int max_r = 1;
  std::vector<std::uint32_t> primes{2, 3, 5, 7};
  std::vector<std::uint32_t> escalation_primes{11, 13};
  EnumBudget budget;
  std::optional<std::uint64_t> seed;  // conjugates every model when present
};

/// Test hook: deliberately corrupts the stratum condition evaluator so the
/// sweep can demonstrate it detects a broken predictor.
struct VerifyHooks {
  bool flip_min_rank_condition = false;
};

struct StratumFinding {
  std::vector<int> key;
  bool predicted_nonempty = false;
  long long predicted_dim = 0;
  std::map<std::uint32_t, std::uint64_t> counts;  // per-pair count per prime
  int degree = -1;
  bool exact_fit = false;
  std::uint32_t witness_prime = 0;  // 0 when unwitnessed
  std::string verdict;
};

struct ProfileFinding {
  PairLocusSpec profile;
  long long bound = 0;
  bool locus_nonempty = false;
  long long locus_dim = 0;
  std::map<std::uint32_t, std::uint64_t> pair_count;
  std::map<std::uint32_t, std::uint64_t> fiber_count;  // per pair
  int fiber_degree = -1;
  bool fiber_exact_fit = false;
  std::vector<StratumFinding> strata;
};

struct ModelFinding {
  int d = 0, n = 0, r = 0;
  std::vector<int> sizes;  // nested subset sizes of the model
  bool truncated = false;
  std::string truncation_reason;
  std::map<std::uint32_t, std::uint64_t> lg_count;
  int lg_degree = -1;
  bool lg_exact_fit = false;
  std::vector<ProfileFinding> profiles;
  std::vector<std::string> failures;
  std::vector<std::string> warnings;
};

struct VerificationSummary {
  std::uint64_t models = 0;
  std::uint64_t profiles = 0;
  std::uint64_t strata_nonempty = 0;
  std::uint64_t strata_empty = 0;
  std::uint64_t failures = 0;
  std::uint64_t warnings = 0;
  std::vector<std::string> failure_messages;
  std::vector<std::string> unwitnessed;  // individually listed
};

struct VerificationReport {
  VerifyOptions options;
  std::vector<ModelFinding> models;
  VerificationSummary summary;

  bool pass() const { return summary.failures == 0; }
};

/// Sweeps every nested model with d <= max_d, n in [3, max_n], r <= max_r
/// (and r < d) over the census primes, checking the closed-form
/// predictions against exhaustive enumeration:
///   - strata predicted empty must have zero points at every prime;
///   - strata predicted non-empty are hunted across the census and
///     escalation primes, and flagged (not failed) when never seen;
///   - where counts fit a polynomial exactly with a spare sample, its
///     degree must equal the predicted stratum dimension;
///   - fiber count degrees and realized stratum dimensions must respect
///     the fiber bound;
///   - per-prime totals must reconcile between the global walk and the
///     per-pair fibers, and strata must partition each fiber.
VerificationReport verify_configuration(const VerifyOptions& options,
                                        const VerifyHooks& hooks = {});

}  // namespace lg
