#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsw/algebra.hpp"
#include "hsw/coherent.hpp"
#include "hsw/perm.hpp"

namespace hsw {

/// Rank-3 parameters: nontrivial subdegrees a < b and lambda, the
/// coefficient of D2 (valency b) in D1 * D1 (valency a).
struct Rank3Data {
  std::uint64_t a = 0, b = 0, lambda = 0, n = 0;
  std::size_t d1 = 0, d2 = 0;  // orbital ids
};

/// Throws NotRankThree, EqualSubdegrees, or CoefficientMismatch when the
/// tensor disagrees with the closed-form rank-3 products.
Rank3Data rank3_lambda(const CoherentConfig& config);

struct Rank3Test {
  bool is_s_permutation = false;
  std::uint64_t gcd_value = 0;
};

/// gcd(a + b + 1, ab, lambda, b - lambda b / a) == 1.
Rank3Test rank3_s_test(const Rank3Data& d);

enum class ConditionStatus { Fired, NotFired, Unevaluated };
std::string to_string(ConditionStatus s);

struct ConditionOutcome {
  ConditionStatus status = ConditionStatus::Unevaluated;
  std::string detail;
};

struct CriteriaOptions {
  DecisionOptions decision;
  std::uint64_t cap = kDefaultElementCap;
  /// Generators of a proposed abelian regular subgroup for condition (iii).
  /// Without one, the first regular n-cycle found (if any) is used.
  std::optional<std::vector<Permutation>> candidate_regular;
};

/// Sufficient conditions for the endomorphism algebra to be symmetric in
/// characteristic p, checked against the direct decision.
struct CriterionReport {
  std::uint32_t p = 0;
  /// (i) subdegrees prime to p, (ii) p does not divide |G|/(nm) for each
  /// nontrivial subdegree m, (iii) abelian regular p'-subgroup, (iv) n < 2p,
  /// (v) p does not divide n and rank 3.
  std::array<ConditionOutcome, 5> conditions;
  FormVerdict direct;
  bool any_fired = false;
  bool consistent = true;  // no fired condition while direct says not symmetric
};

/// Throws NotTransitive, NotPrime.
CriterionReport p_s_report(const PermGroup& g, const CoherentConfig& config, std::uint32_t p,
                           const CriteriaOptions& options = {});

struct SReport {
  std::size_t degree = 0, rank = 0;
  std::vector<std::uint64_t> subdegrees;
  std::optional<std::uint64_t> order;
  std::vector<std::uint32_t> primes;
  /// Primes above this bound satisfy (iv), so they need no testing.
  std::uint32_t prime_bound = 0;
  std::vector<CriterionReport> per_prime;
  bool symmetric_at_all_tested = false;
  std::optional<Rank3Data> rank3;
  std::optional<Rank3Test> rank3_test;
  std::string rank3_note;
};

/// Runs p_s_report for each prime (default: all primes <= degree).
/// Throws NotTransitive.
SReport s_report(const PermGroup& g, std::vector<std::uint32_t> primes = {},
                 const CriteriaOptions& options = {});

}  // namespace hsw
