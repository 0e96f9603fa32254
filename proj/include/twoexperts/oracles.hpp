#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "twoexperts/adversaries.hpp"
#include "twoexperts/engine.hpp"
#include "twoexperts/policies.hpp"

namespace twoexperts {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

struct BruteForceResult {
  double regret;
  CostSequence sequence;  // one maximizer
};

// Exact maximum realized regret over all 2^T restricted-binary sequences.
// Capped at T <= 22; larger horizons are a ResourceError (the DP takes over).
BruteForceResult brute_force_worst(const GapPolicy& policy, Horizon horizon);

// E[Z_T(0)] = sum_{k=0}^{floor(T/2)} C(2k,k) 2^{-2k}, via the stable
// multiplicative recurrence term_k = term_{k-1} (2k-1)/(2k).
double passages_exact(std::int64_t walk_length);
BigRat passages_exact_rational(std::int64_t walk_length);

struct MonteCarloEstimate {
  double mean;
  double std_error;  // standard error of the mean
};

// Sample mean/stderr of zero-visit counts of simulated reflected walks.
MonteCarloEstimate passages_mc(std::int64_t walk_length, std::int64_t trials,
                               std::uint64_t seed);

// The classical bounds (sqrt(2T/pi) + 3/5, 1 + sqrt(2T/pi)), returned as
// REPORTED values. The lower bound is numerically false (already at T = 10);
// only the upper bound is safe to assert against passages_exact.
std::pair<double, double> passages_bounds(std::int64_t walk_length);

// Stirling bracket ((2^{2n}/sqrt(pi n))(1 - 2/(15n)), 2^{2n}/sqrt(pi n)).
// The doubles overflow near n = 512; bracket checks above that should use
// central_binom_bracket_holds, which compares in extended precision.
std::pair<double, double> central_binom_bounds(std::int64_t n);
bool central_binom_bracket_holds(std::int64_t n);
BigInt central_binom_exact(std::int64_t n);  // C(2n, n)

// Monte Carlo mean regret of the player against random_restricted. For any
// player this concentrates on passages_exact(T-1)/2.
MonteCarloEstimate expected_regret_random_adversary(Player& player,
                                                    Horizon horizon,
                                                    std::int64_t trials,
                                                    std::uint64_t seed);

struct PassageStats {
  std::int64_t walk_length;
  double exact;
  std::optional<MonteCarloEstimate> mc;
  std::pair<double, double> bounds;  // reported, lower half not asserted
};

PassageStats passage_stats(std::int64_t walk_length,
                           std::int64_t trials = 0, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Exact dyadic-rational route: Cover's tables, the adversary DP, brute force
// and E[Z] over cpp_rational, for equality (not tolerance) checks. T <= 64.
// ---------------------------------------------------------------------------
namespace exact {

struct ExactCoverTables {
  Horizon horizon;
  std::vector<BigRat> v;  // V*[t][g], dense (T+1)x(T+1)
  std::vector<BigRat> p;  // p*(t,g),  dense (T+1)x(T+1), rows 1..T used

  const BigRat& value(std::int64_t t, std::int64_t g) const;
  const BigRat& probability(std::int64_t t, std::int64_t g) const;
};

ExactCoverTables build_cover_tables(Horizon horizon);  // T <= 64
BigRat worst_case_value(const ExactCoverTables& tables);
BigRat brute_force_worst(const ExactCoverTables& tables);  // T <= 22

}  // namespace exact

}  // namespace twoexperts
