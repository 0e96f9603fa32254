#include "twoexperts/oracles.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twoexperts/errors.hpp"
#include "twoexperts/rng.hpp"

namespace twoexperts {

namespace {

constexpr std::int64_t kBruteForceCap = 22;
constexpr std::int64_t kExactCap = 64;
constexpr double kPi = 3.14159265358979323846;

using BigFloat = boost::multiprecision::cpp_bin_float_50;

const BigFloat& big_pi() {
  static const BigFloat pi(
      "3.1415926535897932384626433832795028841971693993751058209749445923");
  return pi;
}

// p(t,g) tabulated for t in 1..T, g in 0..t-1 (the only reachable queries).
std::vector<double> tabulate_policy(const GapPolicy& policy, Horizon horizon) {
  const std::int64_t n = horizon.rounds;
  std::vector<double> table(static_cast<std::size_t>((n + 1) * n), 0.0);
  for (std::int64_t t = 1; t <= n; ++t) {
    for (std::int64_t g = 0; g < t; ++g) {
      table[static_cast<std::size_t>(t * n + g)] =
          policy.mass(t, static_cast<double>(g));
    }
  }
  return table;
}

}  // namespace

BruteForceResult brute_force_worst(const GapPolicy& policy, Horizon horizon) {
  const std::int64_t n = horizon.rounds;
  if (n > kBruteForceCap) {
    throw ResourceError("brute_force_worst: horizon " + std::to_string(n) +
                        " exceeds the 2^" + std::to_string(kBruteForceCap) +
                        " enumeration cap");
  }
  const std::vector<double> p = tabulate_policy(policy, horizon);
  double best = -1.0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::int64_t loss1 = 0;
    std::int64_t loss2 = 0;
    double total_cost = 0.0;
    for (std::int64_t t = 1; t <= n; ++t) {
      const bool charge1 = (mask >> (t - 1)) & 1ULL;
      const std::int64_t g = std::abs(loss1 - loss2);
      if (g == 0) {
        total_cost += 0.5;
      } else {
        const double mass = p[static_cast<std::size_t>(t * n + g)];
        const bool lagging1 = loss1 > loss2;
        total_cost += (charge1 == lagging1) ? mass : 1.0 - mass;
      }
      charge1 ? ++loss1 : ++loss2;
    }
    const double game_regret =
        total_cost - static_cast<double>(std::min(loss1, loss2));
    if (game_regret > best) {
      best = game_regret;
      best_mask = mask;
    }
  }
  std::vector<bool> bits(static_cast<std::size_t>(n));
  for (std::int64_t t = 0; t < n; ++t) {
    bits[static_cast<std::size_t>(t)] = (best_mask >> t) & 1ULL;
  }
  return {best, seq_from_bits(bits)};
}

double passages_exact(std::int64_t walk_length) {
  if (walk_length < 0) {
    throw std::domain_error("passages_exact: negative walk length");
  }
  double term = 1.0;
  double sum = 1.0;
  for (std::int64_t k = 1; k <= walk_length / 2; ++k) {
    term *= static_cast<double>(2 * k - 1) / static_cast<double>(2 * k);
    sum += term;
  }
  return sum;
}

BigRat passages_exact_rational(std::int64_t walk_length) {
  if (walk_length < 0) {
    throw std::domain_error("passages_exact_rational: negative walk length");
  }
  BigRat term = 1;
  BigRat sum = 1;
  for (std::int64_t k = 1; k <= walk_length / 2; ++k) {
    term *= BigRat(2 * k - 1, 2 * k);
    sum += term;
  }
  return sum;
}

MonteCarloEstimate passages_mc(std::int64_t walk_length, std::int64_t trials,
                               std::uint64_t seed) {
  if (trials < 1) {
    throw std::domain_error("passages_mc: trials must be >= 1");
  }
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    auto rng = make_stream(seed, static_cast<std::uint64_t>(trial));
    std::int64_t position = 0;
    std::int64_t visits = 1;  // S_0 = 0
    for (std::int64_t step = 0; step < walk_length; ++step) {
      position += (rng() & 1) ? 1 : -1;
      position = std::abs(position);
      if (position == 0) ++visits;
    }
    const double x = static_cast<double>(visits);
    const double delta = x - mean;
    mean += delta / static_cast<double>(trial + 1);
    m2 += delta * (x - mean);
  }
  const double stderr_value =
      trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) /
                             static_cast<double>(trials))
                 : 0.0;
  return {mean, stderr_value};
}

std::pair<double, double> passages_bounds(std::int64_t walk_length) {
  if (walk_length < 1) {
    throw std::domain_error("passages_bounds: walk length must be >= 1");
  }
  const double root = std::sqrt(2.0 * static_cast<double>(walk_length) / kPi);
  return {root + 0.6, 1.0 + root};
}

BigInt central_binom_exact(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("central_binom_exact: negative n");
  }
  BigInt binom = 1;
  for (std::int64_t j = 0; j < n; ++j) {
    binom = binom * (2 * n - j) / (j + 1);
  }
  return binom;
}

std::pair<double, double> central_binom_bounds(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("central_binom_bounds: n must be >= 1");
  }
  const double upper =
      std::ldexp(1.0, static_cast<int>(2 * n)) / std::sqrt(kPi * static_cast<double>(n));
  const double lower = upper * (1.0 - 2.0 / (15.0 * static_cast<double>(n)));
  return {lower, upper};
}

bool central_binom_bracket_holds(std::int64_t n) {
  if (n < 1) {
    throw std::domain_error("central_binom_bracket_holds: n must be >= 1");
  }
  const BigFloat upper = boost::multiprecision::ldexp(BigFloat(1), static_cast<int>(2 * n)) /
                         sqrt(big_pi() * BigFloat(n));
  const BigFloat lower = upper * (1 - BigFloat(2) / (15 * BigFloat(n)));
  const BigFloat exact(central_binom_exact(n));
  return lower <= exact && exact <= upper;
}

MonteCarloEstimate expected_regret_random_adversary(Player& player,
                                                    Horizon horizon,
                                                    std::int64_t trials,
                                                    std::uint64_t seed) {
  if (trials < 1) {
    throw std::domain_error("expected_regret_random_adversary: trials must be >= 1");
  }
  double mean = 0.0;
  double m2 = 0.0;
  for (std::int64_t trial = 0; trial < trials; ++trial) {
    const CostSequence costs =
        random_restricted(horizon, seed ^ static_cast<std::uint64_t>(trial));
    const double x = play_summary(player, costs).regret;
    const double delta = x - mean;
    mean += delta / static_cast<double>(trial + 1);
    m2 += delta * (x - mean);
  }
  const double stderr_value =
      trials > 1 ? std::sqrt(m2 / static_cast<double>(trials - 1) /
                             static_cast<double>(trials))
                 : 0.0;
  return {mean, stderr_value};
}

PassageStats passage_stats(std::int64_t walk_length, std::int64_t trials,
                           std::uint64_t seed) {
  PassageStats stats{walk_length, passages_exact(walk_length), std::nullopt,
                     passages_bounds(std::max<std::int64_t>(walk_length, 1))};
  if (trials > 0) {
    stats.mc = passages_mc(walk_length, trials, seed);
  }
  return stats;
}

namespace exact {

const BigRat& ExactCoverTables::value(std::int64_t t, std::int64_t g) const {
  static const BigRat zero = 0;
  const std::int64_t n = horizon.rounds;
  if (g > n) return zero;
  return v[static_cast<std::size_t>(t * (n + 1) + g)];
}

const BigRat& ExactCoverTables::probability(std::int64_t t, std::int64_t g) const {
  const std::int64_t n = horizon.rounds;
  return p[static_cast<std::size_t>(t * (n + 1) + g)];
}

ExactCoverTables build_cover_tables(Horizon horizon) {
  const std::int64_t n = horizon.rounds;
  if (n > kExactCap) {
    throw ResourceError("exact cover tables capped at T <= " +
                        std::to_string(kExactCap));
  }
  ExactCoverTables tables{
      horizon,
      std::vector<BigRat>(static_cast<std::size_t>((n + 1) * (n + 1)), BigRat(0)),
      std::vector<BigRat>(static_cast<std::size_t>((n + 1) * (n + 1)), BigRat(0))};
  auto at = [&](std::int64_t t, std::int64_t g) -> BigRat& {
    return tables.v[static_cast<std::size_t>(t * (n + 1) + g)];
  };
  const BigRat half(1, 2);
  for (std::int64_t t = n - 1; t >= 0; --t) {
    at(t, 0) = tables.value(t + 1, 1) + half;
    for (std::int64_t g = 1; g < n; ++g) {
      at(t, g) = half * (tables.value(t + 1, g + 1) + tables.value(t + 1, g - 1));
    }
    at(t, n) = 0;
  }
  for (std::int64_t t = 1; t <= n; ++t) {
    tables.p[static_cast<std::size_t>(t * (n + 1))] = half;
    for (std::int64_t g = 1; g <= n - 1; ++g) {
      tables.p[static_cast<std::size_t>(t * (n + 1) + g)] =
          half * (tables.value(t, g - 1) - tables.value(t, g + 1));
    }
  }
  return tables;
}

BigRat worst_case_value(const ExactCoverTables& tables) {
  const std::int64_t n = tables.horizon.rounds;
  std::vector<BigRat> next(static_cast<std::size_t>(n + 2), BigRat(0));
  std::vector<BigRat> cur(static_cast<std::size_t>(n + 2), BigRat(0));
  const BigRat half(1, 2);
  for (std::int64_t t = n - 1; t >= 0; --t) {
    const BigRat& p0 = tables.probability(t + 1, 0);
    cur[0] = next[1] + (p0 >= half ? p0 : 1 - p0);
    for (std::int64_t g = 1; g <= t; ++g) {
      const BigRat& p = tables.probability(t + 1, g);
      const BigRat up = next[static_cast<std::size_t>(g + 1)] + p;
      const BigRat down = next[static_cast<std::size_t>(g - 1)] - p;
      cur[static_cast<std::size_t>(g)] = up >= down ? up : down;
    }
    std::swap(cur, next);
  }
  return next[0];
}

BigRat brute_force_worst(const ExactCoverTables& tables) {
  const std::int64_t n = tables.horizon.rounds;
  if (n > kBruteForceCap) {
    throw ResourceError("exact brute force capped at T <= " +
                        std::to_string(kBruteForceCap));
  }
  const BigRat half(1, 2);
  BigRat best = -1;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    std::int64_t loss1 = 0;
    std::int64_t loss2 = 0;
    BigRat total_cost = 0;
    for (std::int64_t t = 1; t <= n; ++t) {
      const bool charge1 = (mask >> (t - 1)) & 1ULL;
      const std::int64_t g = std::abs(loss1 - loss2);
      if (g == 0) {
        total_cost += half;
      } else {
        const BigRat& mass = tables.probability(t, g);
        const bool lagging1 = loss1 > loss2;
        total_cost += (charge1 == lagging1) ? mass : 1 - mass;
      }
      charge1 ? ++loss1 : ++loss2;
    }
    const BigRat game_regret = total_cost - std::min(loss1, loss2);
    if (game_regret > best) best = game_regret;
  }
  return best;
}

}  // namespace exact

}  // namespace twoexperts
