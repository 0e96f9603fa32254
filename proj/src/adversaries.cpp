#include "twoexperts/adversaries.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

#include "twoexperts/rng.hpp"

namespace twoexperts {

namespace {

double uniform01(std::mt19937_64& rng) {
  // 53 random bits; avoids implementation-defined std distributions so the
  // same seed reproduces the same sequence everywhere.
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

CostSequence seq_from_bits(const std::vector<bool>& bits) {
  if (bits.empty()) {
    throw std::domain_error("seq_from_bits: empty bit list");
  }
  CostSequence seq{Horizon(static_cast<std::int64_t>(bits.size())),
                   {},
                   CostKind::restricted_binary};
  seq.costs.reserve(bits.size());
  for (bool b : bits) {
    seq.costs.push_back(b ? CostVector{1.0, 0.0} : CostVector{0.0, 1.0});
  }
  return seq;
}

CostSequence random_restricted(Horizon horizon, std::uint64_t seed) {
  auto rng = make_stream(seed);
  CostSequence seq{horizon, {}, CostKind::restricted_binary};
  seq.costs.reserve(static_cast<std::size_t>(horizon.rounds));
  for (std::int64_t t = 0; t < horizon.rounds; ++t) {
    seq.costs.push_back((rng() & 1) ? CostVector{1.0, 0.0} : CostVector{0.0, 1.0});
  }
  return seq;
}

CostSequence random_general(Horizon horizon, std::uint64_t seed) {
  auto rng = make_stream(seed);
  CostSequence seq{horizon, {}, CostKind::general};
  seq.costs.reserve(static_cast<std::size_t>(horizon.rounds));
  for (std::int64_t t = 0; t < horizon.rounds; ++t) {
    const double l1 = uniform01(rng);
    const double l2 = uniform01(rng);
    seq.costs.push_back({l1, l2});
  }
  return seq;
}

CostSequence all_equal_costs(Horizon horizon, std::uint64_t seed) {
  auto rng = make_stream(seed);
  CostSequence seq{horizon, {}, CostKind::general};
  seq.costs.reserve(static_cast<std::size_t>(horizon.rounds));
  for (std::int64_t t = 0; t < horizon.rounds; ++t) {
    const double u = uniform01(rng);
    seq.costs.push_back({u, u});
  }
  return seq;
}

CostSequence small_increment_costs(Horizon horizon, std::uint64_t seed) {
  auto rng = make_stream(seed);
  CostSequence seq{horizon, {}, CostKind::general};
  seq.costs.reserve(static_cast<std::size_t>(horizon.rounds));
  for (std::int64_t t = 0; t < horizon.rounds; ++t) {
    const double u = uniform01(rng);
    const double diff = 0.1 * (uniform01(rng) - 0.5);
    seq.costs.push_back({u, std::clamp(u + diff, 0.0, 1.0)});
  }
  return seq;
}

PolicyRegretTable worst_case_table(const GapPolicy& policy, Horizon horizon) {
  const std::int64_t n = horizon.rounds;
  PolicyRegretTable table{horizon,
                          std::vector<double>(
                              static_cast<std::size_t>((n + 1) * (n + 1)), 0.0)};
  auto at = [&](std::int64_t t, std::int64_t g) -> double& {
    return table.v[static_cast<std::size_t>(t * (n + 1) + g)];
  };
  // Reachable states have g <= t; everything else stays 0, matching the
  // out-of-bounds convention of value().
  for (std::int64_t t = n - 1; t >= 0; --t) {
    const double p0 = policy.mass(t + 1, 0.0);
    at(t, 0) = table.value(t + 1, 1) + std::max(p0, 1.0 - p0);
    for (std::int64_t g = 1; g <= t; ++g) {
      const double p = policy.mass(t + 1, static_cast<double>(g));
      at(t, g) = std::max(table.value(t + 1, g + 1) + p,
                          table.value(t + 1, g - 1) - p);
    }
  }
  return table;
}

double worst_case_value(const GapPolicy& policy, Horizon horizon) {
  const std::int64_t n = horizon.rounds;
  std::vector<double> next(static_cast<std::size_t>(n + 2), 0.0);
  std::vector<double> cur(static_cast<std::size_t>(n + 2), 0.0);
  for (std::int64_t t = n - 1; t >= 0; --t) {
    const double p0 = policy.mass(t + 1, 0.0);
    cur[0] = next[1] + std::max(p0, 1.0 - p0);
    for (std::int64_t g = 1; g <= t; ++g) {
      const double p = policy.mass(t + 1, static_cast<double>(g));
      cur[static_cast<std::size_t>(g)] =
          std::max(next[static_cast<std::size_t>(g + 1)] + p,
                   next[static_cast<std::size_t>(g - 1)] - p);
    }
    std::swap(cur, next);
  }
  return next[0];
}

double cover_worst_case_value(Horizon horizon) {
  const std::int64_t n = horizon.rounds;
  // vstar rows drive p*(t+1,.); vp rows run the adversary DP against it.
  std::vector<double> vstar_next(static_cast<std::size_t>(n + 2), 0.0);
  std::vector<double> vstar_cur(static_cast<std::size_t>(n + 2), 0.0);
  std::vector<double> vp_next(static_cast<std::size_t>(n + 2), 0.0);
  std::vector<double> vp_cur(static_cast<std::size_t>(n + 2), 0.0);
  for (std::int64_t t = n - 1; t >= 0; --t) {
    vp_cur[0] = vp_next[1] + 0.5;  // p*(t+1,0) = 1/2
    for (std::int64_t g = 1; g <= t; ++g) {
      // p*(t+1,g) from the V* row at time t+1; g-1 and g+1 are within the
      // portion of that row already computed (or the zero boundary).
      const double p =
          0.5 * (vstar_next[static_cast<std::size_t>(g - 1)] -
                 vstar_next[static_cast<std::size_t>(g + 1)]);
      vp_cur[static_cast<std::size_t>(g)] =
          std::max(vp_next[static_cast<std::size_t>(g + 1)] + p,
                   vp_next[static_cast<std::size_t>(g - 1)] - p);
    }
    vstar_cur[0] = vstar_next[1] + 0.5;
    for (std::int64_t g = 1; g < n; ++g) {
      vstar_cur[static_cast<std::size_t>(g)] =
          0.5 * (vstar_next[static_cast<std::size_t>(g + 1)] +
                 vstar_next[static_cast<std::size_t>(g - 1)]);
    }
    vstar_cur[static_cast<std::size_t>(n)] = 0.0;
    std::swap(vp_cur, vp_next);
    std::swap(vstar_cur, vstar_next);
  }
  return vp_next[0];
}

CostSequence worst_case_sequence(const GapPolicy& policy, Horizon horizon) {
  const PolicyRegretTable table = worst_case_table(policy, horizon);
  const std::int64_t n = horizon.rounds;
  CostSequence seq{horizon, {}, CostKind::restricted_binary};
  seq.costs.reserve(static_cast<std::size_t>(n));
  std::int64_t loss1 = 0;
  std::int64_t loss2 = 0;
  for (std::int64_t t = 1; t <= n; ++t) {
    const std::int64_t g = std::abs(loss1 - loss2);
    bool charge_expert1;
    if (g == 0) {
      // Mass p(t,0) sits on expert 1 (the tie label); the adversary charges
      // whichever expert carries the larger mass, expert 1 on ties.
      const double p0 = policy.mass(t, 0.0);
      charge_expert1 = p0 >= 1.0 - p0;
    } else {
      const double p = policy.mass(t, static_cast<double>(g));
      const double up = table.value(t, g + 1) + p;
      const double down = table.value(t, g - 1) - p;
      const bool lagging1 = loss1 > loss2;
      const bool gap_up = up >= down;  // tie toward "gap up"
      charge_expert1 = (gap_up == lagging1);
    }
    if (charge_expert1) {
      seq.costs.push_back({1.0, 0.0});
      ++loss1;
    } else {
      seq.costs.push_back({0.0, 1.0});
      ++loss2;
    }
  }
  return seq;
}

}  // namespace twoexperts
