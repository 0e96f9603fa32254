#pragma once

#include <cstdint>
#include <vector>

#include "twoexperts/math.hpp"
#include "twoexperts/policies.hpp"

namespace twoexperts {

// Per-round costs of the two experts, both in [0,1].
struct CostVector {
  double l1;
  double l2;
};

enum class CostKind { restricted_binary, binary, general };

struct CostSequence {
  Horizon horizon;
  std::vector<CostVector> costs;  // costs[t-1] is round t
  CostKind kind;
};

// bit true -> (1,0), false -> (0,1).
CostSequence seq_from_bits(const std::vector<bool>& bits);

// T i.i.d. uniform draws from {(1,0),(0,1)}; deterministic given seed.
CostSequence random_restricted(Horizon horizon, std::uint64_t seed);

// Each round i.i.d. uniform on [0,1]^2; deterministic given seed.
CostSequence random_general(Horizon horizon, std::uint64_t seed);

// Stress presets for general costs.
CostSequence all_equal_costs(Horizon horizon, std::uint64_t seed);
CostSequence small_increment_costs(Horizon horizon, std::uint64_t seed);

// V_p[t][g]: exact worst-case regret-to-be-suffered of a gap policy over all
// restricted binary continuations, dense (T+1)x(T+1), out-of-bounds reads 0.
struct PolicyRegretTable {
  Horizon horizon;
  std::vector<double> v;

  double value(std::int64_t t, std::int64_t g) const {
    const std::int64_t n = horizon.rounds;
    return g > n ? 0.0 : v[static_cast<std::size_t>(t * (n + 1) + g)];
  }
};

// Backward recursion
//   V[T][.] = 0
//   V[t][g] = max(V[t+1][g+1] + p(t+1,g), V[t+1][g-1] - p(t+1,g))   (g > 0)
//   V[t][0] = V[t+1][1] + max(p(t+1,0), 1 - p(t+1,0)).
// V[0][0] is the exact worst-case regret of the policy over L^T.
PolicyRegretTable worst_case_table(const GapPolicy& policy, Horizon horizon);

// V[0][0] alone via two rows (O(T) memory).
double worst_case_value(const GapPolicy& policy, Horizon horizon);

// Worst-case regret of Cover's policy with O(T) memory: the V* rows and the
// V_p rows advance together so p*(t+1,.) is always available.
double cover_worst_case_value(Horizon horizon);

// A maximizing restricted-binary sequence: its realized regret against the
// policy equals V[0][0]. Ties in the backward DP break toward "gap up".
CostSequence worst_case_sequence(const GapPolicy& policy, Horizon horizon);

}  // namespace twoexperts
