#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twoexperts/adversaries.hpp"
#include "twoexperts/policies.hpp"

namespace twoexperts {

struct TranscriptRound {
  ExpertDistribution x;   // distribution committed before seeing the costs
  CostVector cost;
  double player_cost;     // <l_t, x_t>
  double loss1;           // cumulative losses after the round
  double loss2;
  double gap;             // |loss1 - loss2|
  Lagging lagging;        // after the round; expert1 on exact ties
  double cum_regret;
};

struct Transcript {
  Horizon horizon;
  CostKind kind;
  std::string policy_label;
  std::vector<TranscriptRound> rounds;
};

// Final state only; used for large-T benchmarks and Monte Carlo loops.
struct GameSummary {
  double total_player_cost;
  double loss1;
  double loss2;
  double regret;
};

// Runs the full game. The player never sees l_t before committing x_t.
// A distribution with negative mass or |x1 + x2 - 1| > 1e-12 throws
// InvariantViolation.
Transcript play(Player& player, const CostSequence& costs);

// Same game without per-round storage (O(1) memory).
GameSummary play_summary(Player& player, const CostSequence& costs);

// sum_t <l_t, x_t> - min_i L_T(i).
double regret(const Transcript& tr);

// |Regret(T) - sum_t p_t (g_t - g_{t-1})| where p_t is the transcript's mass
// on the expert lagging after round t-1 (1/2 when the gap was 0). Defined
// only for restricted-binary transcripts of gap-based players.
double gap_identity_residual(const Transcript& tr);

// Per-round residuals of the general-cost regret bound: for t < T,
//   DeltaRegret(t) - [R(t,g_t) - (R(t,g_{t-1}+1) + R(t,g_{t-1}-1))/2],
// and DeltaRegret(T) - 1/2 for the last round. Each entry is <= 0 up to
// rounding when the player is the erfc policy.
std::vector<double> per_round_bound_residuals(const Transcript& tr, Horizon horizon);

}  // namespace twoexperts
