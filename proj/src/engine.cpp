#include "twoexperts/engine.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twoexperts/errors.hpp"

namespace twoexperts {

namespace {

constexpr double kDistributionTol = 1e-12;

void check_distribution(const ExpertDistribution& x, std::int64_t t) {
  if (!(x.x1 >= 0.0) || !(x.x2 >= 0.0) ||
      std::abs(x.x1 + x.x2 - 1.0) > kDistributionTol) {
    throw InvariantViolation("player emitted an invalid distribution at round " +
                             std::to_string(t) + ": (" + std::to_string(x.x1) +
                             ", " + std::to_string(x.x2) + ")");
  }
}

void check_length(const CostSequence& costs) {
  if (static_cast<std::int64_t>(costs.costs.size()) != costs.horizon.rounds) {
    throw std::invalid_argument("cost sequence length does not match horizon");
  }
}

}  // namespace

Transcript play(Player& player, const CostSequence& costs) {
  check_length(costs);
  Transcript tr{costs.horizon, costs.kind, player.label(), {}};
  tr.rounds.reserve(costs.costs.size());
  double loss1 = 0.0;
  double loss2 = 0.0;
  double total_cost = 0.0;
  for (std::int64_t t = 1; t <= costs.horizon.rounds; ++t) {
    const ExpertDistribution x = player.choose(t, loss1, loss2);
    check_distribution(x, t);
    const CostVector& cost = costs.costs[static_cast<std::size_t>(t - 1)];
    const double round_cost = cost.l1 * x.x1 + cost.l2 * x.x2;
    total_cost += round_cost;
    loss1 += cost.l1;
    loss2 += cost.l2;
    TranscriptRound round;
    round.x = x;
    round.cost = cost;
    round.player_cost = round_cost;
    round.loss1 = loss1;
    round.loss2 = loss2;
    round.gap = std::abs(loss1 - loss2);
    round.lagging = loss1 >= loss2 ? Lagging::expert1 : Lagging::expert2;
    round.cum_regret = total_cost - std::min(loss1, loss2);
    tr.rounds.push_back(round);
  }
  return tr;
}

GameSummary play_summary(Player& player, const CostSequence& costs) {
  check_length(costs);
  double loss1 = 0.0;
  double loss2 = 0.0;
  double total_cost = 0.0;
  for (std::int64_t t = 1; t <= costs.horizon.rounds; ++t) {
    const ExpertDistribution x = player.choose(t, loss1, loss2);
    check_distribution(x, t);
    const CostVector& cost = costs.costs[static_cast<std::size_t>(t - 1)];
    total_cost += cost.l1 * x.x1 + cost.l2 * x.x2;
    loss1 += cost.l1;
    loss2 += cost.l2;
  }
  return {total_cost, loss1, loss2, total_cost - std::min(loss1, loss2)};
}

double regret(const Transcript& tr) {
  if (tr.rounds.empty()) {
    throw std::invalid_argument("regret: incomplete transcript");
  }
  return tr.rounds.back().cum_regret;
}

double gap_identity_residual(const Transcript& tr) {
  if (tr.kind != CostKind::restricted_binary) {
    throw std::domain_error(
        "gap_identity_residual: transcript is not restricted binary");
  }
  double sum = 0.0;
  double prev_gap = 0.0;
  double prev_loss1 = 0.0;
  double prev_loss2 = 0.0;
  for (const TranscriptRound& round : tr.rounds) {
    double p;
    if (prev_gap == 0.0) {
      p = 0.5;
    } else {
      p = prev_loss1 > prev_loss2 ? round.x.x1 : round.x.x2;
    }
    sum += p * (round.gap - prev_gap);
    prev_gap = round.gap;
    prev_loss1 = round.loss1;
    prev_loss2 = round.loss2;
  }
  return std::abs(regret(tr) - sum);
}

std::vector<double> per_round_bound_residuals(const Transcript& tr,
                                              Horizon horizon) {
  if (tr.horizon.rounds != horizon.rounds) {
    throw std::invalid_argument("per_round_bound_residuals: horizon mismatch");
  }
  std::vector<double> residuals;
  residuals.reserve(tr.rounds.size());
  double prev_regret = 0.0;
  double prev_gap = 0.0;
  for (std::int64_t t = 1; t <= horizon.rounds; ++t) {
    const TranscriptRound& round = tr.rounds[static_cast<std::size_t>(t - 1)];
    const double delta = round.cum_regret - prev_regret;
    if (t < horizon.rounds) {
      const double time = static_cast<double>(t);
      const double bound =
          potential_r({time, round.gap, horizon}) -
          0.5 * (potential_r({time, prev_gap + 1.0, horizon}) +
                 potential_r({time, prev_gap - 1.0, horizon}));
      residuals.push_back(delta - bound);
    } else {
      residuals.push_back(delta - 0.5);
    }
    prev_regret = round.cum_regret;
    prev_gap = round.gap;
  }
  return residuals;
}

}  // namespace twoexperts
