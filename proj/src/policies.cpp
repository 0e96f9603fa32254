#include "twoexperts/policies.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "twoexperts/errors.hpp"

namespace twoexperts {

namespace {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

void check_round(std::int64_t t, Horizon horizon, const char* who) {
  if (t < 1 || t > horizon.rounds) {
    throw std::domain_error(std::string(who) + ": round " + std::to_string(t) +
                            " outside 1.." + std::to_string(horizon.rounds));
  }
}

}  // namespace

GapPolicy make_erfc_policy(Horizon horizon) {
  return GapPolicy{horizon, "erfc",
                   [horizon](std::int64_t t, double g) { return policy_q(t, g, horizon); }};
}

GapPolicy make_continuous_policy(Horizon horizon) {
  return GapPolicy{horizon, "continuous", [horizon](std::int64_t t, double g) {
                     check_round(t, horizon, "continuous policy");
                     return potential_q({static_cast<double>(t) - 1.0, g, horizon});
                   }};
}

GapPolicy make_uniform_policy(Horizon horizon) {
  return GapPolicy{horizon, "uniform", [](std::int64_t, double) { return 0.5; }};
}

CoverTables::CoverTables(Horizon horizon)
    : horizon_(horizon),
      v_(static_cast<std::size_t>((horizon.rounds + 1) * (horizon.rounds + 1)), 0.0),
      p_(static_cast<std::size_t>((horizon.rounds + 1) * (horizon.rounds + 1)), 0.0) {}

double CoverTables::value(std::int64_t t, std::int64_t g) const {
  const std::int64_t n = horizon_.rounds;
  if (t < 0 || t > n) {
    throw std::domain_error("CoverTables::value: t out of range");
  }
  if (g < 0) {
    throw std::domain_error("CoverTables::value: negative gap");
  }
  if (g > n) return 0.0;  // out-of-bounds entries read as 0
  return v_[static_cast<std::size_t>(t * (n + 1) + g)];
}

double CoverTables::probability(std::int64_t t, std::int64_t g) const {
  check_round(t, horizon_, "CoverTables::probability");
  if (g < 0 || g > horizon_.rounds - 1) {
    throw std::domain_error("CoverTables::probability: gap out of 0..T-1");
  }
  return p_[static_cast<std::size_t>(t * (horizon_.rounds + 1) + g)];
}

CoverTables build_cover_tables(Horizon horizon) {
  const std::int64_t n = horizon.rounds;
  CoverTables tables(horizon);
  auto at = [&](std::int64_t t, std::int64_t g) -> double& {
    return tables.v_[static_cast<std::size_t>(t * (n + 1) + g)];
  };
  auto read = [&](std::int64_t t, std::int64_t g) -> double {
    return g > n ? 0.0 : at(t, g);
  };
  for (std::int64_t t = n - 1; t >= 0; --t) {
    at(t, 0) = read(t + 1, 1) + 0.5;
    for (std::int64_t g = 1; g < n; ++g) {
      at(t, g) = 0.5 * (read(t + 1, g + 1) + read(t + 1, g - 1));
    }
    at(t, n) = 0.0;
  }
  for (std::int64_t t = 1; t <= n; ++t) {
    tables.p_[static_cast<std::size_t>(t * (n + 1))] = 0.5;
    for (std::int64_t g = 1; g <= n - 1; ++g) {
      tables.p_[static_cast<std::size_t>(t * (n + 1) + g)] =
          0.5 * (read(t, g - 1) - read(t, g + 1));
    }
  }
  return tables;
}

double cover_value_root(Horizon horizon) {
  const std::int64_t n = horizon.rounds;
  std::vector<double> next(static_cast<std::size_t>(n + 1), 0.0);
  std::vector<double> cur(static_cast<std::size_t>(n + 1), 0.0);
  auto read = [&](const std::vector<double>& row, std::int64_t g) {
    return g > n ? 0.0 : row[static_cast<std::size_t>(g)];
  };
  for (std::int64_t t = n - 1; t >= 0; --t) {
    cur[0] = read(next, 1) + 0.5;
    for (std::int64_t g = 1; g < n; ++g) {
      cur[static_cast<std::size_t>(g)] =
          0.5 * (read(next, g + 1) + read(next, g - 1));
    }
    cur[static_cast<std::size_t>(n)] = 0.0;
    std::swap(cur, next);
  }
  return next[0];
}

double cover_pstar_closed_form(std::int64_t t, std::int64_t g, Horizon horizon) {
  check_round(t, horizon, "cover_pstar_closed_form");
  if (g < 0 || g > horizon.rounds - 1) {
    throw std::domain_error("cover_pstar_closed_form: gap out of 0..T-1");
  }
  const std::int64_t m = horizon.rounds - t;  // walk length
  if (g > m) return 0.0;                      // walk cannot reach g
  if (g == 0) return 0.5;                     // Pr(S=0)/2 + (1 - Pr(S=0))/2
  // Numerator over 2^m: [m+g even] C(m,(m+g)/2) / 2 + sum_{k>g} C(m,(m+k)/2).
  BigInt twice_num = 0;  // numerator scaled by 2 to keep it integral
  BigInt binom = 1;      // C(m, j), built incrementally
  std::int64_t j = 0;
  auto advance_to = [&](std::int64_t target) {
    for (; j < target; ++j) {
      binom = binom * (m - j) / (j + 1);
    }
  };
  for (std::int64_t k = g; k <= m; ++k) {
    if ((m + k) % 2 != 0) continue;
    advance_to((m + k) / 2);
    twice_num += (k == g) ? binom : 2 * binom;
  }
  BigRat prob(twice_num, BigInt(1) << static_cast<unsigned>(m + 1));
  return prob.convert_to<double>();
}

GapPolicy make_cover_policy(std::shared_ptr<const CoverTables> tables) {
  if (!tables) {
    throw std::invalid_argument("make_cover_policy: null tables");
  }
  const Horizon horizon = tables->horizon();
  return GapPolicy{horizon, "cover",
                   [tables, horizon](std::int64_t t, double g) {
                     const double rounded = std::round(g);
                     if (std::abs(g - rounded) > 1e-9) {
                       throw std::domain_error(
                           "Cover policy requires binary adversary (integer gap, got " +
                           std::to_string(g) + ")");
                     }
                     return tables->probability(t, static_cast<std::int64_t>(rounded));
                   }};
}

ExpertDistribution act(const GapPolicy& policy, std::int64_t t, double g,
                       Lagging lagging) {
  if (!(g >= 0.0)) {
    throw std::domain_error("act: gap must be nonnegative");
  }
  if (g == 0.0) {
    return {0.5, 0.5};
  }
  if (lagging == Lagging::none) {
    throw std::domain_error("act: lagging expert required when gap > 0");
  }
  const double p = policy.mass(t, g);
  if (lagging == Lagging::expert1) {
    return {p, 1.0 - p};
  }
  return {1.0 - p, p};
}

ExpertDistribution GapPolicyPlayer::choose(std::int64_t t, double loss1,
                                           double loss2) {
  const double g = std::abs(loss1 - loss2);
  Lagging lag = Lagging::none;
  if (loss1 > loss2) {
    lag = Lagging::expert1;
  } else if (loss2 > loss1) {
    lag = Lagging::expert2;
  }
  return act(policy_, t, g, lag);
}

double default_mwu_eta(Horizon horizon) {
  return std::sqrt(8.0 * std::log(2.0) / static_cast<double>(horizon.rounds));
}

MwuPlayer::MwuPlayer(Horizon horizon, double eta) : eta_(eta) {
  if (!std::isfinite(eta) || eta < 0.0) {
    throw std::domain_error("MwuPlayer: eta must be finite and nonnegative");
  }
  (void)horizon;
  label_ = "mwu(eta=" + std::to_string(eta_) + ")";
}

MwuPlayer::MwuPlayer(Horizon horizon) : MwuPlayer(horizon, default_mwu_eta(horizon)) {}

ExpertDistribution MwuPlayer::choose(std::int64_t, double loss1, double loss2) {
  // x1 = w1/(w1+w2) with w_i = exp(-eta L_i), computed overflow-free.
  const double x1 = 1.0 / (1.0 + std::exp(eta_ * (loss1 - loss2)));
  return {x1, 1.0 - x1};
}

}  // namespace twoexperts
