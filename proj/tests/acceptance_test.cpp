// End-to-end acceptance suite. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails. Runs in minutes at desk scale.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <memory>
#include <random>
#include <vector>

#include "twoexperts/adversaries.hpp"
#include "twoexperts/engine.hpp"
#include "twoexperts/math.hpp"
#include "twoexperts/oracles.hpp"
#include "twoexperts/policies.hpp"

using namespace twoexperts;

namespace {

constexpr double kPi = 3.14159265358979323846;

bool all_pass = true;

void report(int number, const char* description, bool pass) {
  std::printf("criterion %2d: %s - %s\n", number, pass ? "PASS" : "FAIL",
              description);
  std::fflush(stdout);
  all_pass = all_pass && pass;
}

double regret_cap(std::int64_t T) {
  return std::sqrt(static_cast<double>(T) / (2.0 * kPi)) + 1.24;
}

// 1. For T = 1..16 the exact game value is E[Z_{T-1}(0)]/2, and brute force,
//    the adversary DP, and the closed form all agree (rational equality on
//    the exact path, 1e-12 on the float path).
bool criterion_game_value() {
  for (std::int64_t T = 1; T <= 16; ++T) {
    const Horizon horizon(T);
    const BigRat target = passages_exact_rational(T - 1) / 2;
    const exact::ExactCoverTables ex = exact::build_cover_tables(horizon);
    if (ex.value(0, 0) != target) return false;
    if (exact::worst_case_value(ex) != target) return false;
    if (exact::brute_force_worst(ex) != target) return false;

    const double target_d = passages_exact(T - 1) / 2.0;
    auto tables = std::make_shared<const CoverTables>(build_cover_tables(horizon));
    const GapPolicy cover = make_cover_policy(tables);
    if (std::abs(tables->value(0, 0) - target_d) > 1e-12) return false;
    if (std::abs(worst_case_value(cover, horizon) - target_d) > 1e-12) return false;
    if (std::abs(brute_force_worst(cover, horizon).regret - target_d) > 1e-12) {
      return false;
    }
  }
  return true;
}

// 2. The erfc policy's exact worst-case regret is at most
//    sqrt(T/(2 pi)) + 1.24 for T = 2, 4, ..., 4096.
bool criterion_erfc_regret() {
  for (std::int64_t T = 2; T <= 4096; T *= 2) {
    const Horizon horizon(T);
    const double worst = worst_case_value(make_erfc_policy(horizon), horizon);
    if (worst > regret_cap(T)) {
      std::fprintf(stderr, "  T=%lld worst=%.12f cap=%.12f\n",
                   static_cast<long long>(T), worst, regret_cap(T));
      return false;
    }
  }
  return true;
}

// 3. No policy's worst case falls below the game value E[Z_{T-1}(0)]/2, and
//    Cover's policy attains it.
bool criterion_minimax_floor() {
  for (std::int64_t T : {2, 8, 32, 128, 512, 1024}) {
    const Horizon horizon(T);
    const double floor = passages_exact(T - 1) / 2.0;
    for (const GapPolicy& policy :
         {make_erfc_policy(horizon), make_continuous_policy(horizon),
          make_uniform_policy(horizon)}) {
      if (worst_case_value(policy, horizon) < floor - 1e-12) return false;
    }
    if (std::abs(cover_worst_case_value(horizon) - floor) > 1e-9) return false;
  }
  return std::abs(cover_worst_case_value(Horizon(4096)) -
                  passages_exact(4095) / 2.0) <= 1e-9;
}

// 4. Discretization errors stay within the analytic bounds on a dense grid
//    and on random off-grid points at T = 1024.
bool criterion_disc_errors() {
  const Horizon horizon(1024);
  for (std::int64_t t = 1; t <= 1023; ++t) {
    const ErrorBoundValues b = error_bounds(static_cast<double>(1024 - t));
    const std::int64_t gmax = std::min<std::int64_t>(t, 64);
    for (std::int64_t g = 0; g <= gmax; ++g) {
      const DiscErrors e = disc_errors(
          {static_cast<double>(t), static_cast<double>(g), horizon});
      if (e.rt > b.bt + 1e-12 || e.rgg > b.bgg + 1e-12) return false;
    }
  }
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> time(1.0, 1023.0);
  std::uniform_real_distribution<double> gap(0.0, 100.0);
  for (int i = 0; i < 10000; ++i) {
    const double t = time(rng);
    const DiscErrors e = disc_errors({t, gap(rng), horizon});
    const ErrorBoundValues b = error_bounds(1024.0 - t);
    if (e.rt > b.bt + 1e-12 || e.rgg > b.bgg + 1e-12) return false;
  }
  return true;
}

// 5. R satisfies the backwards heat equation (closed form to 1e-12, finite
//    differences to 1e-6) and is concave in the gap.
bool criterion_heat_equation() {
  const Horizon horizon(1024);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> time(0.0, 1020.0);
  std::uniform_real_distribution<double> gap(-40.0, 40.0);
  for (int i = 0; i < 5000; ++i) {
    const double t = time(rng);
    const double g = gap(rng);
    const PartialsR p = partials_r({t, g, horizon});
    if (std::abs(p.dt + 0.5 * p.dgg) > 1e-12) return false;
    const double h = 1e-4;
    const double fd_dt =
        (potential_r({t + h, g, horizon}) - potential_r({t - h, g, horizon})) /
        (2.0 * h);
    // The second difference needs a larger step: at h = 1e-4 the rounding
    // noise of R (up to ~13 here) divided by h^2 is already ~1e-6.
    const double hg = 1e-3;
    const double fd_dgg = (potential_r({t, g + hg, horizon}) +
                           potential_r({t, g - hg, horizon}) -
                           2.0 * potential_r({t, g, horizon})) /
                          (hg * hg);
    if (std::abs(fd_dt + 0.5 * fd_dgg) > 1e-6) return false;
    const double second = potential_r({t, g + 1.0, horizon}) +
                          potential_r({t, g - 1.0, horizon}) -
                          2.0 * potential_r({t, g, horizon});
    if (second > 1e-12) return false;
  }
  return true;
}

// 6. Over 1e5 seeded random general-cost games at T = 256 the erfc player's
//    per-round regret increments respect the potential-drop bound (residual
//    <= 1e-9) and every total stays under sqrt(T/(2 pi)) + 1.24.
bool criterion_random_games() {
  const Horizon horizon(256);
  const double cap = regret_cap(256);
  GapPolicyPlayer player(make_erfc_policy(horizon));
  double max_mid = -1.0;
  double max_last = -1.0;
  long long mid_violations = 0;
  long long last_violations = 0;
  double max_regret = -1.0;
  for (std::uint64_t seed = 0; seed < 100000; ++seed) {
    const Transcript tr = play(player, random_general(horizon, seed));
    const std::vector<double> residuals = per_round_bound_residuals(tr, horizon);
    for (std::size_t i = 0; i + 1 < residuals.size(); ++i) {
      if (residuals[i] > 1e-9) ++mid_violations;
      max_mid = std::max(max_mid, residuals[i]);
    }
    if (residuals.back() > 1e-9) ++last_violations;
    max_last = std::max(max_last, residuals.back());
    max_regret = std::max(max_regret, regret(tr));
  }
  std::printf(
      "  [info] rounds t < T: max residual %.3e (%lld violations)\n"
      "  [info] round  t = T: max residual %.3e (%lld violations)\n"
      "  [info] max regret %.6f (cap %.6f)\n",
      max_mid, mid_violations, max_last, last_violations, max_regret, cap);
  if (last_violations > 0) {
    std::printf(
        "  [info] expected failure: DeltaRegret(T) <= 1/2 does not hold at\n"
        "         fractional gaps g_{T-1} < 1 when q(T, g) = 0 for g > 0;\n"
        "         the total regret cap above is unaffected\n");
  }
  return max_mid <= 1e-9 && max_last <= 1e-9 && max_regret <= cap;
}

// 7. At T = 100 with 1e5 random restricted-binary games, the mean regrets of
//    the erfc player, Cover's player, and MWU all sit within 4 standard
//    errors of E[Z_99(0)]/2 and of each other.
bool criterion_monte_carlo() {
  const Horizon horizon(100);
  const double target = passages_exact(99) / 2.0;
  GapPolicyPlayer erfc_player(make_erfc_policy(horizon));
  auto tables = std::make_shared<const CoverTables>(build_cover_tables(horizon));
  GapPolicyPlayer cover_player(make_cover_policy(tables));
  MwuPlayer mwu(horizon);
  Player* players[] = {&erfc_player, &cover_player, &mwu};
  MonteCarloEstimate estimates[3];
  for (int i = 0; i < 3; ++i) {
    estimates[i] =
        expected_regret_random_adversary(*players[i], horizon, 100000, 12345);
    std::printf("  [info] %-18s mean %.5f +- %.5f (target %.5f)\n",
                players[i]->label().c_str(), estimates[i].mean,
                estimates[i].std_error, target);
    // Cover's p* equalizes the adversary's options, so its regret is the
    // same for every sequence and the standard error is (numerically) zero;
    // 1e-9 of absolute slack covers accumulated rounding in that case.
    if (std::abs(estimates[i].mean - target) >
        4.0 * estimates[i].std_error + 1e-9) {
      return false;
    }
  }
  for (int i = 0; i < 3; ++i) {
    for (int j = i + 1; j < 3; ++j) {
      const double combined =
          std::sqrt(estimates[i].std_error * estimates[i].std_error +
                    estimates[j].std_error * estimates[j].std_error);
      if (std::abs(estimates[i].mean - estimates[j].mean) >
          4.0 * combined + 1e-9) {
        return false;
      }
    }
  }
  return true;
}

// 8. The random-walk closed form for p* matches the DP table at T = 256.
bool criterion_pstar_closed_form() {
  const Horizon horizon(256);
  const CoverTables tables = build_cover_tables(horizon);
  double worst = 0.0;
  for (std::int64_t t = 1; t <= 256; ++t) {
    for (std::int64_t g = 0; g <= 255; ++g) {
      worst = std::max(worst, std::abs(cover_pstar_closed_form(t, g, horizon) -
                                       tables.probability(t, g)));
    }
  }
  std::printf("  [info] max |closed form - table| = %.3e\n", worst);
  return worst <= 1e-12;
}

// 9. The Stirling bracket contains C(2n,n) for every n up to 1000.
bool criterion_binomial_bracket() {
  for (std::int64_t n = 1; n <= 1000; ++n) {
    if (!central_binom_bracket_holds(n)) return false;
  }
  const auto [lower, upper] = central_binom_bounds(5);
  return lower <= 252.0 && 252.0 <= upper;
}

// 10. Per-round cost is O(1): median per-round latency at T = 1e6 is at most
//     3x the latency at T = 1e3, and total time grows linearly (each decade
//     costs at most 20x the previous one).
bool criterion_latency() {
  const std::int64_t grid[] = {1000, 10000, 100000, 1000000};
  double totals[4];
  for (int i = 0; i < 4; ++i) {
    const Horizon horizon(grid[i]);
    const CostSequence costs = random_restricted(horizon, 77);
    GapPolicyPlayer player(make_erfc_policy(horizon));
    double best = 1e100;
    const int reps = grid[i] <= 10000 ? 7 : 3;
    for (int rep = 0; rep < reps; ++rep) {
      const auto start = std::chrono::steady_clock::now();
      volatile double sink = play_summary(player, costs).regret;
      (void)sink;
      const auto stop = std::chrono::steady_clock::now();
      best = std::min(
          best, std::chrono::duration<double>(stop - start).count());
    }
    totals[i] = best;
    std::printf("  [info] T=%-8lld total %.4fs, per round %.1f ns\n",
                static_cast<long long>(grid[i]), best,
                1e9 * best / static_cast<double>(grid[i]));
  }
  const double per_small = totals[0] / 1e3;
  const double per_large = totals[3] / 1e6;
  if (per_large > 3.0 * per_small) return false;
  for (int i = 0; i + 1 < 4; ++i) {
    if (totals[i + 1] > 20.0 * totals[i]) return false;
  }
  return true;
}

// 11. Documented discrepancy: the quoted lower bound sqrt(2T/pi) + 3/5 on
//     E[Z_T(0)] already fails at T = 10 (3.123 > 2.707). The criterion
//     passes when the failure reproduces exactly as recorded; the upper
//     bound must still hold.
bool criterion_reported_bounds() {
  const auto [lower, upper] = passages_bounds(10);
  const double exact = passages_exact(10);
  std::printf("  [info] E[Z_10(0)] = %.8f, quoted bounds (%.8f, %.8f)\n",
              exact, lower, upper);
  return lower > exact && exact <= upper && exact == 2.70703125;
}

}  // namespace

int main() {
  report(1, "game value: brute force == DP == E[Z_{T-1}(0)]/2, T = 1..16",
         criterion_game_value());
  report(2, "erfc worst-case regret <= sqrt(T/2pi) + 1.24 up to T = 4096",
         criterion_erfc_regret());
  report(3, "minimax floor: every policy >= game value; Cover attains it",
         criterion_minimax_floor());
  report(4, "discretization errors within analytic bounds at T = 1024",
         criterion_disc_errors());
  report(5, "backwards heat equation and gap concavity of R",
         criterion_heat_equation());
  report(6, "per-round bound over 1e5 random general-cost games at T = 256",
         criterion_random_games());
  report(7, "mean regret vs random adversary matches E[Z_99(0)]/2",
         criterion_monte_carlo());
  report(8, "closed-form p* == DP table at T = 256 (<= 1e-12)",
         criterion_pstar_closed_form());
  report(9, "Stirling bracket contains C(2n,n) for n <= 1000",
         criterion_binomial_bracket());
  report(10, "O(1) per-round latency, linear total time",
         criterion_latency());
  report(11, "quoted E[Z] lower bound fails at T = 10 as documented",
         criterion_reported_bounds());
  return all_pass ? 0 : 1;
}
