#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "twoexperts/math.hpp"

namespace twoexperts {

// Probability distribution over the two experts.
struct ExpertDistribution {
  double x1;
  double x2;
};

enum class Lagging { expert1, expert2, none };

// A player strategy determined by the probability mass p(t,g) placed on the
// lagging expert. p(t,0) = 1/2 is required for every t.
struct GapPolicy {
  Horizon horizon;
  std::string label;
  std::function<double(std::int64_t t, double g)> mass;
};

// The erfc-based player A_q: delegates to policy_q, O(1) per call.
GapPolicy make_erfc_policy(Horizon horizon);

// The undiscretized player A_Q with p(t,g) = Q(t-1,g), evaluated at the
// state time t-1 so Q's domain constraint holds at every round including T.
GapPolicy make_continuous_policy(Horizon horizon);

// The constant p = 1/2 player ("uniform"); worst-case regret T/2.
GapPolicy make_uniform_policy(Horizon horizon);

// Cover's value table V*[t][g] (t, g in 0..T) and optimal probabilities
// P[t][g] (t in 1..T, g in 0..T-1), dense row-major, out-of-bounds reads 0.
class CoverTables {
 public:
  explicit CoverTables(Horizon horizon);

  Horizon horizon() const { return horizon_; }
  // V*[t][g]; g > T reads 0.
  double value(std::int64_t t, std::int64_t g) const;
  // p*(t,g) for t in 1..T, g in 0..T-1.
  double probability(std::int64_t t, std::int64_t g) const;

 private:
  friend CoverTables build_cover_tables(Horizon horizon);

  Horizon horizon_;
  std::vector<double> v_;
  std::vector<double> p_;
};

// Backward recursion for V* and p* (O(T^2) time and memory).
CoverTables build_cover_tables(Horizon horizon);

// V*[0][0] alone via a two-row recursion (O(T) memory).
double cover_value_root(Horizon horizon);

// p*(t,g) = Pr(S_{T-t} = g)/2 + Pr(S_{T-t} > g) for a symmetric random walk
// S of length T-t, from exact big-integer binomial coefficients.
double cover_pstar_closed_form(std::int64_t t, std::int64_t g, Horizon horizon);

// Gap policy backed by a finished CoverTables. Defined only for integral
// gaps (restricted binary play); non-integer g is a domain error.
GapPolicy make_cover_policy(std::shared_ptr<const CoverTables> tables);

// Distribution with mass p(t,g) on the lagging expert. `lagging` may be
// Lagging::none only when g = 0, where the result is (1/2, 1/2).
ExpertDistribution act(const GapPolicy& policy, std::int64_t t, double g,
                       Lagging lagging);

// Full player interface: sees the cumulative losses before round t and
// commits a distribution. Covers non-gap-based strategies such as MWU.
class Player {
 public:
  virtual ~Player() = default;
  virtual ExpertDistribution choose(std::int64_t t, double loss1, double loss2) = 0;
  virtual const std::string& label() const = 0;
  // Gap policies admit the worst-case DP; MWU does not.
  virtual const GapPolicy* gap_policy() const { return nullptr; }
};

// Adapts a GapPolicy to the Player interface. At ties expert 1 is labeled
// lagging; the distribution is (1/2,1/2) there so the label is unobservable.
class GapPolicyPlayer : public Player {
 public:
  explicit GapPolicyPlayer(GapPolicy policy) : policy_(std::move(policy)) {}
  ExpertDistribution choose(std::int64_t t, double loss1, double loss2) override;
  const std::string& label() const override { return policy_.label; }
  const GapPolicy* gap_policy() const override { return &policy_; }

 private:
  GapPolicy policy_;
};

// Multiplicative weights update with fixed step size eta:
// x(i) proportional to exp(-eta * L_t(i)).
class MwuPlayer : public Player {
 public:
  MwuPlayer(Horizon horizon, double eta);
  explicit MwuPlayer(Horizon horizon);  // eta = sqrt(8 ln 2 / T)
  ExpertDistribution choose(std::int64_t t, double loss1, double loss2) override;
  const std::string& label() const override { return label_; }
  double eta() const { return eta_; }

 private:
  double eta_;
  std::string label_;
};

double default_mwu_eta(Horizon horizon);

}  // namespace twoexperts
