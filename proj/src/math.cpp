#include "twoexperts/math.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "twoexperts/errors.hpp"

namespace twoexperts {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPolicyClampTol = 1e-12;

double remaining_time(const PotentialPoint& pt) {
  const double rem = static_cast<double>(pt.horizon.rounds) - pt.t;
  if (!(rem > 0.0)) {
    throw std::domain_error("potential evaluated at t >= T (T - t = " +
                            std::to_string(rem) + ")");
  }
  return rem;
}

}  // namespace

Horizon::Horizon(std::int64_t t) : rounds(t) {
  if (t < 1) {
    throw std::domain_error("horizon must be at least 1 round");
  }
}

double erfc(double z) {
  if (!std::isfinite(z)) {
    throw std::domain_error("erfc: non-finite argument");
  }
  return std::erfc(z);
}

double potential_q(const PotentialPoint& pt) {
  const double rem = remaining_time(pt);
  return 0.5 * erfc(pt.g / std::sqrt(2.0 * rem));
}

double potential_r(const PotentialPoint& pt) {
  const double rem = remaining_time(pt);
  const double total = static_cast<double>(pt.horizon.rounds);
  const double z = pt.g / std::sqrt(2.0 * rem);
  return 0.5 * pt.g * erfc(z) - std::sqrt(rem / (2.0 * kPi)) * std::exp(-z * z) +
         std::sqrt(total / (2.0 * kPi));
}

PartialsR partials_r(const PotentialPoint& pt) {
  const double rem = remaining_time(pt);
  const double gauss = std::exp(-pt.g * pt.g / (2.0 * rem));
  const double inv_sqrt = 1.0 / std::sqrt(2.0 * kPi * rem);
  PartialsR out;
  out.dt = 0.5 * inv_sqrt * gauss;
  out.dgg = -inv_sqrt * gauss;
  out.dg3 = gauss * pt.g / (std::sqrt(2.0 * kPi) * rem * std::sqrt(rem));
  return out;
}

DiscErrors disc_errors(const PotentialPoint& pt) {
  const PartialsR d = partials_r(pt);
  const PotentialPoint prev{pt.t - 1.0, pt.g, pt.horizon};
  const PotentialPoint up{pt.t, pt.g + 1.0, pt.horizon};
  const PotentialPoint down{pt.t, pt.g - 1.0, pt.horizon};
  const double r = potential_r(pt);
  DiscErrors out;
  out.rt = d.dt - (r - potential_r(prev));
  out.rgg = d.dgg - (potential_r(up) + potential_r(down) - 2.0 * r);
  return out;
}

ErrorBoundValues error_bounds(double gap_to_horizon) {
  if (!(gap_to_horizon > 0.0)) {
    throw std::domain_error("error_bounds: T - t must be positive");
  }
  const double scale = 1.0 / (gap_to_horizon * std::sqrt(gap_to_horizon));
  ErrorBoundValues out;
  out.bt = std::sqrt(2.0) / (8.0 * std::sqrt(kPi)) * scale;
  out.bgg = 2.0 * std::sqrt(2.0) / (3.0 * std::sqrt(kPi)) * scale;
  return out;
}

double policy_q(std::int64_t t, double g, Horizon horizon) {
  if (t < 1 || t > horizon.rounds) {
    throw std::domain_error("policy_q: round " + std::to_string(t) +
                            " outside 1.." + std::to_string(horizon.rounds));
  }
  if (!(g >= 0.0)) {
    throw std::domain_error("policy_q: gap must be nonnegative");
  }
  if (g == 0.0) {
    return 0.5;  // q(t,0) = 1/2 for every t, including t = T
  }
  if (t == horizon.rounds) {
    return 0.0;  // R is undefined at time T; all mass goes to the leader
  }
  const double time = static_cast<double>(t);
  const PotentialPoint up{time, g + 1.0, horizon};
  const PotentialPoint down{time, g - 1.0, horizon};
  const double raw = 0.5 * (potential_r(up) - potential_r(down));
  if (raw < -kPolicyClampTol || raw > 1.0 + kPolicyClampTol) {
    throw InvariantViolation("policy_q out of [0,1] by more than 1e-12: q(" +
                             std::to_string(t) + ", " + std::to_string(g) +
                             ") = " + std::to_string(raw));
  }
  if (raw < 0.0) return 0.0;
  if (raw > 1.0) return 1.0;
  return raw;
}

}  // namespace twoexperts
