#pragma once

#include <cstdint>

namespace twoexperts {

// Total number of rounds of a game. Always at least 1.
struct Horizon {
  std::int64_t rounds;
  explicit Horizon(std::int64_t t);
};

// Evaluation point of the potentials Q and R. Time is real and must stay
// strictly below the horizon; the gap may be signed (identities such as
// Q(t,-g) = 1 - Q(t,g) need negative arguments even though play-time gaps
// are nonnegative).
struct PotentialPoint {
  double t;
  double g;
  Horizon horizon;
};

// Complementary error function, 1 - (2/sqrt(pi)) * int_0^z exp(-x^2) dx.
// Relative error <= 1e-14 on |z| <= 6. Rejects non-finite input.
double erfc(double z);

// Q(t,g) = erfc(g / sqrt(2(T-t))) / 2. Value in [0,1]; Q(t,0) = 1/2 exactly.
double potential_q(const PotentialPoint& pt);

// R(t,g) = (g/2) erfc(g/sqrt(2(T-t)))
//          - sqrt((T-t)/(2 pi)) exp(-g^2/(2(T-t))) + sqrt(T/(2 pi)).
// Antiderivative of Q in g; satisfies the backwards heat equation and
// R(t,g) <= sqrt(T/(2 pi)) everywhere on [0,T) x R.
double potential_r(const PotentialPoint& pt);

struct PartialsR {
  double dt;   // d/dt R
  double dgg;  // d^2/dg^2 R
  double dg3;  // d^3/dg^3 R
};

// Closed-form partial derivatives of R:
//   dt  =  exp(-g^2/(2(T-t))) / (2 sqrt(2 pi (T-t)))
//   dgg = -exp(-g^2/(2(T-t))) / sqrt(2 pi (T-t))
//   dg3 =  g (T-t)^{-3/2} exp(-g^2/(2(T-t))) / sqrt(2 pi)
// dt + dgg/2 = 0 (BHE).
PartialsR partials_r(const PotentialPoint& pt);

struct DiscErrors {
  double rt;   // dt R - (R(t,g) - R(t-1,g))
  double rgg;  // dgg R - (R(t,g+1) + R(t,g-1) - 2 R(t,g))
};

// One-step discretization errors of the time derivative and the second gap
// derivative of R. Bounded above by error_bounds(T - t).
DiscErrors disc_errors(const PotentialPoint& pt);

struct ErrorBoundValues {
  double bt;   // sqrt(2)/(8 sqrt(pi)) * (T-t)^{-3/2}
  double bgg;  // 2 sqrt(2)/(3 sqrt(pi)) * (T-t)^{-3/2}
};

// Analytic upper bounds on the discretization errors as a function of the
// distance T - t to the horizon (must be positive).
ErrorBoundValues error_bounds(double gap_to_horizon);

// The discretized optimal policy:
//   q(t,g) = (R(t,g+1) - R(t,g-1)) / 2   for t < T,
//   q(T,g) = 1/2 if g = 0 else 0.
// q(t,0) = 1/2 exactly for every t. The result is clamped to [0,1];
// an excursion beyond 1e-12 outside [0,1] indicates a bug and throws
// InvariantViolation instead of being silently clamped.
double policy_q(std::int64_t t, double g, Horizon horizon);

}  // namespace twoexperts
