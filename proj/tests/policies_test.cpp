#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <stdexcept>

#include "twoexperts/math.hpp"
#include "twoexperts/policies.hpp"

using namespace twoexperts;

TEST_CASE("cover tables match the hand recursion at T = 3") {
  const CoverTables tables = build_cover_tables(Horizon(3));
  // Backward pass by hand: V[2] = (0.5, 0, 0, 0), V[1] = (0.5, 0.25, 0, 0),
  // V[0] = (0.75, 0.25, 0.125, 0).
  CHECK(tables.value(3, 0) == 0.0);
  CHECK(tables.value(2, 0) == 0.5);
  CHECK(tables.value(2, 1) == 0.0);
  CHECK(tables.value(1, 0) == 0.5);
  CHECK(tables.value(1, 1) == 0.25);
  CHECK(tables.value(0, 0) == 0.75);
  CHECK(tables.value(0, 1) == 0.25);
  CHECK(tables.value(0, 2) == 0.125);
  CHECK(tables.value(0, 3) == 0.0);
  CHECK(tables.value(0, 7) == 0.0);  // out of bounds reads 0

  CHECK(tables.probability(1, 0) == 0.5);
  CHECK(tables.probability(1, 1) == 0.25);
  CHECK(tables.probability(1, 2) == 0.125);
  CHECK(tables.probability(2, 1) == 0.25);
  CHECK(tables.probability(2, 2) == 0.0);
  CHECK(tables.probability(3, 1) == 0.0);

  CHECK_THROWS_AS(tables.value(4, 0), std::domain_error);
  CHECK_THROWS_AS(tables.value(0, -1), std::domain_error);
  CHECK_THROWS_AS(tables.probability(0, 0), std::domain_error);
  CHECK_THROWS_AS(tables.probability(1, 3), std::domain_error);
}

TEST_CASE("cover_value_root agrees with the full table") {
  for (std::int64_t T : {1, 2, 3, 7, 32, 150}) {
    const CoverTables tables = build_cover_tables(Horizon(T));
    CHECK(cover_value_root(Horizon(T)) == tables.value(0, 0));
  }
}

TEST_CASE("closed-form p* equals the DP table") {
  for (std::int64_t T : {1, 2, 3, 16, 64, 256}) {
    const Horizon horizon(T);
    const CoverTables tables = build_cover_tables(horizon);
    double worst = 0.0;
    for (std::int64_t t = 1; t <= T; ++t) {
      for (std::int64_t g = 0; g <= T - 1; ++g) {
        const double diff =
            std::abs(cover_pstar_closed_form(t, g, horizon) -
                     tables.probability(t, g));
        worst = std::max(worst, diff);
      }
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("p* is a probability, at most 1/2, and decreasing in the gap") {
  const Horizon horizon(40);
  const CoverTables tables = build_cover_tables(horizon);
  for (std::int64_t t = 1; t <= 40; ++t) {
    double prev = 0.5;
    for (std::int64_t g = 0; g <= 39; ++g) {
      const double p = tables.probability(t, g);
      CHECK(p >= 0.0);
      CHECK(p <= 0.5 + 1e-12);
      CHECK(p <= prev + 1e-12);
      prev = p;
    }
  }
}

TEST_CASE("V* satisfies the discrete backward heat equation") {
  const Horizon horizon(24);
  const CoverTables tables = build_cover_tables(horizon);
  for (std::int64_t t = 0; t < 24; ++t) {
    CHECK(tables.value(t, 0) == tables.value(t + 1, 1) + 0.5);
    for (std::int64_t g = 1; g < 24; ++g) {
      CHECK(tables.value(t, g) ==
            0.5 * (tables.value(t + 1, g + 1) + tables.value(t + 1, g - 1)));
    }
    CHECK(tables.value(t, 24) == 0.0);
  }
}

TEST_CASE("cover policy rejects fractional gaps") {
  auto tables = std::make_shared<const CoverTables>(build_cover_tables(Horizon(8)));
  const GapPolicy policy = make_cover_policy(tables);
  CHECK(policy.mass(1, 2.0) == tables->probability(1, 2));
  CHECK(policy.mass(3, 1.0 + 1e-12) == tables->probability(3, 1));
  CHECK_THROWS_AS(policy.mass(1, 1.5), std::domain_error);
  CHECK_THROWS_AS(make_cover_policy(nullptr), std::invalid_argument);
}

TEST_CASE("erfc and continuous policies evaluate the potential") {
  const Horizon T(10);
  const GapPolicy aq = make_erfc_policy(T);
  CHECK(aq.label == "erfc");
  CHECK(aq.mass(4, 0.0) == 0.5);
  CHECK(aq.mass(9, 1.0) ==
        doctest::Approx(0.19522578889230152).epsilon(1e-13));
  CHECK(aq.mass(10, 3.0) == 0.0);

  const GapPolicy cont = make_continuous_policy(T);
  CHECK(cont.label == "continuous");
  CHECK(cont.mass(4, 0.0) == 0.5);
  // Q(8, 2) = erfc(1)/2 with two rounds remaining.
  CHECK(cont.mass(9, 2.0) ==
        doctest::Approx(0.078649603525142565).epsilon(1e-14));
  // Round T reads Q(T-1, g), still inside Q's domain.
  CHECK(cont.mass(10, 0.0) == 0.5);
  CHECK_THROWS_AS(cont.mass(11, 1.0), std::domain_error);
  CHECK_THROWS_AS(cont.mass(0, 1.0), std::domain_error);

  const GapPolicy uni = make_uniform_policy(T);
  CHECK(uni.mass(1, 7.0) == 0.5);
}

TEST_CASE("act places mass on the lagging expert") {
  const Horizon T(10);
  const GapPolicy aq = make_erfc_policy(T);
  const ExpertDistribution tie = act(aq, 3, 0.0, Lagging::none);
  CHECK(tie.x1 == 0.5);
  CHECK(tie.x2 == 0.5);
  const double p = aq.mass(9, 1.0);
  const ExpertDistribution lag1 = act(aq, 9, 1.0, Lagging::expert1);
  CHECK(lag1.x1 == p);
  CHECK(lag1.x2 == 1.0 - p);
  const ExpertDistribution lag2 = act(aq, 9, 1.0, Lagging::expert2);
  CHECK(lag2.x1 == 1.0 - p);
  CHECK(lag2.x2 == p);
  CHECK_THROWS_AS(act(aq, 9, 1.0, Lagging::none), std::domain_error);
  CHECK_THROWS_AS(act(aq, 9, -1.0, Lagging::expert1), std::domain_error);
}

TEST_CASE("GapPolicyPlayer derives gap and lagging expert from losses") {
  GapPolicyPlayer player(make_erfc_policy(Horizon(10)));
  const ExpertDistribution even = player.choose(1, 0.0, 0.0);
  CHECK(even.x1 == 0.5);
  const double p = policy_q(9, 2.0, Horizon(10));
  const ExpertDistribution d = player.choose(9, 5.0, 3.0);
  CHECK(d.x1 == p);
  CHECK(d.x2 == 1.0 - p);
  CHECK(player.gap_policy() != nullptr);
  CHECK(player.label() == "erfc");
}

TEST_CASE("MWU weights") {
  MwuPlayer mwu(Horizon(10), 1.0);
  const ExpertDistribution d = mwu.choose(2, 1.0, 0.0);
  CHECK(d.x1 == doctest::Approx(0.2689414213699951).epsilon(1e-15));
  CHECK(d.x2 == doctest::Approx(0.7310585786300049).epsilon(1e-15));
  const ExpertDistribution tie = mwu.choose(2, 3.0, 3.0);
  CHECK(tie.x1 == 0.5);

  MwuPlayer flat(Horizon(10), 0.0);
  const ExpertDistribution any = flat.choose(5, 9.0, 0.0);
  CHECK(any.x1 == 0.5);

  MwuPlayer tuned(Horizon(16));
  CHECK(tuned.eta() ==
        doctest::Approx(std::sqrt(8.0 * std::log(2.0) / 16.0)).epsilon(1e-15));
  CHECK(tuned.gap_policy() == nullptr);
  CHECK_THROWS_AS(MwuPlayer(Horizon(10), -0.5), std::domain_error);
}
