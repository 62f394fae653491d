#include "doctest.h"
#include "rp/positivity.hpp"
#include "support.hpp"

using namespace rp;
using rp::testing::margin_oracle;

namespace {

const Frequency kOne(1.0);
const HarmonicSeries kTrigPoly(1.0, {{2, -2.0, 0.0}, {4, -1.0, 0.0}});

std::vector<double> samples(const HarmonicSeries& u, std::size_t m) {
  const CircleGrid g = synthesize(u, m);
  return {g.values().begin(), g.values().end()};
}

}  // namespace

TEST_CASE("positivity_margin examples") {
  SUBCASE("constant") {
    const MarginReport r = positivity_margin(HarmonicSeries(1.0), kOne);
    CHECK(r.margin == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(r.optimizer.alpha) < 1e-12);
    CHECK(std::abs(r.optimizer.beta) < 1e-12);
    CHECK(r.grid_m == 4096);
  }
  SUBCASE("the optimizer cancels a cosine kernel term") {
    const HarmonicSeries u(1.0, {{1, -5.0, 0.0}, {2, -1.0 / 3.0, 0.0}});
    const MarginReport r = positivity_margin(u, kOne);
    const double oracle = margin_oracle(samples(u, 4096), 1);
    CHECK(oracle == doctest::Approx(2.0 / 3.0).epsilon(1e-8));
    CHECK(r.margin == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
    CHECK(r.margin >= oracle - 1e-9);
    CHECK(r.optimizer.beta == doctest::Approx(5.0).epsilon(1e-9));
    // Only the continuum optimum is alpha = 0; on the grid any |alpha| of
    // order of the spacing leaves the sampled minimum unchanged.
    CHECK(std::abs(r.optimizer.alpha) < 4.0 * kTwoPi / 4096);
  }
  SUBCASE("omega = 3 polynomial") {
    const MarginReport r = positivity_margin(kTrigPoly, Frequency(3.0), 8192);
    CHECK(r.margin == doctest::Approx(-2.0).epsilon(1e-9));
    CHECK(margin_oracle(samples(kTrigPoly, 1024), 3) == doctest::Approx(-2.0).epsilon(1e-7));
  }
  SUBCASE("non-integer omega reduces to the certified minimum") {
    const HarmonicSeries u(1.0, {{1, 0.5, 0.0}});
    const MarginReport r = positivity_margin(u, Frequency(1.5));
    CHECK(r.margin == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.margin <= 0.5);
  }
}

TEST_CASE("margin agrees with an independent max-min search") {
  SplitMix64 rng(55);
  for (int trial = 0; trial < 12; ++trial) {
    const int omega = rng.uniform_int(1, 4);
    const HarmonicSeries u = rp::testing::random_series(rng, 6, 0.0, 2.0).without_harmonic(omega);
    const MarginReport r = positivity_margin(u, Frequency(omega), 1024);
    const double oracle = margin_oracle(samples(u, 1024), omega);
    CHECK(r.margin == doctest::Approx(oracle).epsilon(1e-7).scale(1.0));
    CHECK(r.margin >= synthesize(u, 1024).min() - 1e-12);
  }
}

TEST_CASE("margin is invariant under kernel shifts") {
  SplitMix64 rng(66);
  for (int trial = 0; trial < 20; ++trial) {
    const int omega = rng.uniform_int(1, 5);
    const Frequency w(omega);
    const HarmonicSeries u = rp::testing::random_series(rng, 8).without_harmonic(omega);
    const KernelCoeffs k{rng.uniform(-3.0, 3.0), rng.uniform(-3.0, 3.0)};
    const MarginReport base = positivity_margin(u, w, 2048);
    const MarginReport moved = positivity_margin(attach_kernel(u, w, k), w, 2048);
    CHECK(std::abs(base.margin - moved.margin) < 1e-9);
    // Shifted optimizers must give the same function, optima can be non-unique,
    // so compare the resulting minima instead of the coefficients.
    const HarmonicSeries a = attach_kernel(u, w, base.optimizer);
    const HarmonicSeries b = attach_kernel(attach_kernel(u, w, k), w, moved.optimizer);
    CHECK(std::abs(synthesize(a, 2048).min() - synthesize(b, 2048).min()) < 1e-9);
  }
}

TEST_CASE("margin candidates are certified when the margin is clearly positive") {
  const HarmonicSeries u(1.0, {{1, -5.0, 0.0}, {2, -1.0 / 3.0, 0.0}});
  const MarginReport r = positivity_margin(u, kOne);
  const KernelCandidate c = margin_candidate(u, kOne, r);
  CHECK(c.certificate.certified_lower_bound > 0.66);
  CHECK(c.certificate.certified_lower_bound <= r.margin + 1e-12);
}

TEST_CASE("positive_solution") {
  SUBCASE("h = 1") {
    const PositiveSolutionResult r = positive_solution(HarmonicSeries(1.0), kOne);
    CHECK(r.certificate.certified_lower_bound == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(r.solution.a0() == doctest::Approx(1.0));
    CHECK(r.residual <= 1e-12);
  }
  SUBCASE("h = 1 + cos 2t and its mirror") {
    for (double sign : {1.0, -1.0}) {
      const HarmonicSeries h(1.0, {{2, sign, 0.0}});
      const PositiveSolutionResult r = positive_solution(h, kOne);
      CHECK(r.certificate.certified_lower_bound >= 2.0 / 3.0 - 1e-8);
      CHECK(r.solution.coefficient(2).a == doctest::Approx(-sign / 3.0));
      CHECK(residual_sup(r.solution, h, kOne) <= 1e-9);
      CHECK(std::abs(r.form.a) < 1e-9);
      CHECK(std::abs(r.form.b) < 1e-9);
      CHECK(rp::testing::brute_min([&](double t) { return r.solution(t); }) >= r.certificate.certified_lower_bound);
    }
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(positive_solution(HarmonicSeries(0.0, {{2, 1.0, 0.0}}), kOne), PreconditionError);
    CHECK_THROWS_AS(positive_solution(HarmonicSeries(), kOne), PreconditionError);
    CHECK_THROWS_AS(positive_solution(HarmonicSeries(1.0), Frequency(2.0)), PreconditionError);
    CHECK_THROWS_AS(positive_solution(HarmonicSeries(2.0, {{1, 1.0, 0.0}}), kOne), ResonanceError);
  }
  SUBCASE("forcing that vanishes at a point") {
    // h = 1 - cos 2t touches zero; nonnegativity is all that is required.
    const PositiveSolutionResult r = positive_solution(HarmonicSeries(1.0, {{2, -1.0, 0.0}}), kOne);
    CHECK(r.certificate.certified_lower_bound > 0.0);
  }
}

TEST_CASE("nonexistence_search") {
  SUBCASE("omega = 3 polynomial") {
    const auto c = nonexistence_search(kTrigPoly, Frequency(3.0));
    REQUIRE(c.has_value());
    CHECK(c->j == 0);
    CHECK(c->k == 3);
    CHECK(c->sum == doctest::Approx(-4.0).epsilon(1e-12));
    CHECK(c->theta2 == doctest::Approx(kPi));
  }
  SUBCASE("constants have no certificate") {
    CHECK_FALSE(nonexistence_search(HarmonicSeries(1.0), kOne).has_value());
  }
  SUBCASE("requires an integer frequency") {
    CHECK_THROWS_AS(nonexistence_search(HarmonicSeries(1.0), Frequency(2.5)), PreconditionError);
  }
  SUBCASE("certificates are kernel zeros and bound the margin") {
    SplitMix64 rng(909);
    int found = 0;
    for (int trial = 0; trial < 60; ++trial) {
      const int omega = rng.uniform_int(2, 5);
      const Frequency w(omega);
      const HarmonicSeries u = rp::testing::random_series(rng, 9, -0.5, 0.5).without_harmonic(omega);
      const auto c = nonexistence_search(u, w);
      // Oracle: exhaustive pair scan.
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < 2 * omega; j += 2)
        for (int k = 1; k < 2 * omega; k += 2) best = std::min(best, u(j * kPi / omega) + u(k * kPi / omega));
      CHECK(c.has_value() == (best < 0.0));
      if (!c) continue;
      ++found;
      CHECK(c->j % 2 == 0);
      CHECK(c->k % 2 == 1);
      CHECK(c->sum == doctest::Approx(best));
      CHECK(std::abs(std::sin(omega * c->theta1)) < 1e-12);
      CHECK(std::cos(omega * c->theta2) == doctest::Approx(-1.0));
      CHECK(positivity_margin(u, w, 1024).margin <= -std::abs(c->sum) / 2.0 + 1e-3);
    }
    CHECK(found > 10);
  }
}
