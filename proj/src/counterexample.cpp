#include "rp/counterexample.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>

#include "rp/random.hpp"

namespace rp {

std::string to_string(CounterexampleVariant v) {
  switch (v) {
    case CounterexampleVariant::kAuto: return "auto";
    case CounterexampleVariant::kTrigPoly: return "trigpoly";
    case CounterexampleVariant::kMollified: return "mollified";
  }
  return "auto";
}

CounterexampleVariant variant_from_string(const std::string& s) {
  if (s == "auto") return CounterexampleVariant::kAuto;
  if (s == "trigpoly") return CounterexampleVariant::kTrigPoly;
  if (s == "mollified") return CounterexampleVariant::kMollified;
  throw ParseError("unknown counterexample variant '" + s + "'");
}

namespace {

void require_omega(int omega) {
  if (omega < 3)
    throw PreconditionError("counterexample: omega must be an integer >= 3 (got " + std::to_string(omega) + ")");
}

double abs_reduced(double theta) { return std::abs(std::remainder(theta, kTwoPi)); }

// Samples (profile * kernel)(theta) / (1 * phi) with the profile's junctions
// as quadrature breakpoints.
template <typename F, typename K>
CircleGrid mollify(int omega, const MollifierSpec& phi, std::size_t m, F&& profile, K&& kernel) {
  const double eps = phi.epsilon();
  const std::array<double, 4> junctions = {kPi / omega, -kPi / omega, 2.0 * kPi / omega, -2.0 * kPi / omega};
  std::vector<double> out(m);
  std::vector<double> cuts;
  for (std::size_t k = 0; k < m; ++k) {
    const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(m);
    cuts.assign({-eps, eps});
    for (double j : junctions) {
      const double s = std::remainder(theta - j, kTwoPi);
      if (std::abs(s) < eps) cuts.push_back(s);
    }
    std::sort(cuts.begin(), cuts.end());
    double mass = 0.0;
    double value = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      const double lo = cuts[i];
      const double hi = cuts[i + 1];
      if (hi <= lo) continue;
      const int panels = std::max(2, static_cast<int>(std::ceil(48.0 * (hi - lo) / (2.0 * eps))));
      mass += integrate([&](double s) { return phi(s); }, lo, hi, panels);
      value += integrate([&](double s) { return profile(theta - s) * kernel(s); }, lo, hi, panels);
    }
    out[k] = value / mass;
  }
  return CircleGrid(std::move(out));
}

// Harmonics of the projected series below this (relative to omega^2) are dropped.
constexpr double kProjectionFloor = 1e-14;

double certified_margin_floor(int omega, CounterexampleVariant v) {
  return v == CounterexampleVariant::kTrigPoly ? 0.0 : 0.5 * omega * omega - 1e-6;
}

}  // namespace

double u_star_value(int omega, double theta) {
  const double t = abs_reduced(theta);
  const double w = omega;
  if (t <= kPi / w) return 0.5 - std::cos(w * t);
  if (t <= 2.0 * kPi / w) return 1.5;
  return 0.5 + std::cos(w * t);
}

double u_star_forcing(int omega, double theta) {
  const double t = abs_reduced(theta);
  const double w2 = static_cast<double>(omega) * omega;
  const double j1 = kPi / omega;
  const double j2 = 2.0 * kPi / omega;
  if (t == j1 || t == j2) return w2;
  if (t < j1 || t > j2) return 0.5 * w2;
  return 1.5 * w2;
}

CircleGrid u_star_piecewise(int omega, std::size_t m) {
  require_omega(omega);
  if (m < 1024) throw PreconditionError("u_star_piecewise: need at least 1024 samples");
  return CircleGrid::sample([omega](double t) { return u_star_value(omega, t); }, m);
}

HarmonicSeries u_star_trigpoly() { return HarmonicSeries(1.0, {{2, -2.0, 0.0}, {4, -1.0, 0.0}}); }

CircleGrid mollify_u_star(int omega, const MollifierSpec& phi, std::size_t m) {
  require_omega(omega);
  return mollify(
      omega, phi, m, [omega](double t) { return u_star_value(omega, t); }, [&phi](double s) { return phi(s); });
}

CircleGrid mollify_u_star_second_derivative(int omega, const MollifierSpec& phi, std::size_t m) {
  require_omega(omega);
  return mollify(
      omega, phi, m, [omega](double t) { return u_star_value(omega, t); },
      [&phi](double s) { return phi.second_derivative(s); });
}

CircleGrid mollify_u_star_forcing(int omega, const MollifierSpec& phi, std::size_t m) {
  require_omega(omega);
  return mollify(
      omega, phi, m, [omega](double t) { return u_star_forcing(omega, t); }, [&phi](double s) { return phi(s); });
}

double default_epsilon(int omega) { return kPi / (4.0 * omega); }

CounterexampleBundle build_counterexample(int omega, const CounterexampleOptions& options) {
  require_omega(omega);
  CounterexampleVariant variant = options.variant;
  if (variant == CounterexampleVariant::kAuto)
    variant = omega == 3 ? CounterexampleVariant::kTrigPoly : CounterexampleVariant::kMollified;
  if (variant == CounterexampleVariant::kTrigPoly && omega != 3)
    throw PreconditionError("counterexample: the trigonometric polynomial variant exists only for omega = 3");

  const Frequency w(omega);
  const double w2 = static_cast<double>(omega) * omega;
  CounterexampleBundle b;
  b.omega = omega;
  b.variant = variant;
  b.grid_m = options.grid_m;

  if (variant == CounterexampleVariant::kTrigPoly) {
    b.u_star = u_star_trigpoly();
    b.h = differentiate(b.u_star, 2) + w2 * b.u_star;
  } else {
    const double eps = options.epsilon.value_or(default_epsilon(omega));
    if (!(eps > 0.0 && eps < kPi / (3.0 * omega))) {
      std::ostringstream os;
      os << "counterexample: epsilon " << eps << " outside (0, pi/(3 omega)) = (0, " << kPi / (3.0 * omega) << ")";
      throw PreconditionError(os.str());
    }
    if (eps < 2.0 * kTwoPi / static_cast<double>(options.grid_m))
      throw PreconditionError("counterexample: epsilon is not resolved by the grid");
    b.epsilon = eps;
    const MollifierSpec phi(eps);
    const std::size_t m = options.grid_m;
    const int n_max = static_cast<int>(m / 4);
    CircleGrid u_grid = mollify_u_star(omega, phi, m);
    const CircleGrid h_grid = mollify_u_star_forcing(omega, phi, m);
    const CircleGrid u2_grid = mollify_u_star_second_derivative(omega, phi, m);
    double defect = 0.0;
    for (std::size_t k = 0; k < m; ++k) defect = std::max(defect, std::abs(u2_grid[k] + w2 * u_grid[k] - h_grid[k]));
    b.commutation_defect = defect;
    const double floor = kProjectionFloor * w2;
    b.u_star = analyze(u_grid, n_max).pruned(floor);
    b.h = analyze(h_grid, n_max).pruned(floor);
    b.u_star_grid = std::move(u_grid);
  }

  b.h_positivity = certified_lower_bound(b.h, b.grid_m);
  b.resonance = resonance_check(b.h, w);
  if (b.h_positivity.certified_lower_bound < certified_margin_floor(omega, variant) ||
      !(b.h_positivity.certified_lower_bound > 0.0)) {
    std::ostringstream os;
    os << "counterexample: certified minimum of h is " << b.h_positivity.certified_lower_bound;
    throw CertificationError(os.str());
  }
  if (!b.resonance.passes) throw ResonanceError(b.resonance);

  const HarmonicSeries u_p = particular_solution(b.h, w);
  const auto cert = nonexistence_search(u_p, w);
  if (!cert || cert->sum >= -0.5) {
    std::ostringstream os;
    os << "counterexample: no nonexistence certificate with sum < -1/2";
    if (cert) os << " (best sum " << cert->sum << ")";
    throw CertificationError(os.str());
  }
  b.nonexistence = *cert;
  b.margin = positivity_margin(u_p, w, b.grid_m);
  return b;
}

void verify_bundle(const CounterexampleBundle& b) {
  require_omega(b.omega);
  const Frequency w(b.omega);
  const BoundCertificate pos = certified_lower_bound(b.h, b.grid_m);
  if (!(pos.certified_lower_bound > 0.0))
    throw CertificationError("bundle: h is not certified positive");
  const double scale = 1e-8 * (1.0 + std::abs(pos.certified_lower_bound));
  if (std::abs(pos.certified_lower_bound - b.h_positivity.certified_lower_bound) > scale)
    throw CertificationError("bundle: stored positivity certificate does not match recomputation");

  const ResonanceReport res = resonance_check(b.h, w);
  if (!res.passes) throw ResonanceError(res);
  if (!b.resonance.passes) throw CertificationError("bundle: stored resonance report does not pass");

  const auto cert = nonexistence_search(particular_solution(b.h, w), w);
  if (!cert) throw CertificationError("bundle: no nonexistence certificate on recomputation");
  if (cert->j != b.nonexistence.j || cert->k != b.nonexistence.k ||
      std::abs(cert->sum - b.nonexistence.sum) > 1e-9 * (1.0 + std::abs(cert->sum)))
    throw CertificationError("bundle: stored nonexistence certificate does not match recomputation");
}

SymmetryReport symmetry_and_open_question_report(const CounterexampleBundle& b) {
  SymmetryReport r;
  const std::size_t m = std::max<std::size_t>(4096, 2 * static_cast<std::size_t>(b.u_star.degree()) + 2);
  auto sup = [m](const HarmonicSeries& s) {
    if (s.harmonics().empty() && s.a0() == 0.0) return 0.0;
    const CircleGrid g = synthesize(s, m);
    return std::max(std::abs(g.min()), std::abs(g.max()));
  };
  r.evenness_defect = sup(b.u_star - b.u_star.reflected());
  if (b.omega == 3) {
    const HarmonicSeries v = b.u_star.shifted(kPi / 2.0);
    r.half_turn_defect = sup(v - v.reflected());
  }
  const Harmonic c1 = b.h.coefficient(1);
  const Harmonic c2 = b.h.coefficient(2);
  r.h_cos1 = kPi * c1.a;
  r.h_sin1 = kPi * c1.b;
  r.h_cos2 = kPi * c2.a;
  r.h_sin2 = kPi * c2.b;
  return r;
}

ExplorationReport explore_omega2(std::uint64_t seed, std::size_t trials, int degree, std::size_t grid_m) {
  if (degree < 0 || degree > 16) throw PreconditionError("explore_omega2: degree must lie in [0, 16]");
  const Frequency w(2.0);
  ExplorationReport report;
  report.seed = seed;
  report.trials = trials;
  report.degree = degree;
  for (std::size_t trial = 0; trial < trials; ++trial) {
    SplitMix64 rng(derive_seed(seed, trial));
    std::vector<Harmonic> hs;
    const double a0 = rng.uniform(0.5, 1.5);
    for (int n = 1; n <= degree; ++n) {
      if (n == 2) continue;
      hs.push_back({n, rng.uniform(-1.0, 1.0) / (static_cast<double>(n) * n), 0.0});
    }
    ExplorationCandidate c;
    c.trial = trial;
    c.u_candidate = HarmonicSeries(a0, std::move(hs));
    const HarmonicSeries h = differentiate(c.u_candidate, 2) + 4.0 * c.u_candidate;
    c.h_certified_min = certified_lower_bound(h, grid_m).certified_lower_bound;
    c.accepted = c.h_certified_min > 0.0;
    if (c.accepted) {
      const HarmonicSeries u_p = particular_solution(h, w);
      c.margin = positivity_margin(u_p, w, grid_m);
      ++report.accepted;
      if (!report.most_negative_margin || c.margin->margin < *report.most_negative_margin) {
        report.most_negative_margin = c.margin->margin;
        report.most_negative_trial = trial;
      }
    }
    report.candidates.push_back(std::move(c));
  }
  return report;
}

}  // namespace rp
