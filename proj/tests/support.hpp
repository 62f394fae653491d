#pragma once

// Generators and independent oracles shared by the test binaries. Nothing
// here calls the code paths it is used to check.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "rp/random.hpp"
#include "rp/trig.hpp"

namespace rp::testing {

inline HarmonicSeries random_series(SplitMix64& rng, int degree, double a0_lo = -1.0, double a0_hi = 1.0) {
  std::vector<Harmonic> hs;
  for (int n = 1; n <= degree; ++n) {
    const double scale = 1.0 / n;
    hs.push_back({n, scale * rng.uniform(-1.0, 1.0), scale * rng.uniform(-1.0, 1.0)});
  }
  return HarmonicSeries(rng.uniform(a0_lo, a0_hi), std::move(hs));
}

/// h = g^2 + 1e-3 with deg g <= 4, harmonic 1 removed, kept only if it is
/// still nonnegative on a dense sample (rejection sampling).
inline HarmonicSeries random_nonnegative_forcing(SplitMix64& rng) {
  for (;;) {
    const int deg = rng.uniform_int(1, 4);
    const HarmonicSeries g = random_series(rng, deg);
    const HarmonicSeries h = (g * g + HarmonicSeries(1e-3)).without_harmonic(1);
    double lo = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 4096; ++k) lo = std::min(lo, h(kTwoPi * k / 4096.0));
    if (lo > 1e-4) return h;
  }
}

/// Plain evaluation by the definition, one std::cos/sin per term.
inline double eval_direct(const HarmonicSeries& f, double t) {
  double s = f.a0();
  for (const Harmonic& h : f.harmonics()) s += h.a * std::cos(h.n * t) + h.b * std::sin(h.n * t);
  return s;
}

/// Approximate global minimum: dense scan, then golden refinement around
/// the best samples. Returns a value >= the true minimum.
inline double brute_min(const std::function<double(double)>& f, int samples = 1 << 15) {
  std::vector<std::pair<double, double>> pts;
  pts.reserve(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) {
    const double t = kTwoPi * k / samples;
    pts.emplace_back(f(t), t);
  }
  std::partial_sort(pts.begin(), pts.begin() + 8, pts.end());
  double best = pts.front().first;
  const double step = kTwoPi / samples;
  for (int i = 0; i < 8; ++i) {
    double lo = pts[i].second - step;
    double hi = pts[i].second + step;
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    for (int it = 0; it < 80; ++it) {
      const double x1 = hi - r * (hi - lo);
      const double x2 = lo + r * (hi - lo);
      if (f(x1) < f(x2)) hi = x2;
      else lo = x1;
    }
    best = std::min(best, f(0.5 * (lo + hi)));
  }
  return best;
}

inline double trapezoid_mean(const std::function<double(double)>& f, int n) {
  double s = 0.0;
  for (int k = 0; k < n; ++k) s += f(kTwoPi * k / n);
  return s / n;
}

inline double second_difference(const std::function<double(double)>& f, double t, double h) {
  return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

/// max over (alpha, beta) of min_k [u_k + alpha sin(w t_k) + beta cos(w t_k)]
/// by nested golden-section search (the objective is concave).
inline double margin_oracle(const std::vector<double>& u, int omega, double radius = 20.0) {
  const std::size_t m = u.size();
  std::vector<double> s(m), c(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = omega * kTwoPi * static_cast<double>(k) / static_cast<double>(m);
    s[k] = std::sin(t);
    c[k] = std::cos(t);
  }
  auto value = [&](double a, double b) {
    double lo = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < m; ++k) lo = std::min(lo, u[k] + a * s[k] + b * c[k]);
    return lo;
  };
  auto golden = [](auto&& f, double lo, double hi) {
    const double r = (std::sqrt(5.0) - 1.0) / 2.0;
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double f1 = f(x1), f2 = f(x2);
    for (int it = 0; it < 90; ++it) {
      if (f1 < f2) {
        lo = x1; x1 = x2; f1 = f2; x2 = lo + r * (hi - lo); f2 = f(x2);
      } else {
        hi = x2; x2 = x1; f2 = f1; x1 = hi - r * (hi - lo); f1 = f(x1);
      }
    }
    return std::max(f1, f2);
  };
  return golden([&](double a) { return golden([&](double b) { return value(a, b); }, -radius, radius); },
                -radius, radius);
}

}  // namespace rp::testing
