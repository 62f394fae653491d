#pragma once

// Finite trigonometric series on the circle R/2piZ and the grid operations
// built on them: sampling, discrete analysis, termwise differentiation,
// mollification, and certified lower bounds.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "rp/errors.hpp"

namespace rp {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Harmonic {
  int n = 1;
  double a = 0.0;  // cosine coefficient
  double b = 0.0;  // sine coefficient

  friend bool operator==(const Harmonic&, const Harmonic&) = default;
};

/// u(theta) = a0 + sum_n (a_n cos n theta + b_n sin n theta).
///
/// Harmonics are kept sorted by n with n >= 1 and no duplicates. All
/// coefficients must be finite. Instances are immutable values; the
/// arithmetic helpers return new series.
class HarmonicSeries {
 public:
  HarmonicSeries() = default;
  explicit HarmonicSeries(double a0, std::vector<Harmonic> harmonics = {});

  static HarmonicSeries constant(double c) { return HarmonicSeries(c); }
  static HarmonicSeries cosine(int n, double amplitude = 1.0);
  static HarmonicSeries sine(int n, double amplitude = 1.0);

  double a0() const { return a0_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }

  /// Highest harmonic index present (0 for a constant).
  int degree() const { return harmonics_.empty() ? 0 : harmonics_.back().n; }

  /// (a_n, b_n); zero when the harmonic is absent. n = 0 returns (a0, 0).
  Harmonic coefficient(int n) const;

  double operator()(double theta) const;

  /// |a0| + sum (|a_n| + |b_n|), an upper bound for the sup norm.
  double coefficient_l1() const;
  /// sum n (|a_n| + |b_n|), an upper bound for |u'|.
  double lipschitz_bound() const;
  /// sum n^2 (|a_n| + |b_n|), an upper bound for |u''|.
  double curvature_bound() const;

  HarmonicSeries without_harmonic(int n) const;
  /// Drops harmonics whose coefficients are both below `threshold` in
  /// absolute value.
  HarmonicSeries pruned(double threshold) const;
  /// theta -> u(theta + shift).
  HarmonicSeries shifted(double shift) const;
  /// theta -> u(-theta).
  HarmonicSeries reflected() const;

  HarmonicSeries operator-() const;
  friend HarmonicSeries operator+(const HarmonicSeries& x, const HarmonicSeries& y);
  friend HarmonicSeries operator-(const HarmonicSeries& x, const HarmonicSeries& y);
  friend HarmonicSeries operator*(double s, const HarmonicSeries& x);
  /// Exact product of two series (product-to-sum identities).
  friend HarmonicSeries operator*(const HarmonicSeries& x, const HarmonicSeries& y);

  friend bool operator==(const HarmonicSeries&, const HarmonicSeries&) = default;

 private:
  double a0_ = 0.0;
  std::vector<Harmonic> harmonics_;
};

/// Uniform samples values[k] = f(2 pi k / m).
class CircleGrid {
 public:
  CircleGrid() = default;
  explicit CircleGrid(std::vector<double> values);

  std::size_t size() const { return values_.size(); }
  double spacing() const { return kTwoPi / static_cast<double>(values_.size()); }
  double theta(std::size_t k) const { return spacing() * static_cast<double>(k); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t k) const { return values_[k]; }

  double mean() const;
  double min() const;
  double max() const;

  /// Samples an arbitrary 2pi-periodic callable.
  static CircleGrid sample(const std::function<double(double)>& f, std::size_t m);

  friend CircleGrid operator+(const CircleGrid& x, const CircleGrid& y);
  friend CircleGrid operator-(const CircleGrid& x, const CircleGrid& y);

 private:
  std::vector<double> values_;
};

inline constexpr std::size_t kMinGridSize = 4;
inline constexpr std::size_t kDefaultCertificateGrid = 4096;

/// Normalized even bump supported on [-epsilon, epsilon].
///
/// The default profile is t -> exp(-1 / (1 - (t/epsilon)^2)); the
/// normalization constant is computed by composite Gauss-Legendre
/// quadrature.
class MollifierSpec {
 public:
  explicit MollifierSpec(double epsilon);

  double epsilon() const { return epsilon_; }
  /// Normalized density; zero outside (-epsilon, epsilon).
  double operator()(double t) const;
  /// Second derivative of the normalized density.
  double second_derivative(double t) const;
  /// Integral of the normalized profile, recomputed by quadrature.
  double mass() const;

 private:
  double epsilon_;
  double scale_ = 1.0;
};

/// Composite Gauss-Legendre quadrature of f on [lo, hi].
double integrate(const std::function<double(double)>& f, double lo, double hi, int panels = 8);

struct BoundCertificate {
  double grid_min = 0.0;
  double lipschitz = 0.0;   // bound on |u'|
  double curvature = 0.0;   // bound on |u''|
  double spacing = 0.0;
  /// grid_min - lipschitz * spacing / 2.
  double lipschitz_bound = 0.0;
  /// Best rigorous lower bound found; never below lipschitz_bound.
  double certified_lower_bound = 0.0;
  std::size_t evaluations = 0;
};

struct CertifyOptions {
  /// Refinement stops once the bound is within tolerance * max(1, |grid_min|)
  /// of the smallest sampled value.
  double tolerance = 1e-10;
  std::size_t max_evaluations = std::size_t{1} << 16;
};

CircleGrid synthesize(const HarmonicSeries& f, std::size_t m);
HarmonicSeries analyze(const CircleGrid& g, int n_max);
HarmonicSeries differentiate(const HarmonicSeries& f, int order);
CircleGrid circular_convolve(const CircleGrid& g, const MollifierSpec& phi);

/// Lower bound valid for every theta, not just the grid nodes.
///
/// Starts from the m-point grid (oversampled by FFT for long series) and
/// bisects the intervals that could hide a lower value, bounding each by
///   f >= min(f(a), f(b)) - curvature * (b - a)^2 / 8 on [a, b]
/// or the Lipschitz analogue, whichever is larger.
BoundCertificate certified_lower_bound(const HarmonicSeries& f,
                                       std::size_t m = kDefaultCertificateGrid,
                                       const CertifyOptions& options = {});

}  // namespace rp
