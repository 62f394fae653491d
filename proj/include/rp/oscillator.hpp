#pragma once

// Periodic solutions of u'' + omega^2 u = h(theta) for 2pi-periodic h.

#include <functional>
#include <optional>
#include <string>

#include "rp/trig.hpp"

namespace rp {

class Frequency {
 public:
  explicit Frequency(double omega);

  double omega() const { return omega_; }
  bool is_integer() const { return is_integer_; }
  /// Nearest integer; only meaningful when is_integer().
  int integer() const { return integer_; }

 private:
  double omega_;
  bool is_integer_;
  int integer_;
};

/// Integrals of h against cos(omega theta) and sin(omega theta) over a period.
struct ResonanceReport {
  double cos_coeff = 0.0;
  double sin_coeff = 0.0;
  double tolerance = 0.0;
  bool passes = true;
};

/// Kernel element alpha sin(omega theta) + beta cos(omega theta).
struct KernelCoeffs {
  double alpha = 0.0;
  double beta = 0.0;
};

class ResonanceError : public Error {
 public:
  explicit ResonanceError(ResonanceReport report);
  const ResonanceReport& report() const { return report_; }

 private:
  ResonanceReport report_;
};

/// 1e-9 * (1 + ||h||), with ||h|| bounded by the coefficient l1 norm.
double default_resonance_tolerance(const HarmonicSeries& h);

ResonanceReport resonance_check(const HarmonicSeries& h, const Frequency& w,
                                std::optional<double> tol = std::nullopt);

/// The periodic solution with no component in the resonant kernel.
/// Throws ResonanceError when an integer omega resonates with h.
HarmonicSeries particular_solution(const HarmonicSeries& h, const Frequency& w,
                                   std::optional<double> tol = std::nullopt);

HarmonicSeries attach_kernel(const HarmonicSeries& u_p, const Frequency& w, const KernelCoeffs& k);

/// Coefficients of the resonant kernel present in u (zero for non-integer omega).
KernelCoeffs kernel_component(const HarmonicSeries& u, const Frequency& w);

/// Variation-of-constants solution for omega = 1:
///   u(t) = (alpha + int_0^t h cos) sin t - (beta + int_0^t h sin) cos t,
/// accumulated cell by cell with Gauss-Legendre quadrature.
struct VocSolution {
  CircleGrid grid;
  /// sup_t |u(t + 2pi) - u(t)|; zero up to quadrature error iff h is nonresonant.
  double closure_defect = 0.0;
};

VocSolution voc_oracle(const std::function<double(double)>& h, const KernelCoeffs& k, std::size_t m);

/// sup over the grid of |u'' + omega^2 u - h|.
double residual_sup(const HarmonicSeries& u, const HarmonicSeries& h, const Frequency& w,
                    std::size_t m = 4096);

/// Max distance between two grids after removing the best least-squares
/// fit by a cos(omega t) + b sin(omega t) from their difference.
double distance_modulo_kernel(const CircleGrid& x, const CircleGrid& y, int omega);

}  // namespace rp
