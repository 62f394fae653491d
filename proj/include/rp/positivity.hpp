#pragma once

// Existence and nonexistence of everywhere-positive periodic solutions.

#include <optional>

#include "rp/homogeneous.hpp"
#include "rp/oscillator.hpp"

namespace rp {

/// margin = max over kernel coefficients of min over the grid of
/// u_p + alpha sin(omega t) + beta cos(omega t).
struct MarginReport {
  double margin = 0.0;
  KernelCoeffs optimizer;
  std::size_t grid_m = 0;
};

/// Two kernel zeros with opposite cosine parity where the particular
/// solution sums to a negative value. Every kernel element takes opposite
/// values at theta1 and theta2, so no solution can be positive at both.
struct NonexistenceCertificate {
  int j = 0;  // even
  int k = 0;  // odd
  double theta1 = 0.0;
  double theta2 = 0.0;
  double sum = 0.0;
};

struct PositiveSolutionResult {
  HarmonicSeries solution;
  SupportingForm form;
  BoundCertificate certificate;
  double residual = 0.0;
};

MarginReport positivity_margin(const HarmonicSeries& u_p, const Frequency& w,
                               std::size_t m = kDefaultCertificateGrid);

/// Builds a positive solution for omega = 1 from a supporting form of the
/// convex lift of the canonical particular solution.
PositiveSolutionResult positive_solution(const HarmonicSeries& h, const Frequency& w,
                                         std::size_t m = kDefaultCertificateGrid);

std::optional<NonexistenceCertificate> nonexistence_search(const HarmonicSeries& u_p, const Frequency& w);

/// attach_kernel at the margin optimizer, with its certified lower bound.
struct KernelCandidate {
  HarmonicSeries solution;
  BoundCertificate certificate;
};

KernelCandidate margin_candidate(const HarmonicSeries& u_p, const Frequency& w, const MarginReport& report);

}  // namespace rp
