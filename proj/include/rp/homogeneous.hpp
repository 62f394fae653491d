#pragma once

// Positively homogeneous functions on the plane and their restrictions to
// the unit circle: rho(r e^{i theta}) = r u(theta).

#include "rp/trig.hpp"

namespace rp {

struct HomogeneousLift {
  HarmonicSeries restriction;

  /// r u(theta) with r = |(x, y)| and theta = atan2(y, x); zero at the origin.
  double operator()(double x, double y) const;
};

double lift_eval(const HomogeneousLift& lift, double x, double y);

/// Nonzero entry (u''(theta) + u(theta)) / r of the Hessian in the frame
/// {e^{i theta}, i e^{i theta}}.
double radial_hessian(const HomogeneousLift& lift, double theta, double r);

/// A linear form (x, y) -> a x + b y and the certified lower bound of
/// u(theta) - a cos theta - b sin theta.
struct SupportingForm {
  double a = 0.0;
  double b = 0.0;
  BoundCertificate margin;

  bool strictly_supporting() const { return margin.certified_lower_bound > 0.0; }
};

struct ConvexityVerdict {
  BoundCertificate bound;  // of u'' + u
  bool convex = false;
};

inline constexpr double kConvexityTolerance = -1e-9;

ConvexityVerdict convexity_gap(const HarmonicSeries& u, std::size_t m = kDefaultCertificateGrid);

/// Certified lower bound of theta -> u(theta) + u(theta + pi).
BoundCertificate antipodal_gap(const HarmonicSeries& u, std::size_t m = kDefaultCertificateGrid);

struct SupportOptions {
  std::size_t grid_m = kDefaultCertificateGrid;
  /// Gaps at or below this value are treated as zero.
  double gap_tolerance = 1e-9;
  double initial_radius = 64.0;
  double max_radius = 1e9;
};

/// Strictly supporting form built on the x-axis: e0 is the midpoint of
/// (-u(pi), u(0)), then alpha is the midpoint of
///   (sup_z [e0 z - rho(z, -1)], inf_z [rho(z, 1) - e0 z]).
///
/// Throws PreconditionError when the antipodal gap vanishes (no strict form
/// exists) or the function is not convex, and CertificationError when the
/// two one-dimensional extrema are inconsistent.
SupportingForm supporting_form_lemma3(const HarmonicSeries& u, const SupportOptions& options = {});

/// The pieces of the construction, exposed for inspection and testing.
struct SupportTrace {
  double e0 = 0.0;
  double lower_sup = 0.0;   // S1, with its maximizer
  double lower_arg = 0.0;
  double upper_inf = 0.0;   // S2, with its minimizer
  double upper_arg = 0.0;
  double alpha = 0.0;
};

SupportTrace supporting_form_trace(const HarmonicSeries& u, const SupportOptions& options = {});

}  // namespace rp
