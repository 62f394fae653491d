#include "rp/homogeneous.hpp"

#include <cmath>
#include <sstream>

namespace rp {

double HomogeneousLift::operator()(double x, double y) const {
  const double r = std::hypot(x, y);
  if (r == 0.0) return 0.0;
  return r * restriction(std::atan2(y, x));
}

double lift_eval(const HomogeneousLift& lift, double x, double y) { return lift(x, y); }

double radial_hessian(const HomogeneousLift& lift, double theta, double r) {
  if (!(r > 0.0)) throw PreconditionError("radial_hessian: r must be positive");
  const HarmonicSeries& u = lift.restriction;
  return (differentiate(u, 2)(theta) + u(theta)) / r;
}

ConvexityVerdict convexity_gap(const HarmonicSeries& u, std::size_t m) {
  ConvexityVerdict v;
  v.bound = certified_lower_bound(differentiate(u, 2) + u, m);
  v.convex = v.bound.certified_lower_bound >= kConvexityTolerance;
  return v;
}

BoundCertificate antipodal_gap(const HarmonicSeries& u, std::size_t m) {
  // Odd harmonics cancel; even ones double.
  std::vector<Harmonic> hs;
  for (const Harmonic& h : u.harmonics())
    if (h.n % 2 == 0) hs.push_back({h.n, 2.0 * h.a, 2.0 * h.b});
  return certified_lower_bound(HarmonicSeries(2.0 * u.a0(), std::move(hs)), m);
}

namespace {

struct Extremum {
  double arg;
  double value;
};

// Maximizes a concave function on [lo, hi].
template <typename F>
Extremum golden_max(F&& f, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int it = 0; it < 200 && hi - lo > 1e-13 * (1.0 + std::abs(lo) + std::abs(hi)); ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = f(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = f(x1);
    }
  }
  return f1 > f2 ? Extremum{x1, f1} : Extremum{x2, f2};
}

// Grows the bracket until the maximizer sits well inside it.
template <typename F>
Extremum bracketed_max(F&& f, const SupportOptions& options) {
  double radius = options.initial_radius;
  for (;;) {
    const Extremum e = golden_max(f, -radius, radius);
    if (std::abs(e.arg) < 0.99 * radius) return e;
    if (radius >= options.max_radius) {
      std::ostringstream os;
      os << "supporting form: extremum not attained within |z| <= " << radius;
      throw CertificationError(os.str());
    }
    radius *= 4.0;
  }
}

}  // namespace

SupportTrace supporting_form_trace(const HarmonicSeries& u, const SupportOptions& options) {
  const ConvexityVerdict convexity = convexity_gap(u, options.grid_m);
  if (!convexity.convex) {
    std::ostringstream os;
    os << "supporting form: u'' + u has certified lower bound " << convexity.bound.certified_lower_bound
       << ", the lift is not convex";
    throw PreconditionError(os.str());
  }
  const BoundCertificate gap = antipodal_gap(u, options.grid_m);
  if (gap.certified_lower_bound <= options.gap_tolerance) {
    std::ostringstream os;
    os << "supporting form: antipodal gap " << gap.certified_lower_bound
       << " is not positive, so no strictly supporting form exists";
    throw PreconditionError(os.str());
  }

  const HomogeneousLift rho{u};
  SupportTrace t;
  t.e0 = 0.5 * (u(0.0) - u(kPi));

  const Extremum lower = bracketed_max([&](double z) { return t.e0 * z - rho(z, -1.0); }, options);
  const Extremum upper = bracketed_max([&](double z) { return -(rho(z, 1.0) - t.e0 * z); }, options);
  t.lower_sup = lower.value;
  t.lower_arg = lower.arg;
  t.upper_inf = -upper.value;
  t.upper_arg = upper.arg;
  if (!(t.lower_sup < t.upper_inf)) {
    std::ostringstream os;
    os << "supporting form: empty interval for alpha (" << t.lower_sup << ", " << t.upper_inf
       << "); the convexity certificate is inconsistent";
    throw CertificationError(os.str());
  }
  t.alpha = 0.5 * (t.lower_sup + t.upper_inf);
  return t;
}

SupportingForm supporting_form_lemma3(const HarmonicSeries& u, const SupportOptions& options) {
  const SupportTrace t = supporting_form_trace(u, options);
  SupportingForm form;
  form.a = t.e0;
  form.b = t.alpha;
  const HarmonicSeries residual = u - HarmonicSeries(0.0, {{1, form.a, form.b}});
  form.margin = certified_lower_bound(residual, options.grid_m);
  if (!form.strictly_supporting()) {
    std::ostringstream os;
    os << "supporting form: (" << form.a << ", " << form.b << ") has certified margin "
       << form.margin.certified_lower_bound << " on a " << options.grid_m << "-point grid";
    throw CertificationError(os.str());
  }
  return form;
}

}  // namespace rp
