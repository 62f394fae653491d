#include "rp/oscillator.hpp"

#include <cmath>
#include <sstream>

namespace rp {

Frequency::Frequency(double omega) : omega_(omega) {
  if (!(omega > 0.0) || !std::isfinite(omega)) throw PreconditionError("Frequency: omega must be positive");
  const double nearest = std::round(omega);
  is_integer_ = std::abs(omega - nearest) <= 1e-12;
  integer_ = static_cast<int>(nearest);
}

namespace {

std::string describe(const ResonanceReport& r) {
  std::ostringstream os;
  os << "resonant forcing: cos coefficient " << r.cos_coeff << ", sin coefficient " << r.sin_coeff
     << " (tolerance " << r.tolerance << ")";
  return os.str();
}

}  // namespace

ResonanceError::ResonanceError(ResonanceReport report) : Error(describe(report)), report_(report) {}

double default_resonance_tolerance(const HarmonicSeries& h) { return 1e-9 * (1.0 + h.coefficient_l1()); }

ResonanceReport resonance_check(const HarmonicSeries& h, const Frequency& w, std::optional<double> tol) {
  ResonanceReport r;
  r.tolerance = tol.value_or(default_resonance_tolerance(h));
  if (!w.is_integer()) return r;
  const Harmonic c = w.integer() == 0 ? Harmonic{} : h.coefficient(w.integer());
  r.cos_coeff = kPi * c.a;
  r.sin_coeff = kPi * c.b;
  r.passes = std::max(std::abs(r.cos_coeff), std::abs(r.sin_coeff)) <= r.tolerance;
  return r;
}

HarmonicSeries particular_solution(const HarmonicSeries& h, const Frequency& w, std::optional<double> tol) {
  HarmonicSeries source = h;
  if (w.is_integer()) {
    const ResonanceReport r = resonance_check(h, w, tol);
    if (!r.passes) throw ResonanceError(r);
    source = h.without_harmonic(w.integer());
  }
  const double w2 = w.omega() * w.omega();
  std::vector<Harmonic> hs;
  hs.reserve(source.harmonics().size());
  for (const Harmonic& c : source.harmonics()) {
    const double n = c.n;
    const double denom = w2 - n * n;
    hs.push_back({c.n, c.a / denom, c.b / denom});
  }
  return HarmonicSeries(source.a0() / w2, std::move(hs));
}

HarmonicSeries attach_kernel(const HarmonicSeries& u_p, const Frequency& w, const KernelCoeffs& k) {
  if (!w.is_integer()) throw PreconditionError("attach_kernel: omega must be an integer");
  return u_p + HarmonicSeries(0.0, {{w.integer(), k.beta, k.alpha}});
}

KernelCoeffs kernel_component(const HarmonicSeries& u, const Frequency& w) {
  if (!w.is_integer()) return {};
  const Harmonic c = u.coefficient(w.integer());
  return {c.b, c.a};
}

VocSolution voc_oracle(const std::function<double(double)>& h, const KernelCoeffs& k, std::size_t m) {
  if (m < kMinGridSize) throw PreconditionError("voc_oracle: grid too small");
  const double delta = kTwoPi / static_cast<double>(m);
  std::vector<double> values(m);
  double int_cos = 0.0;
  double int_sin = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    const double t = delta * static_cast<double>(j);
    values[j] = (k.alpha + int_cos) * std::sin(t) - (k.beta + int_sin) * std::cos(t);
    int_cos += integrate([&](double s) { return h(s) * std::cos(s); }, t, t + delta, 1);
    int_sin += integrate([&](double s) { return h(s) * std::sin(s); }, t, t + delta, 1);
  }
  // u(t + 2pi) - u(t) = I_c sin t - I_s cos t with I the full-period integrals.
  VocSolution out{CircleGrid(std::move(values)), std::hypot(int_cos, int_sin)};
  return out;
}

double residual_sup(const HarmonicSeries& u, const HarmonicSeries& h, const Frequency& w, std::size_t m) {
  const double w2 = w.omega() * w.omega();
  const HarmonicSeries r = differentiate(u, 2) + w2 * u - h;
  m = std::max(m, 2 * static_cast<std::size_t>(r.degree()) + 2);
  const CircleGrid g = synthesize(r, m);
  return std::max(std::abs(g.min()), std::abs(g.max()));
}

double distance_modulo_kernel(const CircleGrid& x, const CircleGrid& y, int omega) {
  const CircleGrid d = x - y;
  const std::size_t m = d.size();
  double a = 0.0;
  double b = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double t = static_cast<double>(omega) * d.theta(k);
    a += d[k] * std::cos(t);
    b += d[k] * std::sin(t);
  }
  a *= 2.0 / static_cast<double>(m);
  b *= 2.0 / static_cast<double>(m);
  double worst = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double t = static_cast<double>(omega) * d.theta(k);
    worst = std::max(worst, std::abs(d[k] - a * std::cos(t) - b * std::sin(t)));
  }
  return worst;
}

}  // namespace rp
