#include "rp/trig.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <complex>
#include <map>
#include <limits>
#include <queue>
#include <string>

#include <unsupported/Eigen/FFT>

namespace rp {
namespace {

// 16-point Gauss-Legendre nodes and weights on [-1, 1] (positive half).
constexpr std::array<double, 8> kGlNodes = {
    0.0950125098376374401853193, 0.2816035507792589132304605, 0.4580167776572273863424194,
    0.6178762444026437484466718, 0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
constexpr std::array<double, 8> kGlWeights = {
    0.1894506104550684962853967, 0.1826034150449235888667637, 0.1691565193950025381893121,
    0.1495959888165767320815017, 0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

double reduce_angle(double theta) {
  double r = std::remainder(theta, kTwoPi);
  return r;
}

std::vector<double> cos_table(std::size_t m) {
  std::vector<double> t(m);
  for (std::size_t j = 0; j < m; ++j) t[j] = std::cos(kTwoPi * static_cast<double>(j) / static_cast<double>(m));
  return t;
}

std::vector<double> sin_table(std::size_t m) {
  std::vector<double> t(m);
  for (std::size_t j = 0; j < m; ++j) t[j] = std::sin(kTwoPi * static_cast<double>(j) / static_cast<double>(m));
  return t;
}

// Series with few harmonics are sampled directly; the rest go through FFT.
constexpr std::size_t kDirectHarmonics = 8;
constexpr std::size_t kMaxOversample = 64;

std::vector<double> fft_synthesize(const HarmonicSeries& f, std::size_t m) {
  std::vector<std::complex<double>> spectrum(m, {0.0, 0.0});
  spectrum[0] = f.a0();
  for (const Harmonic& h : f.harmonics()) {
    const auto n = static_cast<std::size_t>(h.n);
    if (2 * n == m) {
      spectrum[n] += h.a;
      continue;
    }
    spectrum[n] += std::complex<double>(0.5 * h.a, -0.5 * h.b);
    spectrum[m - n] += std::complex<double>(0.5 * h.a, 0.5 * h.b);
  }
  Eigen::FFT<double> fft;
  fft.SetFlag(Eigen::FFT<double>::Unscaled);
  std::vector<std::complex<double>> samples;
  fft.inv(samples, spectrum);
  std::vector<double> out(m);
  for (std::size_t k = 0; k < m; ++k) out[k] = samples[k].real();
  return out;
}

HarmonicSeries from_dense(double a0, const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<Harmonic> hs;
  for (std::size_t n = 1; n < a.size(); ++n) {
    if (a[n] != 0.0 || b[n] != 0.0) hs.push_back({static_cast<int>(n), a[n], b[n]});
  }
  return HarmonicSeries(a0, std::move(hs));
}

}  // namespace

// ---------------------------------------------------------------------------
// HarmonicSeries

HarmonicSeries::HarmonicSeries(double a0, std::vector<Harmonic> harmonics)
    : a0_(a0), harmonics_(std::move(harmonics)) {
  if (!std::isfinite(a0_)) throw PreconditionError("HarmonicSeries: non-finite a0");
  std::sort(harmonics_.begin(), harmonics_.end(),
            [](const Harmonic& x, const Harmonic& y) { return x.n < y.n; });
  for (std::size_t i = 0; i < harmonics_.size(); ++i) {
    const Harmonic& h = harmonics_[i];
    if (h.n < 1) throw PreconditionError("HarmonicSeries: harmonic index must be >= 1");
    if (!std::isfinite(h.a) || !std::isfinite(h.b))
      throw PreconditionError("HarmonicSeries: non-finite coefficient at n=" + std::to_string(h.n));
    if (i > 0 && harmonics_[i - 1].n == h.n)
      throw PreconditionError("HarmonicSeries: duplicate harmonic n=" + std::to_string(h.n));
  }
}

HarmonicSeries HarmonicSeries::cosine(int n, double amplitude) {
  if (n == 0) return HarmonicSeries(amplitude);
  return HarmonicSeries(0.0, {{n, amplitude, 0.0}});
}

HarmonicSeries HarmonicSeries::sine(int n, double amplitude) {
  return HarmonicSeries(0.0, {{n, 0.0, amplitude}});
}

Harmonic HarmonicSeries::coefficient(int n) const {
  if (n == 0) return {0, a0_, 0.0};
  auto it = std::lower_bound(harmonics_.begin(), harmonics_.end(), n,
                             [](const Harmonic& h, int k) { return h.n < k; });
  if (it != harmonics_.end() && it->n == n) return *it;
  return {n, 0.0, 0.0};
}

double HarmonicSeries::operator()(double theta) const {
  const double t = reduce_angle(theta);
  double sum = a0_;
  if (harmonics_.size() <= 8) {
    for (const Harmonic& h : harmonics_) {
      const double x = static_cast<double>(h.n) * t;
      sum += h.a * std::cos(x) + h.b * std::sin(x);
    }
    return sum;
  }
  // e^{i n t} by recurrence, re-anchored periodically against drift.
  const std::complex<double> step = std::polar(1.0, t);
  std::complex<double> z(1.0, 0.0);
  int current = 0;
  int since_anchor = 0;
  for (const Harmonic& h : harmonics_) {
    const int gap = h.n - current;
    if (gap > 8 || since_anchor + gap > 64) {
      z = std::polar(1.0, static_cast<double>(h.n) * t);
      since_anchor = 0;
    } else {
      for (int s = 0; s < gap; ++s) z *= step;
      since_anchor += gap;
    }
    current = h.n;
    sum += h.a * z.real() + h.b * z.imag();
  }
  return sum;
}

double HarmonicSeries::coefficient_l1() const {
  double s = std::abs(a0_);
  for (const Harmonic& h : harmonics_) s += std::abs(h.a) + std::abs(h.b);
  return s;
}

double HarmonicSeries::lipschitz_bound() const {
  double s = 0.0;
  for (const Harmonic& h : harmonics_) s += h.n * (std::abs(h.a) + std::abs(h.b));
  return s;
}

double HarmonicSeries::curvature_bound() const {
  double s = 0.0;
  for (const Harmonic& h : harmonics_) {
    const double n = h.n;
    s += n * n * (std::abs(h.a) + std::abs(h.b));
  }
  return s;
}

HarmonicSeries HarmonicSeries::without_harmonic(int n) const {
  if (n == 0) return HarmonicSeries(0.0, harmonics_);
  std::vector<Harmonic> hs;
  for (const Harmonic& h : harmonics_)
    if (h.n != n) hs.push_back(h);
  return HarmonicSeries(a0_, std::move(hs));
}

HarmonicSeries HarmonicSeries::pruned(double threshold) const {
  std::vector<Harmonic> hs;
  for (const Harmonic& h : harmonics_)
    if (std::abs(h.a) >= threshold || std::abs(h.b) >= threshold) hs.push_back(h);
  return HarmonicSeries(a0_, std::move(hs));
}

HarmonicSeries HarmonicSeries::shifted(double shift) const {
  std::vector<Harmonic> hs;
  hs.reserve(harmonics_.size());
  for (const Harmonic& h : harmonics_) {
    const double c = std::cos(h.n * shift);
    const double s = std::sin(h.n * shift);
    // a cos n(t+s) + b sin n(t+s)
    hs.push_back({h.n, h.a * c + h.b * s, h.b * c - h.a * s});
  }
  return HarmonicSeries(a0_, std::move(hs));
}

HarmonicSeries HarmonicSeries::reflected() const {
  std::vector<Harmonic> hs = harmonics_;
  for (Harmonic& h : hs) h.b = -h.b;
  return HarmonicSeries(a0_, std::move(hs));
}

HarmonicSeries HarmonicSeries::operator-() const { return -1.0 * *this; }

HarmonicSeries operator+(const HarmonicSeries& x, const HarmonicSeries& y) {
  std::map<int, Harmonic> acc;
  for (const Harmonic& h : x.harmonics_) acc[h.n] = h;
  for (const Harmonic& h : y.harmonics_) {
    auto [it, inserted] = acc.try_emplace(h.n, Harmonic{h.n, 0.0, 0.0});
    it->second.a += h.a;
    it->second.b += h.b;
  }
  std::vector<Harmonic> hs;
  hs.reserve(acc.size());
  for (const auto& [n, h] : acc) hs.push_back(h);
  return HarmonicSeries(x.a0_ + y.a0_, std::move(hs));
}

HarmonicSeries operator-(const HarmonicSeries& x, const HarmonicSeries& y) { return x + (-y); }

HarmonicSeries operator*(double s, const HarmonicSeries& x) {
  std::vector<Harmonic> hs = x.harmonics_;
  for (Harmonic& h : hs) {
    h.a *= s;
    h.b *= s;
  }
  return HarmonicSeries(s * x.a0_, std::move(hs));
}

HarmonicSeries operator*(const HarmonicSeries& x, const HarmonicSeries& y) {
  const int deg = x.degree() + y.degree();
  std::vector<double> a(static_cast<std::size_t>(deg) + 1, 0.0);
  std::vector<double> b(static_cast<std::size_t>(deg) + 1, 0.0);

  auto terms = [](const HarmonicSeries& s) {
    std::vector<Harmonic> t;
    t.push_back({0, s.a0(), 0.0});
    t.insert(t.end(), s.harmonics().begin(), s.harmonics().end());
    return t;
  };
  // Accumulates c * cos(k t) or c * sin(k t) for a possibly negative k.
  auto add_cos = [&](int k, double c) { a[static_cast<std::size_t>(std::abs(k))] += c; };
  auto add_sin = [&](int k, double c) {
    if (k > 0) b[static_cast<std::size_t>(k)] += c;
    else if (k < 0) b[static_cast<std::size_t>(-k)] -= c;
  };

  for (const Harmonic& p : terms(x)) {
    for (const Harmonic& q : terms(y)) {
      const int m = p.n;
      const int n = q.n;
      // cos m cos n, sin m sin n, sin m cos n, cos m sin n
      add_cos(m - n, 0.5 * (p.a * q.a + p.b * q.b));
      add_cos(m + n, 0.5 * (p.a * q.a - p.b * q.b));
      add_sin(m + n, 0.5 * (p.b * q.a + p.a * q.b));
      add_sin(m - n, 0.5 * (p.b * q.a - p.a * q.b));
    }
  }
  const double a0 = a[0];
  return from_dense(a0, a, b);
}

// ---------------------------------------------------------------------------
// CircleGrid

CircleGrid::CircleGrid(std::vector<double> values) : values_(std::move(values)) {
  if (values_.size() < kMinGridSize)
    throw PreconditionError("CircleGrid: need at least " + std::to_string(kMinGridSize) + " samples");
  for (double v : values_)
    if (!std::isfinite(v)) throw PreconditionError("CircleGrid: non-finite sample");
}

double CircleGrid::mean() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

double CircleGrid::min() const { return *std::min_element(values_.begin(), values_.end()); }
double CircleGrid::max() const { return *std::max_element(values_.begin(), values_.end()); }

CircleGrid CircleGrid::sample(const std::function<double(double)>& f, std::size_t m) {
  std::vector<double> v(m);
  for (std::size_t k = 0; k < m; ++k) v[k] = f(kTwoPi * static_cast<double>(k) / static_cast<double>(m));
  return CircleGrid(std::move(v));
}

CircleGrid operator+(const CircleGrid& x, const CircleGrid& y) {
  if (x.size() != y.size()) throw PreconditionError("CircleGrid: size mismatch");
  std::vector<double> v(x.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = x[k] + y[k];
  return CircleGrid(std::move(v));
}

CircleGrid operator-(const CircleGrid& x, const CircleGrid& y) {
  if (x.size() != y.size()) throw PreconditionError("CircleGrid: size mismatch");
  std::vector<double> v(x.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = x[k] - y[k];
  return CircleGrid(std::move(v));
}

// ---------------------------------------------------------------------------
// Quadrature and mollifier

double integrate(const std::function<double(double)>& f, double lo, double hi, int panels) {
  if (panels < 1) panels = 1;
  const double width = (hi - lo) / panels;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    const double half = 0.5 * width;
    double s = 0.0;
    for (std::size_t i = 0; i < kGlNodes.size(); ++i) {
      s += kGlWeights[i] * (f(mid - half * kGlNodes[i]) + f(mid + half * kGlNodes[i]));
    }
    total += s * half;
  }
  return total;
}

MollifierSpec::MollifierSpec(double epsilon) : epsilon_(epsilon) {
  if (!(epsilon > 0.0 && epsilon < kPi))
    throw PreconditionError("MollifierSpec: epsilon must lie in (0, pi)");
  scale_ = 1.0;
  scale_ = 1.0 / mass();
}

double MollifierSpec::operator()(double t) const {
  const double x = t / epsilon_;
  if (!(std::abs(x) < 1.0)) return 0.0;
  return scale_ * std::exp(-1.0 / (1.0 - x * x));
}

double MollifierSpec::second_derivative(double t) const {
  const double x = t / epsilon_;
  if (!(std::abs(x) < 1.0)) return 0.0;
  const double q = 1.0 - x * x;
  const double q2 = q * q;
  // phi = c exp(g), g = -1/q:  phi'' = phi (g'^2 + g'') / eps^2
  const double g1 = -2.0 * x / q2;
  const double g2 = -2.0 / q2 - 8.0 * x * x / (q2 * q);
  return (*this)(t) * (g1 * g1 + g2) / (epsilon_ * epsilon_);
}

double MollifierSpec::mass() const {
  return integrate([this](double t) { return (*this)(t); }, -epsilon_, epsilon_, 32);
}

// ---------------------------------------------------------------------------
// Grid operations

CircleGrid synthesize(const HarmonicSeries& f, std::size_t m) {
  // Point sampling stays exact up to the Nyquist index; only analysis needs
  // the stricter n < m/2.
  const std::size_t needed = 2 * static_cast<std::size_t>(f.degree());
  if (m < needed || m < kMinGridSize)
    throw PreconditionError("synthesize: grid of " + std::to_string(m) + " points aliases degree " +
                            std::to_string(f.degree()) + " (need at least " + std::to_string(needed) + ")");
  if (f.harmonics().size() > kDirectHarmonics) return CircleGrid(fft_synthesize(f, m));
  const auto ct = cos_table(m);
  const auto st = sin_table(m);
  std::vector<double> v(m, f.a0());
  for (const Harmonic& h : f.harmonics()) {
    const std::size_t n = static_cast<std::size_t>(h.n) % m;
    std::size_t idx = 0;
    for (std::size_t k = 0; k < m; ++k) {
      v[k] += h.a * ct[idx] + h.b * st[idx];
      idx += n;
      if (idx >= m) idx -= m;
    }
  }
  return CircleGrid(std::move(v));
}

HarmonicSeries analyze(const CircleGrid& g, int n_max) {
  const std::size_t m = g.size();
  if (n_max < 0 || 2 * static_cast<std::size_t>(n_max) >= m)
    throw PreconditionError("analyze: n_max must satisfy 0 <= n_max < m/2");
  const auto values = g.values();
  std::vector<Harmonic> hs;
  hs.reserve(static_cast<std::size_t>(n_max));
  const double scale = 2.0 / static_cast<double>(m);
  if (static_cast<std::size_t>(n_max) > kDirectHarmonics) {
    Eigen::FFT<double> fft;
    std::vector<double> input(values.begin(), values.end());
    std::vector<std::complex<double>> spectrum;
    fft.fwd(spectrum, input);
    // X_n = sum_k g_k e^{-2 pi i n k / m} = (m/2) (a_n - i b_n)
    for (int n = 1; n <= n_max; ++n) {
      const auto& x = spectrum[static_cast<std::size_t>(n)];
      hs.push_back({n, scale * x.real(), -scale * x.imag()});
    }
    return HarmonicSeries(g.mean(), std::move(hs));
  }
  const auto ct = cos_table(m);
  const auto st = sin_table(m);
  for (int n = 1; n <= n_max; ++n) {
    double a = 0.0;
    double b = 0.0;
    std::size_t idx = 0;
    for (std::size_t k = 0; k < m; ++k) {
      a += values[k] * ct[idx];
      b += values[k] * st[idx];
      idx += static_cast<std::size_t>(n);
      if (idx >= m) idx -= m;
    }
    hs.push_back({n, scale * a, scale * b});
  }
  return HarmonicSeries(g.mean(), std::move(hs));
}

HarmonicSeries differentiate(const HarmonicSeries& f, int order) {
  if (order != 1 && order != 2) throw PreconditionError("differentiate: order must be 1 or 2");
  std::vector<Harmonic> hs;
  hs.reserve(f.harmonics().size());
  for (const Harmonic& h : f.harmonics()) {
    const double n = h.n;
    if (order == 1) {
      hs.push_back({h.n, n * h.b, -n * h.a});
    } else {
      hs.push_back({h.n, -n * n * h.a, -n * n * h.b});
    }
  }
  return HarmonicSeries(0.0, std::move(hs));
}

CircleGrid circular_convolve(const CircleGrid& g, const MollifierSpec& phi) {
  const std::size_t m = g.size();
  const double delta = g.spacing();
  if (phi.epsilon() < 2.0 * delta)
    throw PreconditionError("circular_convolve: mollifier half-width below two grid spacings");
  const auto reach = static_cast<std::ptrdiff_t>(std::ceil(phi.epsilon() / delta));
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(2 * reach + 1));
  double total = 0.0;
  for (std::ptrdiff_t j = -reach; j <= reach; ++j) {
    const double w = phi(static_cast<double>(j) * delta);
    weights.push_back(w);
    total += w;
  }
  for (double& w : weights) w /= total;

  const auto values = g.values();
  const auto mm = static_cast<std::ptrdiff_t>(m);
  std::vector<double> out(m, 0.0);
  for (std::ptrdiff_t k = 0; k < mm; ++k) {
    double s = 0.0;
    for (std::ptrdiff_t j = -reach; j <= reach; ++j) {
      const double w = weights[static_cast<std::size_t>(j + reach)];
      if (w == 0.0) continue;
      std::ptrdiff_t idx = (k - j) % mm;
      if (idx < 0) idx += mm;
      s += values[static_cast<std::size_t>(idx)] * w;
    }
    out[static_cast<std::size_t>(k)] = s;
  }
  return CircleGrid(std::move(out));
}

// ---------------------------------------------------------------------------
// Certified lower bound

BoundCertificate certified_lower_bound(const HarmonicSeries& f, std::size_t m,
                                       const CertifyOptions& options) {
  m = std::max<std::size_t>(m, 2 * static_cast<std::size_t>(f.degree()) + 2);
  m = std::max(m, kMinGridSize);
  const CircleGrid grid = synthesize(f, m);

  BoundCertificate cert;
  cert.spacing = grid.spacing();
  cert.grid_min = grid.min();
  cert.lipschitz = f.lipschitz_bound();
  cert.curvature = f.curvature_bound();
  cert.lipschitz_bound = cert.grid_min - cert.lipschitz * cert.spacing / 2.0;
  cert.evaluations = m;

  // Floating-point slack for evaluating the series.
  const double rounding = 64.0 * DBL_EPSILON * f.coefficient_l1();
  const double target = options.tolerance * std::max(1.0, std::abs(cert.grid_min));

  auto bound_of = [&](double w, double f_lo, double f_hi) {
    const double by_curvature = std::min(f_lo, f_hi) - cert.curvature * w * w / 8.0;
    const double by_slope = 0.5 * (f_lo + f_hi) - cert.lipschitz * w / 2.0;
    return std::max(by_curvature, by_slope);
  };

  // Long series: refine uniformly by FFT before refining pointwise.
  CircleGrid fine = grid;
  if (f.harmonics().size() > kDirectHarmonics) {
    std::size_t factor = 1;
    while (factor < kMaxOversample && bound_of(cert.spacing / factor, 0.0, 0.0) < -target) factor *= 2;
    if (factor > 1) {
      fine = CircleGrid(fft_synthesize(f, m * factor));
      cert.evaluations += fine.size();
    }
  }

  struct Interval {
    double lo, hi, f_lo, f_hi, bound;
  };
  auto cmp = [](const Interval& x, const Interval& y) { return x.bound > y.bound; };
  std::priority_queue<Interval, std::vector<Interval>, decltype(cmp)> open(cmp);

  const std::size_t n = fine.size();
  const double w = fine.spacing();
  double upper = std::min(cert.grid_min, fine.min());
  // Intervals already within target of the best sample never need splitting.
  double settled = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    const double f_lo = fine[k];
    const double f_hi = fine[(k + 1) % n];
    const double b = bound_of(w, f_lo, f_hi);
    if (b >= upper - target) {
      settled = std::min(settled, b);
    } else {
      const double lo = fine.theta(k);
      open.push({lo, lo + w, f_lo, f_hi, b});
    }
  }

  std::size_t budget = options.max_evaluations;
  while (!open.empty() && budget > 0) {
    const Interval top = open.top();
    if (upper - top.bound <= target) break;
    open.pop();
    const double mid = 0.5 * (top.lo + top.hi);
    const double f_mid = f(mid);
    ++cert.evaluations;
    --budget;
    upper = std::min(upper, f_mid);
    const double half = 0.5 * (top.hi - top.lo);
    open.push({top.lo, mid, top.f_lo, f_mid, bound_of(half, top.f_lo, f_mid)});
    open.push({mid, top.hi, f_mid, top.f_hi, bound_of(half, f_mid, top.f_hi)});
  }
  double lower = std::min(settled, upper);
  if (!open.empty()) lower = std::min(lower, open.top().bound);

  cert.certified_lower_bound = std::max(cert.lipschitz_bound, lower) - rounding;
  cert.certified_lower_bound = std::min(cert.certified_lower_bound, cert.grid_min);
  return cert;
}

}  // namespace rp
