#include "rp/positivity.hpp"

#include <cmath>
#include <sstream>

#include "rp/simplex.hpp"

namespace rp {

MarginReport positivity_margin(const HarmonicSeries& u_p, const Frequency& w, std::size_t m) {
  MarginReport report;
  if (!w.is_integer()) {
    report.grid_m = m;
    report.margin = certified_lower_bound(u_p, m).certified_lower_bound;
    return report;
  }
  const int omega = w.integer();
  m = std::max(m, 2 * static_cast<std::size_t>(std::max(u_p.degree(), omega)) + 2);
  report.grid_m = m;
  const CircleGrid values = synthesize(u_p, m);

  // Dual of  max t  s.t.  t + a' sin + b' cos <= u_p  on the grid:
  //   min sum l_k u_k  s.t.  sum l_k = 1, sum l_k sin = 0, sum l_k cos = 0.
  std::vector<std::vector<double>> rows(3, std::vector<double>(m));
  std::vector<double> cost(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double t = static_cast<double>(omega) * values.theta(k);
    rows[0][k] = 1.0;
    rows[1][k] = std::sin(t);
    rows[2][k] = std::cos(t);
    cost[k] = values[k];
  }
  const LpResult lp = solve_standard_form(rows, {1.0, 0.0, 0.0}, cost);
  if (lp.status != LpStatus::kOptimal) throw CertificationError("positivity_margin: linear program did not converge");
  report.margin = lp.objective;
  report.optimizer = {-lp.dual[1], -lp.dual[2]};
  return report;
}

KernelCandidate margin_candidate(const HarmonicSeries& u_p, const Frequency& w, const MarginReport& report) {
  KernelCandidate c;
  c.solution = w.is_integer() ? attach_kernel(u_p, w, report.optimizer) : u_p;
  c.certificate = certified_lower_bound(c.solution, report.grid_m);
  return c;
}

PositiveSolutionResult positive_solution(const HarmonicSeries& h, const Frequency& w, std::size_t m) {
  if (!w.is_integer() || w.integer() != 1) throw PreconditionError("positive_solution: requires omega = 1");
  const BoundCertificate h_bound = certified_lower_bound(h, m);
  if (h_bound.certified_lower_bound < -1e-9) {
    std::ostringstream os;
    os << "positive_solution: forcing takes negative values (certified lower bound "
       << h_bound.certified_lower_bound << ")";
    throw PreconditionError(os.str());
  }
  if (h.coefficient_l1() <= 1e-12) throw PreconditionError("positive_solution: forcing must not be identically zero");

  const HarmonicSeries f0 = particular_solution(h, w);

  PositiveSolutionResult out;
  std::size_t grid = m;
  for (int attempt = 0;; ++attempt) {
    try {
      SupportOptions options;
      options.grid_m = grid;
      out.form = supporting_form_lemma3(f0, options);
      break;
    } catch (const CertificationError&) {
      if (attempt > 0) throw;
      grid *= 4;
    }
  }
  out.solution = f0 - HarmonicSeries(0.0, {{1, out.form.a, out.form.b}});
  out.certificate = out.form.margin;
  out.residual = residual_sup(out.solution, h, w);
  if (out.residual > 1e-9 * (1.0 + h.coefficient_l1())) {
    std::ostringstream os;
    os << "positive_solution: residual " << out.residual << " exceeds tolerance";
    throw CertificationError(os.str());
  }
  return out;
}

std::optional<NonexistenceCertificate> nonexistence_search(const HarmonicSeries& u_p, const Frequency& w) {
  if (!w.is_integer()) throw PreconditionError("nonexistence_search: omega must be an integer");
  const int omega = w.integer();
  std::optional<NonexistenceCertificate> best;
  for (int j = 0; j < 2 * omega; j += 2) {
    const double t1 = j * kPi / omega;
    const double v1 = u_p(t1);
    for (int k = 1; k < 2 * omega; k += 2) {
      const double t2 = k * kPi / omega;
      const double sum = v1 + u_p(t2);
      if (!best || sum < best->sum) best = NonexistenceCertificate{j, k, t1, t2, sum};
    }
  }
  if (best && best->sum < 0.0) return best;
  return std::nullopt;
}

}  // namespace rp
