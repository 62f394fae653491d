#pragma once

// Positive, nonresonant forcings h for integer omega >= 3 whose periodic
// solutions all change sign, built as h = u'' + omega^2 u from a function u
// that is negative at 0 and 3pi/omega.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rp/positivity.hpp"

namespace rp {

enum class CounterexampleVariant {
  kAuto,       // trigonometric polynomial for omega = 3, mollified otherwise
  kTrigPoly,   // 1 - 2 cos 2t - cos 4t (omega = 3 only)
  kMollified,  // piecewise construction smoothed by a bump
};

std::string to_string(CounterexampleVariant v);
CounterexampleVariant variant_from_string(const std::string& s);

/// The C^1, piecewise C^2 profile:
///   1/2 - cos(omega t)  for |t| <= pi/omega,
///   3/2                 for pi/omega <= |t| <= 2pi/omega,
///   1/2 + cos(omega t)  for 2pi/omega <= |t| <= pi,
/// extended periodically.
double u_star_value(int omega, double theta);
/// u'' + omega^2 u on the smooth pieces; junction points take the mean of
/// the one-sided values.
double u_star_forcing(int omega, double theta);

CircleGrid u_star_piecewise(int omega, std::size_t m);
HarmonicSeries u_star_trigpoly();

/// Convolution of the piecewise profile (or its forcing) with the bump,
/// integrated piece by piece so the junctions are resolved exactly.
CircleGrid mollify_u_star(int omega, const MollifierSpec& phi, std::size_t m);
CircleGrid mollify_u_star_forcing(int omega, const MollifierSpec& phi, std::size_t m);
/// u * phi'', the second derivative of the mollified profile with the
/// derivatives carried by the bump.
CircleGrid mollify_u_star_second_derivative(int omega, const MollifierSpec& phi, std::size_t m);

double default_epsilon(int omega);

struct CounterexampleOptions {
  CounterexampleVariant variant = CounterexampleVariant::kAuto;
  std::optional<double> epsilon;
  std::size_t grid_m = 8192;
};

struct CounterexampleBundle {
  int omega = 3;
  CounterexampleVariant variant = CounterexampleVariant::kTrigPoly;
  HarmonicSeries u_star;                   // exact or projected
  std::optional<CircleGrid> u_star_grid;   // mollified samples
  HarmonicSeries h;
  BoundCertificate h_positivity;
  ResonanceReport resonance;
  NonexistenceCertificate nonexistence;
  MarginReport margin;
  std::optional<double> epsilon;
  std::size_t grid_m = 8192;
  /// sup |u*phi'' + omega^2 (u*phi) - h*phi| on the grid (mollified only).
  double commutation_defect = 0.0;
};

CounterexampleBundle build_counterexample(int omega, const CounterexampleOptions& options = {});

/// Recomputes the three certificates from h and fails if any of them does
/// not hold or disagrees with the stored values.
void verify_bundle(const CounterexampleBundle& bundle);

struct SymmetryReport {
  double evenness_defect = 0.0;
  std::optional<double> half_turn_defect;  // omega = 3 only
  double h_cos1 = 0.0;  // int h cos t
  double h_sin1 = 0.0;
  double h_cos2 = 0.0;  // int h cos 2t
  double h_sin2 = 0.0;
};

SymmetryReport symmetry_and_open_question_report(const CounterexampleBundle& bundle);

struct ExplorationCandidate {
  std::size_t trial = 0;
  HarmonicSeries u_candidate;
  double h_certified_min = 0.0;
  bool accepted = false;             // h certified positive
  std::optional<MarginReport> margin;  // accepted candidates only
};

struct ExplorationReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  int degree = 0;
  std::size_t accepted = 0;
  std::optional<double> most_negative_margin;
  std::optional<std::size_t> most_negative_trial;
  std::vector<ExplorationCandidate> candidates;
};

/// Random search over even cosine polynomials without a second harmonic.
/// Gathers evidence about omega = 2 and makes no claim either way.
ExplorationReport explore_omega2(std::uint64_t seed, std::size_t trials, int degree,
                                 std::size_t grid_m = 1024);

}  // namespace rp
