#include "rp/json_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace rp {
namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) throw ParseError(std::string("expected a JSON object holding '") + name + "'");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

double number(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number()) throw ParseError(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

long long integer(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
  return v.get<long long>();
}

bool boolean(const Json& j, const char* name) {
  const Json& v = field(j, name);
  if (!v.is_boolean()) throw ParseError(std::string("field '") + name + "' must be a boolean");
  return v.get<bool>();
}

}  // namespace

void to_json(Json& j, const HarmonicSeries& s) {
  Json hs = Json::array();
  for (const Harmonic& h : s.harmonics()) hs.push_back(Json::array({h.n, h.a, h.b}));
  j = Json{{"a0", s.a0()}, {"harmonics", std::move(hs)}};
}

void from_json(const Json& j, HarmonicSeries& s) {
  const double a0 = number(j, "a0");
  const Json& hs = field(j, "harmonics");
  if (!hs.is_array()) throw ParseError("field 'harmonics' must be an array");
  std::vector<Harmonic> out;
  for (const Json& t : hs) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_integer() || !t[1].is_number() || !t[2].is_number())
      throw ParseError("each harmonic must be [n, a, b] with integer n");
    out.push_back({t[0].get<int>(), t[1].get<double>(), t[2].get<double>()});
  }
  try {
    s = HarmonicSeries(a0, std::move(out));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

void to_json(Json& j, const CircleGrid& g) {
  j = Json{{"m", g.size()}, {"values", std::vector<double>(g.values().begin(), g.values().end())}};
}

void from_json(const Json& j, CircleGrid& g) {
  const long long m = integer(j, "m");
  const Json& v = field(j, "values");
  if (!v.is_array() || static_cast<long long>(v.size()) != m) throw ParseError("grid 'values' must hold m numbers");
  std::vector<double> values;
  values.reserve(v.size());
  for (const Json& x : v) {
    if (!x.is_number()) throw ParseError("grid values must be numbers");
    values.push_back(x.get<double>());
  }
  try {
    g = CircleGrid(std::move(values));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

void to_json(Json& j, const BoundCertificate& c) {
  j = Json{{"grid_min", c.grid_min},
           {"lipschitz", c.lipschitz},
           {"curvature", c.curvature},
           {"spacing", c.spacing},
           {"lipschitz_bound", c.lipschitz_bound},
           {"certified_lower_bound", c.certified_lower_bound},
           {"evaluations", c.evaluations}};
}

void from_json(const Json& j, BoundCertificate& c) {
  c.grid_min = number(j, "grid_min");
  c.lipschitz = number(j, "lipschitz");
  c.curvature = number(j, "curvature");
  c.spacing = number(j, "spacing");
  c.lipschitz_bound = number(j, "lipschitz_bound");
  c.certified_lower_bound = number(j, "certified_lower_bound");
  c.evaluations = static_cast<std::size_t>(integer(j, "evaluations"));
  if (c.lipschitz < 0.0 || c.certified_lower_bound > c.grid_min)
    throw ParseError("certificate violates lipschitz >= 0 or bound <= grid_min");
}

void to_json(Json& j, const ResonanceReport& r) {
  j = Json{{"cos", r.cos_coeff}, {"sin", r.sin_coeff}, {"passes", r.passes}, {"tolerance", r.tolerance}};
}

void from_json(const Json& j, ResonanceReport& r) {
  r.cos_coeff = number(j, "cos");
  r.sin_coeff = number(j, "sin");
  r.passes = boolean(j, "passes");
  r.tolerance = j.contains("tolerance") ? number(j, "tolerance") : 0.0;
}

void to_json(Json& j, const KernelCoeffs& k) { j = Json{{"alpha", k.alpha}, {"beta", k.beta}}; }

void from_json(const Json& j, KernelCoeffs& k) {
  k.alpha = number(j, "alpha");
  k.beta = number(j, "beta");
}

void to_json(Json& j, const MarginReport& r) {
  j = Json{{"margin", r.margin}, {"alpha", r.optimizer.alpha}, {"beta", r.optimizer.beta}, {"grid_m", r.grid_m}};
}

void from_json(const Json& j, MarginReport& r) {
  r.margin = number(j, "margin");
  r.optimizer.alpha = number(j, "alpha");
  r.optimizer.beta = number(j, "beta");
  r.grid_m = j.contains("grid_m") ? static_cast<std::size_t>(integer(j, "grid_m")) : 0;
}

void to_json(Json& j, const NonexistenceCertificate& c) {
  j = Json{{"j", c.j}, {"k", c.k}, {"sum", c.sum}, {"theta1", c.theta1}, {"theta2", c.theta2}};
}

void from_json(const Json& j, NonexistenceCertificate& c) {
  c.j = static_cast<int>(integer(j, "j"));
  c.k = static_cast<int>(integer(j, "k"));
  c.sum = number(j, "sum");
  c.theta1 = j.contains("theta1") ? number(j, "theta1") : 0.0;
  c.theta2 = j.contains("theta2") ? number(j, "theta2") : 0.0;
  if (c.j % 2 != 0 || c.k % 2 == 0) throw ParseError("nonexistence certificate needs even j and odd k");
}

void to_json(Json& j, const SupportingForm& f) { j = Json{{"a", f.a}, {"b", f.b}, {"margin", f.margin}}; }

void from_json(const Json& j, SupportingForm& f) {
  f.a = number(j, "a");
  f.b = number(j, "b");
  f.margin = parse_as<BoundCertificate>(field(j, "margin"));
}

void to_json(Json& j, const PositiveSolutionResult& r) {
  j = Json{{"solution", r.solution}, {"form", r.form}, {"certificate", r.certificate}, {"residual", r.residual}};
}

void to_json(Json& j, const CounterexampleBundle& b) {
  j = Json{{"omega", b.omega},
           {"variant", to_string(b.variant)},
           {"grid_m", b.grid_m},
           {"u_star", b.u_star},
           {"h", b.h},
           {"h_positivity", b.h_positivity},
           {"resonance", b.resonance},
           {"nonexistence", b.nonexistence},
           {"margin", b.margin},
           {"commutation_defect", b.commutation_defect}};
  j["epsilon"] = b.epsilon ? Json(*b.epsilon) : Json(nullptr);
  if (b.u_star_grid) j["u_star_grid"] = *b.u_star_grid;
}

void from_json(const Json& j, CounterexampleBundle& b) {
  b.omega = static_cast<int>(integer(j, "omega"));
  const Json& variant = field(j, "variant");
  if (!variant.is_string()) throw ParseError("field 'variant' must be a string");
  b.variant = variant_from_string(variant.get<std::string>());
  b.grid_m = static_cast<std::size_t>(integer(j, "grid_m"));
  b.u_star = parse_as<HarmonicSeries>(field(j, "u_star"));
  b.h = parse_as<HarmonicSeries>(field(j, "h"));
  b.h_positivity = parse_as<BoundCertificate>(field(j, "h_positivity"));
  b.resonance = parse_as<ResonanceReport>(field(j, "resonance"));
  b.nonexistence = parse_as<NonexistenceCertificate>(field(j, "nonexistence"));
  b.margin = parse_as<MarginReport>(field(j, "margin"));
  b.commutation_defect = number(j, "commutation_defect");
  const Json& eps = field(j, "epsilon");
  b.epsilon = eps.is_null() ? std::nullopt : std::optional<double>(number(j, "epsilon"));
  if (j.contains("u_star_grid")) b.u_star_grid = parse_as<CircleGrid>(j.at("u_star_grid"));
}

void to_json(Json& j, const SymmetryReport& r) {
  j = Json{{"evenness_defect", r.evenness_defect},
           {"h_cos1", r.h_cos1},
           {"h_sin1", r.h_sin1},
           {"h_cos2", r.h_cos2},
           {"h_sin2", r.h_sin2}};
  j["half_turn_defect"] = r.half_turn_defect ? Json(*r.half_turn_defect) : Json(nullptr);
}

void to_json(Json& j, const ExplorationReport& r) {
  Json candidates = Json::array();
  for (const ExplorationCandidate& c : r.candidates) {
    Json e{{"trial", c.trial}, {"u_candidate", c.u_candidate}, {"h_certified_min", c.h_certified_min},
           {"accepted", c.accepted}};
    e["margin"] = c.margin ? Json(*c.margin) : Json(nullptr);
    candidates.push_back(std::move(e));
  }
  j = Json{{"omega", 2},
           {"seed", r.seed},
           {"trials", r.trials},
           {"degree", r.degree},
           {"accepted", r.accepted},
           {"candidates", std::move(candidates)}};
  j["most_negative_margin"] = r.most_negative_margin ? Json(*r.most_negative_margin) : Json(nullptr);
  j["most_negative_trial"] = r.most_negative_trial ? Json(*r.most_negative_trial) : Json(nullptr);
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

void write_csv(std::ostream& os, const CircleGrid& g) {
  std::ostringstream line;
  line.precision(17);
  os << "theta,value\n";
  for (std::size_t k = 0; k < g.size(); ++k) {
    line.str("");
    line << g.theta(k) << ',' << g[k] << '\n';
    os << line.str();
  }
}

}  // namespace rp
