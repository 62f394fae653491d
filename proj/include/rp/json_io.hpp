#pragma once

// JSON and CSV formats for the library's value types.
//
//   HarmonicSeries           {"a0": r, "harmonics": [[n, a, b], ...]}
//   CircleGrid               {"m": int, "values": [...]}
//   ResonanceReport          {"cos": r, "sin": r, "passes": bool, "tolerance": r}
//   MarginReport             {"margin": r, "alpha": r, "beta": r, "grid_m": int}
//   NonexistenceCertificate  {"j": int, "k": int, "sum": r, "theta1": r, "theta2": r}
//   SupportingForm           {"a": r, "b": r, "margin": {certificate}}
//
// Every from_json validates the schema and throws rp::ParseError.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "rp/counterexample.hpp"

namespace rp {

using Json = nlohmann::json;

void to_json(Json& j, const HarmonicSeries& s);
void from_json(const Json& j, HarmonicSeries& s);
void to_json(Json& j, const CircleGrid& g);
void from_json(const Json& j, CircleGrid& g);
void to_json(Json& j, const BoundCertificate& c);
void from_json(const Json& j, BoundCertificate& c);
void to_json(Json& j, const ResonanceReport& r);
void from_json(const Json& j, ResonanceReport& r);
void to_json(Json& j, const KernelCoeffs& k);
void from_json(const Json& j, KernelCoeffs& k);
void to_json(Json& j, const MarginReport& r);
void from_json(const Json& j, MarginReport& r);
void to_json(Json& j, const NonexistenceCertificate& c);
void from_json(const Json& j, NonexistenceCertificate& c);
void to_json(Json& j, const SupportingForm& f);
void from_json(const Json& j, SupportingForm& f);
void to_json(Json& j, const PositiveSolutionResult& r);
void to_json(Json& j, const CounterexampleBundle& b);
void from_json(const Json& j, CounterexampleBundle& b);
void to_json(Json& j, const SymmetryReport& r);
void to_json(Json& j, const ExplorationReport& r);

/// Converts a document to T, turning any schema violation into ParseError.
template <typename T>
T parse_as(const Json& j) {
  try {
    return j.get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(e.what());
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

Json parse_json_text(const std::string& text);
Json read_json_file(const std::string& path);

/// "theta,value" rows for plotting.
void write_csv(std::ostream& os, const CircleGrid& g);

}  // namespace rp
