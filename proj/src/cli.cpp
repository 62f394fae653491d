#include "rp/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rp/json_io.hpp"

namespace rp::cli {
namespace {

struct Outcome {
  int code = kOk;
  Json document;
};

void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw PreconditionError("cannot write '" + path + "'");
    f << content;
  }
  std::filesystem::rename(tmp, path);
}

std::string csv_path_for(const std::string& output) {
  std::filesystem::path p(output);
  p.replace_extension(".csv");
  return p.string();
}

HarmonicSeries read_forcing(const RunConfig& cfg) {
  if (!cfg.input_path) throw PreconditionError("--input is required");
  return parse_as<HarmonicSeries>(read_json_file(*cfg.input_path));
}

int integer_omega(const RunConfig& cfg) {
  const Frequency w(cfg.omega);
  if (!w.is_integer()) throw PreconditionError("--omega must be an integer for this command");
  return w.integer();
}

Json resonance_failure(const ResonanceError& e) {
  return Json{{"status", "resonant"}, {"report", e.report()}, {"message", e.what()}};
}

Outcome cmd_solve(const RunConfig& cfg) {
  const HarmonicSeries h = read_forcing(cfg);
  const Frequency w(cfg.omega);
  try {
    const HarmonicSeries u = particular_solution(h, w, cfg.tolerance);
    Json doc{{"status", "solved"},
             {"omega", cfg.omega},
             {"solution", u},
             {"residual", residual_sup(u, h, w)},
             {"resonance", resonance_check(h, w, cfg.tolerance)}};
    if (w.is_integer() && w.integer() == 1) {
      const VocSolution voc = voc_oracle([&h](double t) { return h(t); }, {}, cfg.grid_m);
      doc["voc_discrepancy"] = distance_modulo_kernel(voc.grid, synthesize(u, cfg.grid_m), 1);
    }
    return {kOk, doc};
  } catch (const ResonanceError& e) {
    return {kResonance, resonance_failure(e)};
  }
}

Outcome cmd_certify(const RunConfig& cfg) {
  const HarmonicSeries h = read_forcing(cfg);
  const int omega = integer_omega(cfg);
  const Frequency w(omega);
  try {
    if (omega == 1) {
      const ResonanceReport res = resonance_check(h, w, cfg.tolerance);
      if (!res.passes) throw ResonanceError(res);
      try {
        const PositiveSolutionResult r = positive_solution(h, w, cfg.grid_m);
        return {kOk, Json{{"status", "positive"}, {"omega", omega}, {"result", r}}};
      } catch (const CertificationError& e) {
        return {kUndecided, Json{{"status", "undecided"}, {"omega", omega}, {"message", e.what()}}};
      }
    }
    const HarmonicSeries u_p = particular_solution(h, w, cfg.tolerance);
    const MarginReport margin = positivity_margin(u_p, w, cfg.grid_m);
    const KernelCandidate candidate = margin_candidate(u_p, w, margin);
    if (candidate.certificate.certified_lower_bound > 0.0) {
      return {kOk, Json{{"status", "positive"},
                        {"omega", omega},
                        {"solution", candidate.solution},
                        {"certificate", candidate.certificate},
                        {"margin", margin}}};
    }
    if (const auto cert = nonexistence_search(u_p, w)) {
      return {kNonexistence, Json{{"status", "nonexistence"}, {"omega", omega}, {"certificate", *cert}, {"margin", margin}}};
    }
    return {kUndecided, Json{{"status", "undecided"}, {"omega", omega}, {"margin", margin}}};
  } catch (const ResonanceError& e) {
    return {kResonance, resonance_failure(e)};
  }
}

Outcome cmd_margin(const RunConfig& cfg) {
  const HarmonicSeries h = read_forcing(cfg);
  const Frequency w(cfg.omega);
  try {
    const HarmonicSeries u_p = particular_solution(h, w, cfg.tolerance);
    return {kOk, Json(positivity_margin(u_p, w, cfg.grid_m))};
  } catch (const ResonanceError& e) {
    return {kResonance, resonance_failure(e)};
  }
}

Outcome cmd_counterexample(const RunConfig& cfg) {
  const Frequency w(cfg.omega);
  if (!w.is_integer() || w.integer() < 3) throw PreconditionError("counterexample: --omega must be an integer >= 3");
  CounterexampleOptions options;
  options.variant = variant_from_string(cfg.variant);
  options.epsilon = cfg.epsilon;
  options.grid_m = cfg.grid_explicit ? cfg.grid_m : std::max<std::size_t>(cfg.grid_m, 8192);
  CounterexampleBundle bundle;
  try {
    bundle = build_counterexample(w.integer(), options);
  } catch (const CertificationError& e) {
    return {kUndecided, Json{{"status", "failed"}, {"message", e.what()}}};
  } catch (const ResonanceError& e) {
    return {kUndecided, resonance_failure(e)};
  }
  if (cfg.output_path) {
    const CircleGrid plot = bundle.u_star_grid ? *bundle.u_star_grid : synthesize(bundle.u_star, bundle.grid_m);
    std::ostringstream csv;
    write_csv(csv, plot);
    write_atomically(csv_path_for(*cfg.output_path), csv.str());
  }
  return {kOk, Json(bundle)};
}

Outcome cmd_explore(const RunConfig& cfg) {
  if (!cfg.seed) throw PreconditionError("explore: --seed is required");
  return {kOk, Json(explore_omega2(*cfg.seed, cfg.trials, cfg.degree))};
}

Outcome cmd_report(const RunConfig& cfg) {
  if (!cfg.input_path) throw PreconditionError("--input is required");
  const auto bundle = parse_as<CounterexampleBundle>(read_json_file(*cfg.input_path));
  try {
    verify_bundle(bundle);
  } catch (const Error& e) {
    return {kUndecided, Json{{"status", "unverified"}, {"message", e.what()}}};
  }
  return {kOk, Json{{"status", "verified"}, {"omega", bundle.omega}, {"symmetry", symmetry_and_open_question_report(bundle)}}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("RP_GRID_M")) {
    try {
      cfg.grid_m = static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      err << "RP_GRID_M must be a positive integer\n";
      return kParse;
    }
  }

  CLI::App app{"Certified periodic solutions of u'' + omega^2 u = h"};
  app.require_subcommand(1);
  std::string epsilon_text;
  std::optional<std::size_t> grid;

  struct Entry {
    const char* name;
    const char* help;
    Command command;
  };
  const Entry entries[] = {
      {"solve", "periodic solution with zero kernel component", Command::kSolve},
      {"certify", "certify a positive solution or its nonexistence", Command::kCertify},
      {"margin", "max-min positivity margin over the resonant kernel", Command::kMargin},
      {"counterexample", "build and verify a positive forcing without positive solutions", Command::kCounterexample},
      {"explore", "random search for omega = 2 evidence", Command::kExplore},
      {"report", "re-verify a bundle and report its symmetries", Command::kReport},
  };
  for (const Entry& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--omega", cfg.omega, "frequency omega > 0");
    sub->add_option("--input", cfg.input_path, "input JSON");
    sub->add_option("--output", cfg.output_path, "output JSON (stdout when omitted)");
    sub->add_option("--grid", grid, "grid size (>= 1024)");
    sub->add_option("--tol", cfg.tolerance, "resonance tolerance");
    sub->add_option("--epsilon", epsilon_text, "mollifier half-width or 'default'");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--trials", cfg.trials, "exploration trials");
    sub->add_option("--degree", cfg.degree, "exploration degree");
    sub->add_option("--variant", cfg.variant, "counterexample variant: auto, trigpoly, mollified");
    const Command command = e.command;
    sub->callback([&cfg, command] { cfg.command = command; });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return kParse;
  }

  try {
    if (grid) {
      cfg.grid_m = *grid;
      cfg.grid_explicit = true;
    }
    if (cfg.grid_m < 1024) throw PreconditionError("grid must be at least 1024");
    if (cfg.tolerance && !(*cfg.tolerance > 0.0)) throw PreconditionError("--tol must be positive");
    if (!epsilon_text.empty() && epsilon_text != "default") {
      try {
        std::size_t used = 0;
        cfg.epsilon = std::stod(epsilon_text, &used);
        if (used != epsilon_text.size()) throw std::invalid_argument(epsilon_text);
      } catch (const std::exception&) {
        throw ParseError("--epsilon must be a number or 'default'");
      }
    }

    Outcome outcome;
    switch (cfg.command) {
      case Command::kSolve: outcome = cmd_solve(cfg); break;
      case Command::kCertify: outcome = cmd_certify(cfg); break;
      case Command::kMargin: outcome = cmd_margin(cfg); break;
      case Command::kCounterexample: outcome = cmd_counterexample(cfg); break;
      case Command::kExplore: outcome = cmd_explore(cfg); break;
      case Command::kReport: outcome = cmd_report(cfg); break;
    }
    const std::string text = outcome.document.dump(2) + "\n";
    if (cfg.output_path) {
      write_atomically(*cfg.output_path, text);
    } else {
      out << text;
    }
    return outcome.code;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUndecided;
  }
}

}  // namespace rp::cli
