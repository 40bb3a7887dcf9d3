#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polyfix/json_io.hpp"

namespace {

using namespace polyfix;

// Exit-status contract: 0 success/pass, 1 negative verdict, 2 violation or
// mismatch found, 3 input error.
enum ExitStatus : int { kOk = 0, kNegative = 1, kViolation = 2, kInputError = 3 };

std::string approx(const Rational& r) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.6g", r.to_double());
  return buf;
}

std::string show(const Rational& r) {
  std::string s = r.str();
  if (r.den() != 1) s += " (~" + approx(r) + ")";
  return s;
}

std::string join(const std::vector<std::string>& parts, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::vector<std::string> labels_of(const FiniteMetricSpace& space, const PointTuple& t) {
  std::vector<std::string> out;
  for (std::size_t idx : t) out.push_back(space.label(idx));
  return out;
}

void print_coefficient(const FiniteMetricSpace& space, const CoefficientResult& r) {
  std::printf("  %-18s ", class_name(r.kind).c_str());
  if (!r.feasible) {
    std::printf("INFEASIBLE (witness %s with zero denominator)\n",
                join(labels_of(space, r.witness)).c_str());
    return;
  }
  std::printf("coefficient %-16s threshold %-5s %s  witness %s\n", show(r.infimum).c_str(),
              r.threshold.str().c_str(), r.member ? "member   " : "nonmember",
              join(labels_of(space, r.witness)).c_str());
}

struct Range {
  std::size_t lo{0}, hi{0};
};

Range parse_range(const std::string& text) {
  auto pos = text.find("..");
  try {
    if (pos == std::string::npos) {
      std::size_t v = std::stoull(text);
      return {v, v};
    }
    return {std::stoull(text.substr(0, pos)), std::stoull(text.substr(pos + 2))};
  } catch (const std::exception&) {
    throw InputError("cannot parse range '" + text + "' (expected MIN..MAX)");
  }
}

int cmd_validate(const std::string& file, bool as_json) {
  InstanceData data = load_instance_data(file);
  ValidationReport report = validate_metric(data.rows);
  if (as_json) {
    std::cout << validation_to_json(report, data.labels).dump(2) << "\n";
  } else if (report.valid()) {
    std::printf("valid metric on %zu points\n", data.labels.size());
  } else {
    std::printf("%zu violation(s):\n", report.violations.size());
    for (const auto& v : report.violations) std::printf("  %s\n", v.describe().c_str());
  }
  if (report.structurally_rejected()) return kInputError;
  return report.valid() ? kOk : kNegative;
}

int cmd_classify(const std::string& file, std::size_t k, const std::string& semantics,
                 bool as_json) {
  Instance inst = load_instance(file);
  ClassificationReport report = classify_all(inst.space, inst.map, k, parse_semantics(semantics));
  if (as_json) {
    std::cout << classification_to_json(report, inst.space).dump(2) << "\n";
    return kOk;
  }
  std::printf("classification at k=%zu (%s semantics)\n", k, semantics.c_str());
  print_coefficient(inst.space, report.banach);
  print_coefficient(inst.space, report.kannan);
  print_coefficient(inst.space, report.perimetric);
  print_coefficient(inst.space, report.total_pairwise);
  print_coefficient(inst.space, report.kannan_perimetric);
  std::printf("  kannan coefficient below 1/k: %s\n",
              report.kannan_below_inverse_k ? "yes" : "no");
  std::printf("  perimetric coefficient below 1/(k+1): %s\n",
              report.perimetric_below_inverse_k_plus_1 ? "yes" : "no");
  return kOk;
}

void print_verdict(const FiniteMetricSpace& space, const char* title,
                   const TheoremVerdict& v) {
  std::printf("%s:\n", title);
  std::printf("  member %s, periodic-free %s -> hypotheses %s\n",
              v.class_member ? "yes" : "no", v.periodic_free ? "yes" : "no",
              v.hypotheses_hold ? "hold" : "not satisfied");
  if (v.periodic_violation) {
    std::printf("  periodic violation: %s has prime period %zu\n",
                space.label(v.periodic_violation->second).c_str(), v.periodic_violation->first);
  }
  std::printf("  fixed points: {%s} (bound %s)\n", join(labels_of(space, v.fixed)).c_str(),
              v.count_bound_ok ? "ok" : "VIOLATED");
  if (v.hypotheses_hold) {
    std::printf("  conclusion: %s\n", v.conclusion_verified ? "verified" : "FAILED");
  }
}

int cmd_dynamics(const std::string& file, std::size_t k, const std::string& semantics,
                 bool as_json) {
  Instance inst = load_instance(file);
  Semantics sem = parse_semantics(semantics);
  if (as_json) {
    std::cout << dynamics_to_json(inst.space, inst.map, k, sem).dump(2) << "\n";
    return kOk;
  }
  std::printf("orbits:\n");
  for (std::size_t i = 0; i < inst.space.size(); ++i) {
    OrbitStructure o = orbit(inst.map, i);
    std::printf("  %s: tail [%s] cycle [%s]\n", inst.space.label(i).c_str(),
                join(labels_of(inst.space, o.tail)).c_str(),
                join(labels_of(inst.space, o.cycle)).c_str());
  }
  std::printf("fixed points: {%s}\n",
              join(labels_of(inst.space, fixed_points(inst.map))).c_str());
  std::printf("prime periods:\n");
  for (const auto& [p, points] : prime_period_table(inst.map)) {
    std::printf("  %zu: {%s}\n", p, join(labels_of(inst.space, points)).c_str());
  }
  print_verdict(inst.space, "perimetric fixed-point verdict",
                perimetric_fixed_point_check(inst.space, inst.map, k, sem));
  print_verdict(inst.space, "kannan-perimetric fixed-point verdict",
                kannan_fixed_point_check(inst.space, inst.map, k, sem));
  return kOk;
}

int cmd_theorems(const std::string& file, std::size_t k, bool as_json) {
  Instance inst = load_instance(file);
  auto results = check_implications(inst.space, inst.map, k);
  if (as_json) {
    std::cout << implications_to_json(results).dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::printf("  %-36s premise %s  %s%s\n", r.name.c_str(),
                  r.premise_hits ? "fired " : "silent",
                  r.pass() ? "pass" : "VIOLATION", r.note.empty() ? "" : "  (vacuous)");
      for (const auto& v : r.violations) std::printf("      %s\n", v.details.c_str());
    }
  }
  for (const auto& r : results) {
    if (!r.pass()) return kViolation;
  }
  return kOk;
}

int cmd_fuzz(const FuzzConfig& config, bool as_json) {
  FuzzReport report = fuzz(config);
  if (as_json) {
    std::cout << fuzz_to_json(report).dump(2) << "\n";
  } else {
    std::printf("fuzz: %zu trials, seed %llu, n %zu..%zu, k %zu..%zu, model %s\n",
                config.trials, static_cast<unsigned long long>(config.seed), config.n_min,
                config.n_max, config.k_min, config.k_max, model_name(config.model));
    for (const auto& t : report.tags) {
      std::printf("  %-36s premise %6zu/%zu  violations %zu%s\n", t.name.c_str(),
                  t.premise_hits, t.instances_checked, t.violations.size(),
                  t.note.empty() ? "" : "  (vacuous)");
    }
    std::printf("coverage floor %zu: %s\n", report.coverage_floor,
                report.coverage_ok ? "met" : ("MISSED by " + join(report.coverage_failures)).c_str());
  }
  if (report.violations_found()) return kViolation;
  return report.coverage_ok ? kOk : kNegative;
}

int cmd_iterate(const std::string& map_name, const std::vector<std::string>& params,
                const std::string& x0_text, std::size_t k, double tol, std::size_t max_steps,
                const std::string& csv_path, bool as_json) {
  std::map<std::string, double> param_map;
  for (const auto& p : params) {
    auto eq = p.find('=');
    if (eq == std::string::npos) throw InputError("bad --param '" + p + "' (expected name=value)");
    try {
      param_map[p.substr(0, eq)] = std::stod(p.substr(eq + 1));
    } catch (const std::exception&) {
      throw InputError("bad --param value in '" + p + "'");
    }
  }
  picard::Point x0;
  std::size_t pos = 0;
  try {
    while (pos < x0_text.size()) {
      std::size_t used = 0;
      x0.push_back(std::stod(x0_text.substr(pos), &used));
      pos += used;
      if (pos < x0_text.size() && x0_text[pos] == ',') ++pos;
    }
  } catch (const std::exception&) {
    throw InputError("cannot parse --x0 '" + x0_text + "'");
  }
  picard::MetricOracle oracle;
  try {
    oracle = picard::make_oracle(map_name, param_map);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  picard::IterationTrace trace = picard::picard_iterate(oracle, x0, k, {tol, max_steps});
  if (!csv_path.empty()) {
    std::ofstream out(csv_path);
    if (!out) throw InputError("cannot write '" + csv_path + "'");
    out << trace_to_csv(trace);
  }
  if (as_json) {
    std::cout << trace_to_json(trace).dump(2) << "\n";
  } else {
    std::printf("map %s, k=%zu, %zu steps, %s\n", map_name.c_str(), k,
                trace.step_distances.size(), trace.converged ? "converged" : "NOT converged");
    std::printf("  limit (");
    for (std::size_t d = 0; d < trace.limit.size(); ++d) {
      std::printf("%s%.12g", d ? ", " : "", trace.limit[d]);
    }
    std::printf(")\n  r0 perimeter %.12g, lambda estimate %.12g, mu estimate %.12g\n",
                trace.r0_perimeter, trace.lambda_estimate, trace.mu_estimate);
    std::printf("  estimates are lower bounds of the true suprema\n");
  }
  return trace.converged ? kOk : kNegative;
}

int cmd_repro(const std::string& id, bool as_json) {
  std::vector<const BuiltinInstance*> selected;
  if (id == "all") {
    for (const auto& inst : instance_registry()) selected.push_back(&inst);
  } else {
    const BuiltinInstance* inst = find_instance(id);
    if (!inst) {
      std::string known;
      for (const auto& i : instance_registry()) known += " " + i.id;
      throw InputError("unknown instance '" + id + "'; available:" + known + " all");
    }
    selected.push_back(inst);
  }
  bool all_match = true;
  for (const BuiltinInstance* inst : selected) {
    ReproOutcome outcome = run_repro(*inst);
    all_match = all_match && outcome.all_match;
    if (as_json) {
      std::cout << repro_to_json(outcome).dump(2) << "\n";
      continue;
    }
    std::printf("%s: %s\n", inst->id.c_str(), inst->description.c_str());
    for (const auto& line : outcome.lines) {
      std::printf("  %-52s %-12s %s\n", line.quantity.c_str(), line.expected.c_str(),
                  line.match ? "ok" : ("MISMATCH got " + line.actual).c_str());
    }
    for (const auto& note : outcome.notes) std::printf("  note: %s\n", note.c_str());
  }
  return all_match ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite metric space contraction classifier and fixed-point toolkit"};
  app.require_subcommand(1);

  std::string file, semantics = "strict", id, map_name, x0_text = "1", csv_path;
  std::vector<std::string> params;
  std::size_t k = 3, max_steps = 200;
  double tol = 1e-9;
  bool as_json = false;
  FuzzConfig fuzz_config;
  std::string n_range = "3..8", k_range = "3..5", model = "closure";

  auto* validate = app.add_subcommand("validate", "check the metric axioms of an instance file");
  validate->add_option("file", file)->required();
  validate->add_flag("--json", as_json);

  auto* classify = app.add_subcommand("classify", "compute all five contraction coefficients");
  classify->add_option("file", file)->required();
  classify->add_option("--k", k, "polygon size")->required();
  classify->add_option("--semantics", semantics, "strict | paper-ordering");
  classify->add_flag("--json", as_json);

  auto* dynamics = app.add_subcommand("dynamics", "orbits, periodic points, theorem verdicts");
  dynamics->add_option("file", file)->required();
  dynamics->add_option("--k", k, "polygon size")->required();
  dynamics->add_option("--semantics", semantics, "strict | paper-ordering");
  dynamics->add_flag("--json", as_json);

  auto* theorems = app.add_subcommand("theorems", "run every implication check on one instance");
  theorems->add_option("file", file)->required();
  theorems->add_option("--k", k, "polygon size")->required();
  theorems->add_flag("--json", as_json);

  auto* fuzz_cmd = app.add_subcommand("fuzz", "randomized implication checking");
  fuzz_cmd->add_option("--seed", fuzz_config.seed);
  fuzz_cmd->add_option("--trials", fuzz_config.trials);
  fuzz_cmd->add_option("--n", n_range, "point count range MIN..MAX");
  fuzz_cmd->add_option("--k", k_range, "polygon size range MIN..MAX");
  fuzz_cmd->add_option("--model", model, "closure | grid");
  fuzz_cmd->add_flag("--json", as_json);

  auto* iterate = app.add_subcommand("iterate", "Picard iteration on a built-in map");
  iterate->add_option("--map", map_name, "registry name")->required();
  iterate->add_option("--param,--params", params, "map parameter name=value (repeatable)")
      ->delimiter(',');
  iterate->add_option("--x0", x0_text, "start point, comma-separated coordinates");
  iterate->add_option("--k", k, "polygon size for the error bounds");
  iterate->add_option("--tol", tol, "stop tolerance");
  iterate->add_option("--max-steps", max_steps);
  iterate->add_option("--csv", csv_path, "write the trace as CSV");
  iterate->add_flag("--json", as_json);

  auto* repro = app.add_subcommand("repro", "recompute a registered instance's pinned values");
  repro->add_option("id", id, "instance id, or 'all'")->required();
  repro->add_flag("--json", as_json);

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(file, as_json);
    if (classify->parsed()) return cmd_classify(file, k, semantics, as_json);
    if (dynamics->parsed()) return cmd_dynamics(file, k, semantics, as_json);
    if (theorems->parsed()) return cmd_theorems(file, k, as_json);
    if (fuzz_cmd->parsed()) {
      Range n = parse_range(n_range), kr = parse_range(k_range);
      fuzz_config.n_min = n.lo;
      fuzz_config.n_max = n.hi;
      fuzz_config.k_min = kr.lo;
      fuzz_config.k_max = kr.hi;
      fuzz_config.model = parse_model(model);
      return cmd_fuzz(fuzz_config, as_json);
    }
    if (iterate->parsed()) {
      return cmd_iterate(map_name, params, x0_text, k, tol, max_steps, csv_path, as_json);
    }
    if (repro->parsed()) return cmd_repro(id, as_json);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidMetricError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    for (const auto& v : e.report().violations) std::cerr << "  " << v.describe() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
