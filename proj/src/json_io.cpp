#include "polyfix/json_io.hpp"

#include <fstream>
#include <set>

namespace polyfix {

namespace {

Rational rational_from_json(const nlohmann::json& value, const std::string& where) {
  if (value.is_number_integer()) return Rational(value.get<std::int64_t>());
  if (value.is_string()) {
    try {
      return Rational::parse(value.get<std::string>());
    } catch (const std::exception& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + ": expected an integer or a \"p/q\" string");
}

std::vector<std::string> witness_labels(const FiniteMetricSpace& space, const PointTuple& t) {
  std::vector<std::string> out;
  out.reserve(t.size());
  for (std::size_t idx : t) out.push_back(space.label(idx));
  return out;
}

}  // namespace

const char* semantics_name(Semantics semantics) {
  return semantics == Semantics::Strict ? "strict" : "paper-ordering";
}

Semantics parse_semantics(const std::string& name) {
  if (name == "strict") return Semantics::Strict;
  if (name == "paper-ordering") return Semantics::PaperOrdering;
  throw InputError("unknown semantics '" + name + "' (strict | paper-ordering)");
}

const char* model_name(DistanceModel model) {
  return model == DistanceModel::IntegerClosure ? "closure" : "grid";
}

DistanceModel parse_model(const std::string& name) {
  if (name == "closure") return DistanceModel::IntegerClosure;
  if (name == "grid") return DistanceModel::TaxicabGrid;
  throw InputError("unknown distance model '" + name + "' (closure | grid)");
}

InstanceData parse_instance_data(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("instance document must be a JSON object");
  for (const char* key : {"points", "distances", "map"}) {
    if (!doc.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  }

  InstanceData data;
  const auto& points = doc["points"];
  if (!points.is_array() || points.empty()) {
    throw InputError("\"points\" must be a nonempty array of labels");
  }
  std::set<std::string> seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!points[i].is_string()) {
      throw InputError("points[" + std::to_string(i) + "] is not a string");
    }
    std::string label = points[i].get<std::string>();
    if (!seen.insert(label).second) throw InputError("duplicate point label '" + label + "'");
    data.labels.push_back(std::move(label));
  }

  const auto& distances = doc["distances"];
  if (!distances.is_array() || distances.size() != data.labels.size()) {
    throw InputError("\"distances\" must be an array with one row per point");
  }
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (!distances[i].is_array()) {
      throw InputError("distances[" + std::to_string(i) + "] is not an array");
    }
    std::vector<Rational> row;
    for (std::size_t j = 0; j < distances[i].size(); ++j) {
      row.push_back(rational_from_json(
          distances[i][j], "distances[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
    }
    data.rows.push_back(std::move(row));
  }

  const auto& map = doc["map"];
  if (!map.is_object()) throw InputError("\"map\" must be an object {label: label}");
  auto index_of = [&](const std::string& label, const std::string& where) {
    for (std::size_t i = 0; i < data.labels.size(); ++i) {
      if (data.labels[i] == label) return i;
    }
    throw InputError(where + ": unknown point label '" + label + "'");
  };
  data.map.image.assign(data.labels.size(), data.labels.size());
  for (const auto& [from, to] : map.items()) {
    std::size_t src = index_of(from, "map key");
    if (!to.is_string()) throw InputError("map[\"" + from + "\"] is not a string");
    data.map.image[src] = index_of(to.get<std::string>(), "map[\"" + from + "\"]");
  }
  for (std::size_t i = 0; i < data.labels.size(); ++i) {
    if (data.map.image[i] >= data.labels.size()) {
      throw InputError("map is not total: no image for point '" + data.labels[i] + "'");
    }
  }
  return data;
}

InstanceData load_instance_data(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  return parse_instance_data(doc);
}

Instance parse_instance(const nlohmann::json& doc) {
  InstanceData data = parse_instance_data(doc);
  return Instance{FiniteMetricSpace(data.labels, data.rows), std::move(data.map)};
}

Instance load_instance(const std::filesystem::path& path) {
  InstanceData data = load_instance_data(path);
  return Instance{FiniteMetricSpace(data.labels, data.rows), std::move(data.map)};
}

nlohmann::json instance_to_json(const FiniteMetricSpace& space, const SelfMap& map) {
  nlohmann::json doc;
  doc["points"] = space.labels();
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < space.size(); ++j) row.push_back(space.dist(i, j).str());
    rows.push_back(std::move(row));
  }
  doc["distances"] = std::move(rows);
  nlohmann::json m = nlohmann::json::object();
  for (std::size_t i = 0; i < map.size(); ++i) m[space.label(i)] = space.label(map(i));
  doc["map"] = std::move(m);
  return doc;
}

nlohmann::json validation_to_json(const ValidationReport& report,
                                  const std::vector<std::string>& labels) {
  nlohmann::json doc;
  doc["schema"] = kSchemaTag;
  doc["valid"] = report.valid();
  doc["structural_rejection"] = report.structurally_rejected();
  nlohmann::json list = nlohmann::json::array();
  auto name_or_index = [&](std::size_t i) {
    return i < labels.size() ? labels[i] : std::to_string(i);
  };
  for (const auto& v : report.violations) {
    nlohmann::json item;
    item["description"] = v.describe();
    item["structural"] = v.structural();
    switch (v.kind) {
      case MetricViolation::Kind::NotSquare:
        item["axiom"] = "square-matrix";
        break;
      case MetricViolation::Kind::NegativeEntry:
        item["axiom"] = "nonnegative";
        item["points"] = {name_or_index(v.i), name_or_index(v.j)};
        break;
      case MetricViolation::Kind::NonzeroDiagonal:
        item["axiom"] = "identity";
        item["points"] = {name_or_index(v.i)};
        break;
      case MetricViolation::Kind::Asymmetric:
        item["axiom"] = "symmetry";
        item["points"] = {name_or_index(v.i), name_or_index(v.j)};
        break;
      case MetricViolation::Kind::ZeroOffDiagonal:
        item["axiom"] = "positivity";
        item["points"] = {name_or_index(v.i), name_or_index(v.j)};
        break;
      case MetricViolation::Kind::Triangle:
        item["axiom"] = "triangle";
        item["points"] = {name_or_index(v.i), name_or_index(v.j), name_or_index(v.k)};
        break;
    }
    list.push_back(std::move(item));
  }
  doc["violations"] = std::move(list);
  return doc;
}

nlohmann::json coefficient_to_json(const CoefficientResult& result,
                                   const FiniteMetricSpace& space) {
  nlohmann::json doc;
  doc["class"] = class_name(result.kind);
  doc["k"] = result.k;
  doc["feasible"] = result.feasible;
  doc["threshold"] = result.threshold.str();
  doc["member"] = result.member;
  doc["witness"] = witness_labels(space, result.witness);
  doc["lhs"] = result.lhs.str();
  doc["rhs"] = result.rhs.str();
  if (result.feasible) {
    doc["infimum"] = result.infimum.str();
  } else {
    doc["infimum"] = "INFEASIBLE";
  }
  if (result.below_inverse_k.has_value()) doc["below_inverse_k"] = *result.below_inverse_k;
  return doc;
}

nlohmann::json classification_to_json(const ClassificationReport& report,
                                      const FiniteMetricSpace& space) {
  nlohmann::json doc;
  doc["schema"] = kSchemaTag;
  doc["k"] = report.k;
  doc["semantics"] = semantics_name(report.semantics);
  doc["classes"] = {
      {"banach", coefficient_to_json(report.banach, space)},
      {"kannan", coefficient_to_json(report.kannan, space)},
      {"perimetric", coefficient_to_json(report.perimetric, space)},
      {"total_pairwise", coefficient_to_json(report.total_pairwise, space)},
      {"kannan_perimetric", coefficient_to_json(report.kannan_perimetric, space)},
  };
  doc["premise_flags"] = {
      {"kannan_below_inverse_k", report.kannan_below_inverse_k},
      {"perimetric_below_inverse_k_plus_1", report.perimetric_below_inverse_k_plus_1},
  };
  return doc;
}

nlohmann::json verdict_to_json(const TheoremVerdict& verdict, const FiniteMetricSpace& space) {
  nlohmann::json doc;
  doc["k"] = verdict.k;
  doc["coefficient"] = coefficient_to_json(verdict.coefficient, space);
  doc["class_member"] = verdict.class_member;
  doc["periodic_free"] = verdict.periodic_free;
  if (verdict.periodic_violation) {
    doc["periodic_violation"] = {
        {"period", verdict.periodic_violation->first},
        {"point", space.label(verdict.periodic_violation->second)},
    };
  }
  doc["hypotheses_hold"] = verdict.hypotheses_hold;
  doc["fixed_points"] = witness_labels(space, verdict.fixed);
  doc["count_bound_ok"] = verdict.count_bound_ok;
  doc["cycle_lengths_ok"] = verdict.cycle_lengths_ok;
  doc["conclusion_verified"] = verdict.conclusion_verified;
  return doc;
}

nlohmann::json dynamics_to_json(const FiniteMetricSpace& space, const SelfMap& map, std::size_t k,
                                Semantics semantics) {
  nlohmann::json doc;
  doc["schema"] = kSchemaTag;
  doc["k"] = k;
  doc["semantics"] = semantics_name(semantics);
  nlohmann::json orbits = nlohmann::json::array();
  for (std::size_t i = 0; i < space.size(); ++i) {
    OrbitStructure o = orbit(map, i);
    orbits.push_back({{"start", space.label(i)},
                      {"tail", witness_labels(space, o.tail)},
                      {"cycle", witness_labels(space, o.cycle)}});
  }
  doc["orbits"] = std::move(orbits);
  doc["fixed_points"] = witness_labels(space, fixed_points(map));
  nlohmann::json periods = nlohmann::json::object();
  for (const auto& [p, points] : prime_period_table(map)) {
    periods[std::to_string(p)] = witness_labels(space, points);
  }
  doc["prime_periods"] = std::move(periods);
  doc["perimetric_verdict"] =
      verdict_to_json(perimetric_fixed_point_check(space, map, k, semantics), space);
  doc["kannan_perimetric_verdict"] =
      verdict_to_json(kannan_fixed_point_check(space, map, k, semantics), space);
  return doc;
}

namespace {

nlohmann::json implication_to_json(const ImplicationResult& result) {
  nlohmann::json doc;
  doc["name"] = result.name;
  doc["instances_checked"] = result.instances_checked;
  doc["premise_hits"] = result.premise_hits;
  if (result.premise_hits_full > 0) doc["premise_hits_full"] = result.premise_hits_full;
  if (!result.note.empty()) doc["note"] = result.note;
  doc["pass"] = result.pass();
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : result.violations) {
    violations.push_back({{"details", v.details},
                          {"k", v.k},
                          {"trial_seed", v.trial_seed},
                          {"instance", instance_to_json(v.space, v.map)}});
  }
  doc["violations"] = std::move(violations);
  return doc;
}

}  // namespace

nlohmann::json implications_to_json(const std::vector<ImplicationResult>& results) {
  nlohmann::json doc;
  doc["schema"] = kSchemaTag;
  nlohmann::json tags = nlohmann::json::array();
  for (const auto& r : results) tags.push_back(implication_to_json(r));
  doc["tags"] = std::move(tags);
  return doc;
}

nlohmann::json fuzz_to_json(const FuzzReport& report) {
  nlohmann::json doc;
  doc["schema"] = kSchemaTag;
  doc["config"] = {
      {"seed", report.config.seed},       {"trials", report.config.trials},
      {"n_min", report.config.n_min},     {"n_max", report.config.n_max},
      {"k_min", report.config.k_min},     {"k_max", report.config.k_max},
      {"model", model_name(report.config.model)},
  };
  nlohmann::json tags = nlohmann::json::array();
  for (const auto& r : report.tags) tags.push_back(implication_to_json(r));
  doc["tags"] = std::move(tags);
  doc["coverage_floor"] = report.coverage_floor;
  doc["coverage_ok"] = report.coverage_ok;
  doc["coverage_failures"] = report.coverage_failures;
  doc["violations_found"] = report.violations_found();
  return doc;
}

nlohmann::json trace_to_json(const picard::IterationTrace& trace) {
  nlohmann::json doc;
  doc["schema"] = kSchemaTag;
  doc["k"] = trace.k;
  doc["converged"] = trace.converged;
  doc["limit"] = trace.limit;
  doc["r0_perimeter"] = trace.r0_perimeter;
  doc["lambda_estimate"] = trace.lambda_estimate;
  doc["mu_estimate"] = trace.mu_estimate;
  if (!trace.kannan_bounds.empty()) {
    doc["rho"] = trace.rho;
    doc["big_r"] = trace.big_r;
  }
  nlohmann::json steps = nlohmann::json::array();
  for (std::size_t n = 0; n < trace.points.size(); ++n) {
    nlohmann::json step;
    step["step"] = n;
    step["point"] = trace.points[n];
    if (n < trace.step_distances.size()) step["r"] = trace.step_distances[n];
    if (n < trace.bounds.size()) step["bound"] = trace.bounds[n];
    if (n < trace.kannan_bounds.size() && n >= trace.k) {
      step["kannan_bound"] = trace.kannan_bounds[n];
    }
    steps.push_back(std::move(step));
  }
  doc["steps"] = std::move(steps);
  doc["estimates_are_lower_bounds"] = true;
  return doc;
}

std::string trace_to_csv(const picard::IterationTrace& trace) {
  const std::size_t dim = trace.points.empty() ? 1 : trace.points.front().size();
  std::string out = "step";
  for (std::size_t d = 0; d < dim; ++d) out += ",x" + std::to_string(d);
  out += ",r,bound,kannan_bound\n";
  char buf[64];
  auto fmt = [&](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  for (std::size_t n = 0; n < trace.points.size(); ++n) {
    out += std::to_string(n);
    for (double c : trace.points[n]) out += "," + fmt(c);
    out += ",";
    if (n < trace.step_distances.size()) out += fmt(trace.step_distances[n]);
    out += ",";
    if (n < trace.bounds.size()) out += fmt(trace.bounds[n]);
    out += ",";
    if (n < trace.kannan_bounds.size() && n >= trace.k) out += fmt(trace.kannan_bounds[n]);
    out += "\n";
  }
  return out;
}

nlohmann::json repro_to_json(const ReproOutcome& outcome) {
  nlohmann::json doc;
  doc["schema"] = kSchemaTag;
  doc["id"] = outcome.id;
  doc["all_match"] = outcome.all_match;
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& line : outcome.lines) {
    lines.push_back({{"quantity", line.quantity},
                     {"expected", line.expected},
                     {"actual", line.actual},
                     {"match", line.match}});
  }
  doc["checks"] = std::move(lines);
  doc["notes"] = outcome.notes;
  return doc;
}

}  // namespace polyfix
