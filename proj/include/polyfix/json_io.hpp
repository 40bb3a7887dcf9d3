#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "polyfix/classifier.hpp"
#include "polyfix/dynamics.hpp"
#include "polyfix/instances.hpp"
#include "polyfix/metric_space.hpp"
#include "polyfix/picard.hpp"
#include "polyfix/theorem_oracle.hpp"

namespace polyfix {

inline constexpr const char* kSchemaTag = "polyfix/1";

/// Malformed input document (missing keys, bad rationals, non-total map, ...).
/// The message carries a location hint.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raw instance content after structural/type checks but before metric-axiom
/// validation, so `validate` can report axiom violations instead of failing.
struct InstanceData {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> rows;
  SelfMap map;
};

struct Instance {
  FiniteMetricSpace space;
  SelfMap map;
};

/// Document format: {"points": [labels...],
///                   "distances": [[integers or "p/q" strings]],
///                   "map": {label: label, ...}}.
InstanceData parse_instance_data(const nlohmann::json& doc);
InstanceData load_instance_data(const std::filesystem::path& path);

/// Parses and constructs a validated space (InvalidMetricError on bad axioms).
Instance load_instance(const std::filesystem::path& path);
Instance parse_instance(const nlohmann::json& doc);

nlohmann::json instance_to_json(const FiniteMetricSpace& space, const SelfMap& map);
nlohmann::json validation_to_json(const ValidationReport& report,
                                  const std::vector<std::string>& labels);
nlohmann::json coefficient_to_json(const CoefficientResult& result,
                                   const FiniteMetricSpace& space);
nlohmann::json classification_to_json(const ClassificationReport& report,
                                      const FiniteMetricSpace& space);
nlohmann::json verdict_to_json(const TheoremVerdict& verdict, const FiniteMetricSpace& space);
nlohmann::json dynamics_to_json(const FiniteMetricSpace& space, const SelfMap& map, std::size_t k,
                                Semantics semantics);
nlohmann::json implications_to_json(const std::vector<ImplicationResult>& results);
nlohmann::json fuzz_to_json(const FuzzReport& report);
nlohmann::json trace_to_json(const picard::IterationTrace& trace);
std::string trace_to_csv(const picard::IterationTrace& trace);
nlohmann::json repro_to_json(const ReproOutcome& outcome);

const char* semantics_name(Semantics semantics);
Semantics parse_semantics(const std::string& name);
const char* model_name(DistanceModel model);
DistanceModel parse_model(const std::string& name);

}  // namespace polyfix
