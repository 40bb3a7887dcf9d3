#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "polyfix/metric_space.hpp"

namespace polyfix {

struct BuiltinInstance;

/// One pinned regression value for a built-in instance: a displayed quantity,
/// the frozen expected rendering, and the computation that reproduces it.
struct ExpectedValue {
  std::string quantity;
  std::string expected;
  std::string basis;  // where the frozen value comes from
  std::function<std::string(const BuiltinInstance&)> compute;
};

/// An embedded worked instance with its expected values and any notes about
/// discrepancies in the original presentation.
struct BuiltinInstance {
  std::string id;
  std::string description;
  FiniteMetricSpace space;
  SelfMap map;
  std::size_t k{3};
  std::vector<ExpectedValue> expected;
  std::vector<std::string> notes;
};

const std::vector<BuiltinInstance>& instance_registry();
const BuiltinInstance* find_instance(std::string_view id);

struct ReproLine {
  std::string quantity;
  std::string expected;
  std::string actual;
  bool match{false};
};

struct ReproOutcome {
  std::string id;
  std::vector<ReproLine> lines;
  std::vector<std::string> notes;
  bool all_match{true};
};

/// Recomputes every expected value of the instance and compares exactly.
ReproOutcome run_repro(const BuiltinInstance& instance);

}  // namespace polyfix
