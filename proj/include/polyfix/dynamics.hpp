#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "polyfix/classifier.hpp"
#include "polyfix/metric_space.hpp"

namespace polyfix {

/// Eventually-periodic trajectory of a point under the map: the tail before
/// the orbit enters a cycle, then the cycle itself. Applying the map to the
/// last tail element yields the first cycle element; the map sends each cycle
/// element to the next and the last back to the first.
struct OrbitStructure {
  std::size_t start{};
  std::vector<std::size_t> tail;
  std::vector<std::size_t> cycle;
};

OrbitStructure orbit(const SelfMap& map, std::size_t start);

/// All points with T(x) = x, sorted by index.
std::vector<std::size_t> fixed_points(const SelfMap& map);

/// Points of prime period exactly p (least q >= 1 with T^q x = x is p).
/// Prime period 1 means fixed point. Tail points are never periodic.
std::vector<std::size_t> periodic_points(const SelfMap& map, std::size_t p);

/// period -> points of that prime period, covering every point on a cycle.
std::map<std::size_t, std::vector<std::size_t>> prime_period_table(const SelfMap& map);

/// Hypothesis/conclusion verdict for the fixed-point result of one
/// contraction class at polygon size k: membership plus the absence of
/// periodic points of prime periods 2..k-1 force a fixed point to exist, and
/// membership alone caps the number of fixed points at k-1.
struct TheoremVerdict {
  std::size_t k{};
  CoefficientResult coefficient;
  bool class_member{false};
  bool periodic_free{false};
  std::optional<std::pair<std::size_t, std::size_t>> periodic_violation;  // (period, point)
  bool hypotheses_hold{false};
  std::vector<std::size_t> fixed;
  bool count_bound_ok{true};     // member => |fixed| <= k-1 (vacuously true otherwise)
  bool cycle_lengths_ok{true};   // under the hypotheses every orbit cycle has length 1 or >= k
  bool conclusion_verified{true};  // under the hypotheses: fixed nonempty, bound, cycle lengths
};

/// Verdict for the polygon-perimeter class at size k.
TheoremVerdict perimetric_fixed_point_check(const FiniteMetricSpace& space, const SelfMap& map,
                                            std::size_t k,
                                            Semantics semantics = Semantics::Strict);

/// Verdict for the Kannan-type polygon class at size k (membership needs a
/// feasible coefficient strictly below 2/k).
TheoremVerdict kannan_fixed_point_check(const FiniteMetricSpace& space, const SelfMap& map,
                                        std::size_t k, Semantics semantics = Semantics::Strict);

}  // namespace polyfix
