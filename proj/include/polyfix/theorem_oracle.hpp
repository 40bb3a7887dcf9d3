#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyfix/classifier.hpp"
#include "polyfix/dynamics.hpp"
#include "polyfix/metric_space.hpp"

namespace polyfix {

/// splitmix64 step: advances the state and returns a mixed 64-bit value.
/// Hand-rolled (not <random>) so reports are byte-identical everywhere.
struct SplitMix64 {
  std::uint64_t state{0};

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Unbiased value in [0, bound) by rejection.
  std::uint64_t below(std::uint64_t bound) {
    std::uint64_t threshold = (0 - bound) % bound;
    while (true) {
      std::uint64_t x = next();
      if (x >= threshold) return x % bound;
    }
  }

  std::uint64_t range(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
};

/// Sub-seed for stream `index` of `master`; trials derive their own seeds
/// this way so serial and sharded runs draw identical instances.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

enum class DistanceModel {
  IntegerClosure,  // symmetric positive integer matrix, then shortest-path closure
  TaxicabGrid,     // distinct random points on a 2-D integer grid, taxicab distance
};

/// Deterministic valid metric space on n points for the given seed.
FiniteMetricSpace random_space(std::uint64_t seed, std::size_t n, DistanceModel model);

/// Deterministic uniform total self-map on n points for the given seed.
SelfMap random_map(std::uint64_t seed, std::size_t n);

/// A concrete instance on which some implication's premise held but its
/// conclusion failed, kept whole for replay.
struct ViolationRecord {
  FiniteMetricSpace space;
  SelfMap map;
  std::size_t k{};
  std::uint64_t trial_seed{};
  std::string details;
};

struct ImplicationResult {
  std::string name;
  std::size_t instances_checked{0};
  std::size_t premise_hits{0};
  /// Second-stage premise count for the fixed-point tags (membership plus the
  /// periodic-point hypothesis), 0 elsewhere.
  std::size_t premise_hits_full{0};
  std::vector<ViolationRecord> violations;
  std::string note;

  bool pass() const { return violations.empty(); }
};

/// Implication tags, one per checked statement, in fixed report order.
/// The two uniqueness statements quantify over iteration sequences whose
/// limit differs from every iterate; on a finite space the orbit lands on its
/// limit, so their premise never fires and they are recorded as vacuous (the
/// continuous-space module checks them substantively).
inline const std::vector<std::string>& implication_tags() {
  static const std::vector<std::string> tags = {
      "perimetric_implies_total",         // same-coefficient inclusion at k
      "total_monotone_points",            // total coefficient nonincreasing in point count
      "perimetric_implies_total_above_k", // inclusion propagated to every n' > k
      "banach_principle",                 // Banach member: unique fixed point, no periodic points
      "iteration_limit_uniqueness",       // vacuous on finite spaces
      "kannan_pointwise_implies_polygon", // gamma < 1/k gives polygon coefficient <= 2*gamma
      "perimetric_implies_kannan_polygon",// lambda < 1/(k+1) gives mu <= 2*lambda/(1-lambda)
      "perimetric_fixed_point",           // membership bounds fixed points; hypotheses force one
      "kannan_polygon_fixed_point",       // same for the Kannan polygon class
      "kannan_iteration_limit_uniqueness" // vacuous on finite spaces
  };
  return tags;
}

/// Evaluates every implication tag on one instance. `trial_seed` is only
/// echoed into violation records.
std::vector<ImplicationResult> check_implications(const FiniteMetricSpace& space,
                                                  const SelfMap& map, std::size_t k,
                                                  std::uint64_t trial_seed = 0);

struct FuzzConfig {
  std::uint64_t seed{1};
  std::size_t trials{1000};
  std::size_t n_min{3}, n_max{8};
  std::size_t k_min{3}, k_max{5};
  DistanceModel model{DistanceModel::IntegerClosure};

  void validate() const;
};

struct FuzzReport {
  FuzzConfig config;
  std::vector<ImplicationResult> tags;
  /// Premise floor: tags expected to fire at least ceil(trials/100) times.
  std::size_t coverage_floor{0};
  std::vector<std::string> coverage_failures;
  bool coverage_ok{true};

  bool violations_found() const;
  const ImplicationResult& tag(const std::string& name) const;
};

/// Runs `trials` seeded random instances through check_implications and
/// aggregates per tag. Same config (including seed) gives a byte-identical
/// report.
FuzzReport fuzz(const FuzzConfig& config);

}  // namespace polyfix
