#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "polyfix/metric_space.hpp"
#include "polyfix/polygon_enum.hpp"

namespace polyfix {

enum class ContractionClass {
  Banach,            // d(Tx,Ty) <= c * d(x,y), threshold 1
  Kannan,            // d(Tx,Ty) <= c * (d(x,Tx) + d(y,Ty)), threshold 1/2
  Perimetric,        // P(T-images) <= c * P(polygon),        threshold 1
  TotalPairwise,     // S(T-images) <= c * S(points),         threshold 1
  KannanPerimetric,  // P(T-images) <= c * sum d(x_i,Tx_i),   threshold 2/k
};

std::string class_name(ContractionClass cls);

/// Which orderings of a point set the polygon-based classes quantify over.
/// Strict evaluates every cyclic order (the definitions say "for all pairwise
/// distinct points"); PaperOrdering evaluates only the increasing-index order
/// of each subset, reproducing single-ordering worked computations.
enum class Semantics { Strict, PaperOrdering };

/// Minimal feasible contraction coefficient for one class.
///
/// The coefficient is the maximum of lhs/rhs over all admissible tuples, i.e.
/// the least c for which the class inequality holds non-strictly; membership
/// additionally requires it below the strict class threshold. `feasible` is
/// false when some tuple has rhs = 0 with lhs > 0 (no finite coefficient
/// exists); the offending tuple is reported as the witness.
struct CoefficientResult {
  ContractionClass kind{};
  std::size_t k{};  // tuple size the class was evaluated at (2 for the point pairs)
  bool feasible{true};
  Rational infimum{};
  Rational threshold{};
  bool member{false};
  PointTuple witness{};  // argmax pair / cycle / subset, earliest in enumeration order
  Rational lhs{}, rhs{};
  std::optional<bool> below_inverse_k{};  // Kannan only: coefficient < 1/k for a requested k
};

/// Max over unordered pairs x != y of d(Tx,Ty)/d(x,y). Requires n >= 2.
CoefficientResult banach_coefficient(const FiniteMetricSpace& space, const SelfMap& map);

/// Max over pairs of d(Tx,Ty)/(d(x,Tx)+d(y,Ty)); pairs with both sides zero
/// are skipped; a zero denominator under a positive numerator makes the class
/// infeasible. When premise_k >= 3 the result also reports whether the
/// coefficient lies below 1/premise_k.
CoefficientResult kannan_coefficient(const FiniteMetricSpace& space, const SelfMap& map,
                                     std::size_t premise_k = 0);

/// Max over all k-subsets and canonical cycles of
/// perimeter(images in cycle order) / perimeter(cycle). Requires 3 <= k <= n.
CoefficientResult perimetric_coefficient(const FiniteMetricSpace& space, const SelfMap& map,
                                         std::size_t k, Semantics semantics = Semantics::Strict);

/// Max over k-subsets of S(images)/S(subset); ordering is irrelevant because
/// S is permutation-invariant. Requires 2 <= k <= n.
CoefficientResult total_distance_coefficient(const FiniteMetricSpace& space, const SelfMap& map,
                                             std::size_t k);

/// Max over all k-subsets and canonical cycles of
/// perimeter(images in cycle order) / sum_i d(x_i, Tx_i). The denominator
/// depends only on the subset; a subset of k fixed points makes the class
/// infeasible. Requires 3 <= k <= n.
CoefficientResult kannan_perimetric_coefficient(const FiniteMetricSpace& space, const SelfMap& map,
                                                std::size_t k,
                                                Semantics semantics = Semantics::Strict);

/// The exact numerator/denominator pair the class inequality compares for one
/// specific cyclic order. Valid for Perimetric, KannanPerimetric and
/// TotalPairwise.
std::pair<Rational, Rational> ratio_for_cycle(const FiniteMetricSpace& space, const SelfMap& map,
                                              const PointTuple& cycle, ContractionClass cls);

/// All five coefficient results plus the premise flags used by the
/// implication checks (Kannan coefficient < 1/k, perimetric < 1/(k+1)).
struct ClassificationReport {
  std::size_t k{};
  Semantics semantics{Semantics::Strict};
  CoefficientResult banach;
  CoefficientResult kannan;
  CoefficientResult perimetric;
  CoefficientResult total_pairwise;
  CoefficientResult kannan_perimetric;
  bool kannan_below_inverse_k{false};
  bool perimetric_below_inverse_k_plus_1{false};
};

ClassificationReport classify_all(const FiniteMetricSpace& space, const SelfMap& map,
                                  std::size_t k, Semantics semantics = Semantics::Strict);

}  // namespace polyfix
