#include "polyfix/classifier.hpp"

#include <stdexcept>

namespace polyfix {

std::string class_name(ContractionClass cls) {
  switch (cls) {
    case ContractionClass::Banach: return "banach";
    case ContractionClass::Kannan: return "kannan";
    case ContractionClass::Perimetric: return "perimetric";
    case ContractionClass::TotalPairwise: return "total_pairwise";
    case ContractionClass::KannanPerimetric: return "kannan_perimetric";
  }
  return "?";
}

namespace {

/// Running maximum of exact ratios. Strictly-greater replacement keeps the
/// earliest witness, so enumeration order decides ties deterministically.
struct RatioMax {
  bool seen{false};
  Rational best{};  // best = lhs/rhs at the current witness
  Rational lhs{}, rhs{};
  PointTuple witness{};

  void offer(const Rational& num, const Rational& den, const PointTuple& tuple) {
    Rational ratio = num / den;
    if (!seen || ratio > best) {
      seen = true;
      best = ratio;
      lhs = num;
      rhs = den;
      witness = tuple;
    }
  }
};

CoefficientResult finish(ContractionClass kind, std::size_t k, const Rational& threshold,
                         const RatioMax& acc) {
  CoefficientResult r;
  r.kind = kind;
  r.k = k;
  r.threshold = threshold;
  r.infimum = acc.seen ? acc.best : Rational(0);
  r.lhs = acc.lhs;
  r.rhs = acc.rhs;
  r.witness = acc.witness;
  r.member = r.infimum < threshold;
  return r;
}

CoefficientResult infeasible(ContractionClass kind, std::size_t k, const Rational& threshold,
                             const Rational& lhs, const PointTuple& witness) {
  CoefficientResult r;
  r.kind = kind;
  r.k = k;
  r.threshold = threshold;
  r.feasible = false;
  r.member = false;
  r.lhs = lhs;
  r.rhs = Rational(0);
  r.witness = witness;
  return r;
}

Rational displacement_sum(const FiniteMetricSpace& space, const SelfMap& map,
                          const PointTuple& subset) {
  Rational sum;
  for (std::size_t idx : subset) sum += space.dist(idx, map(idx));
  return sum;
}

template <typename Fn>
void for_each_ordering(const std::vector<std::size_t>& subset, Semantics semantics, Fn&& fn) {
  if (semantics == Semantics::PaperOrdering) {
    fn(subset);  // subsets stream in increasing index order already
    return;
  }
  for_each_canonical_cycle(subset, [&](const CanonicalCycle& c) { fn(c.vertices); });
}

}  // namespace

CoefficientResult banach_coefficient(const FiniteMetricSpace& space, const SelfMap& map) {
  const std::size_t n = space.size();
  if (n < 2) throw std::invalid_argument("banach coefficient requires n >= 2");
  RatioMax acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      acc.offer(space.dist(map(i), map(j)), space.dist(i, j), {i, j});
    }
  }
  return finish(ContractionClass::Banach, 2, Rational(1), acc);
}

CoefficientResult kannan_coefficient(const FiniteMetricSpace& space, const SelfMap& map,
                                     std::size_t premise_k) {
  const std::size_t n = space.size();
  if (n < 2) throw std::invalid_argument("kannan coefficient requires n >= 2");
  RatioMax acc;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational num = space.dist(map(i), map(j));
      Rational den = space.dist(i, map(i)) + space.dist(j, map(j));
      if (den.is_zero()) {
        if (num.is_zero()) continue;  // vacuous pair
        return infeasible(ContractionClass::Kannan, 2, Rational(1, 2), num, {i, j});
      }
      acc.offer(num, den, {i, j});
    }
  }
  CoefficientResult r = finish(ContractionClass::Kannan, 2, Rational(1, 2), acc);
  if (premise_k >= 3) {
    r.below_inverse_k = r.infimum < Rational(1, static_cast<std::int64_t>(premise_k));
  }
  return r;
}

CoefficientResult perimetric_coefficient(const FiniteMetricSpace& space, const SelfMap& map,
                                         std::size_t k, Semantics semantics) {
  if (k < 3 || k > space.size()) {
    throw std::invalid_argument("perimetric coefficient requires 3 <= k <= n");
  }
  RatioMax acc;
  for_each_k_subset(space.size(), k, [&](const std::vector<std::size_t>& subset) {
    for_each_ordering(subset, semantics, [&](const PointTuple& order) {
      acc.offer(perimeter(space, apply_map(map, order)), perimeter(space, order), order);
    });
  });
  return finish(ContractionClass::Perimetric, k, Rational(1), acc);
}

CoefficientResult total_distance_coefficient(const FiniteMetricSpace& space, const SelfMap& map,
                                             std::size_t k) {
  if (k < 2 || k > space.size()) {
    throw std::invalid_argument("total pairwise coefficient requires 2 <= k <= n");
  }
  RatioMax acc;
  for_each_k_subset(space.size(), k, [&](const std::vector<std::size_t>& subset) {
    acc.offer(total_pairwise(space, apply_map(map, subset)), total_pairwise(space, subset),
              subset);
  });
  return finish(ContractionClass::TotalPairwise, k, Rational(1), acc);
}

CoefficientResult kannan_perimetric_coefficient(const FiniteMetricSpace& space, const SelfMap& map,
                                                std::size_t k, Semantics semantics) {
  if (k < 3 || k > space.size()) {
    throw std::invalid_argument("kannan perimetric coefficient requires 3 <= k <= n");
  }
  const Rational threshold(2, static_cast<std::int64_t>(k));
  RatioMax acc;
  bool bad = false;
  PointTuple bad_subset;
  Rational bad_lhs;
  for_each_k_subset(space.size(), k, [&](const std::vector<std::size_t>& subset) {
    if (bad) return;
    Rational den = displacement_sum(space, map, subset);
    if (den.is_zero()) {
      // k pairwise distinct fixed points: image perimeter equals the positive
      // preimage perimeter, so no finite coefficient exists.
      bad = true;
      bad_subset = subset;
      bad_lhs = perimeter(space, subset);
      return;
    }
    for_each_ordering(subset, semantics, [&](const PointTuple& order) {
      acc.offer(perimeter(space, apply_map(map, order)), den, order);
    });
  });
  if (bad) return infeasible(ContractionClass::KannanPerimetric, k, threshold, bad_lhs, bad_subset);
  return finish(ContractionClass::KannanPerimetric, k, threshold, acc);
}

std::pair<Rational, Rational> ratio_for_cycle(const FiniteMetricSpace& space, const SelfMap& map,
                                              const PointTuple& cycle, ContractionClass cls) {
  switch (cls) {
    case ContractionClass::Perimetric:
      return {perimeter(space, apply_map(map, cycle)), perimeter(space, cycle)};
    case ContractionClass::KannanPerimetric:
      return {perimeter(space, apply_map(map, cycle)), displacement_sum(space, map, cycle)};
    case ContractionClass::TotalPairwise:
      return {total_pairwise(space, apply_map(map, cycle)), total_pairwise(space, cycle)};
    default:
      throw std::invalid_argument("ratio_for_cycle: class has no cycle form");
  }
}

ClassificationReport classify_all(const FiniteMetricSpace& space, const SelfMap& map,
                                  std::size_t k, Semantics semantics) {
  if (k < 3 || k > space.size()) throw std::invalid_argument("classify_all requires 3 <= k <= n");
  ClassificationReport report;
  report.k = k;
  report.semantics = semantics;
  report.banach = banach_coefficient(space, map);
  report.kannan = kannan_coefficient(space, map, k);
  report.perimetric = perimetric_coefficient(space, map, k, semantics);
  report.total_pairwise = total_distance_coefficient(space, map, k);
  report.kannan_perimetric = kannan_perimetric_coefficient(space, map, k, semantics);
  report.kannan_below_inverse_k =
      report.kannan.feasible && report.kannan.below_inverse_k.value_or(false);
  report.perimetric_below_inverse_k_plus_1 =
      report.perimetric.infimum < Rational(1, static_cast<std::int64_t>(k) + 1);
  return report;
}

}  // namespace polyfix
