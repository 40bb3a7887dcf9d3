// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Everything exact is checked with rationals at zero tolerance; the
// floating-point criteria state their tolerances inline.

#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "polyfix/classifier.hpp"
#include "polyfix/dynamics.hpp"
#include "polyfix/instances.hpp"
#include "polyfix/picard.hpp"
#include "polyfix/polygon_enum.hpp"
#include "polyfix/theorem_oracle.hpp"

using namespace polyfix;

namespace {

// published fuzz seed for criterion 6; any seed must give zero violations,
// this one also pins the premise counts
constexpr std::uint64_t kPublishedSeed = 424242;

int failures = 0;
std::vector<std::string> findings;

struct Criterion {
  int index;
  std::string title;
  bool ok = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }

  ~Criterion() {
    std::printf("%s  %d. %s%s%s\n", ok ? "PASS" : "FAIL", index, title.c_str(),
                detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
  }
};

std::string rs(const Rational& r) { return r.str(); }

void criterion_1_separating_instance() {
  Criterion c{1, "em_2_1: exact functionals and k=4 coefficients"};
  const auto& inst = *find_instance("em_2_1");
  c.require(total_pairwise(inst.space, {0, 1, 2, 3}) == Rational(11), "S != 11");
  c.require(total_pairwise(inst.space, apply_map(inst.map, {0, 1, 2, 3})) == Rational(10),
            "S images != 10");
  c.require(perimeter(inst.space, {0, 1, 3, 2}) == Rational(7), "P != 7");
  c.require(perimeter(inst.space, apply_map(inst.map, {0, 1, 3, 2})) == Rational(8),
            "P images != 8");
  auto total = total_distance_coefficient(inst.space, inst.map, 4);
  c.require(total.infimum == Rational(10, 11) && total.member,
            "total coefficient " + rs(total.infimum));
  auto peri = perimetric_coefficient(inst.space, inst.map, 4);
  c.require(peri.infimum == Rational(8, 7) && !peri.member,
            "perimetric coefficient " + rs(peri.infimum));
}

void criterion_2_periodic_instance() {
  Criterion c{2, "ex_2_1: k=7 membership, k=3 witness, orbit structure"};
  const auto& inst = *find_instance("ex_2_1");
  c.require(perimeter(inst.space, {0, 1, 2, 3, 4, 5, 6}) == Rational(9), "P != 9");
  c.require(perimeter(inst.space, apply_map(inst.map, {0, 1, 2, 3, 4, 5, 6})) == Rational(6),
            "P images != 6");

  std::size_t cycles_seen = 0;
  std::vector<std::size_t> all7{0, 1, 2, 3, 4, 5, 6};
  for_each_canonical_cycle(all7, [&](const CanonicalCycle&) { ++cycles_seen; });
  c.require(cycles_seen == 360, "expected 360 canonical cycles at k=7");

  auto p7 = perimetric_coefficient(inst.space, inst.map, 7);
  c.require(p7.infimum == Rational(7, 9) && p7.member, "k=7 coefficient " + rs(p7.infimum));
  auto p3 = perimetric_coefficient(inst.space, inst.map, 3);
  c.require(p3.infimum == Rational(1) && !p3.member, "k=3 coefficient " + rs(p3.infimum));
  auto [wl, wr] = ratio_for_cycle(inst.space, inst.map, {3, 4, 5},
                                  ContractionClass::Perimetric);
  c.require(wl == Rational(3) && wr == Rational(3),
            "witness cycle x4,x5,x6 does not attain the ratio 3/3");

  c.require(fixed_points(inst.map) == std::vector<std::size_t>{0}, "fixed points != {x1}");
  c.require(periodic_points(inst.map, 2) == std::vector<std::size_t>{1, 2},
            "period-2 set != {x2,x3}");
  c.require(periodic_points(inst.map, 3) == std::vector<std::size_t>{3, 4, 5},
            "period-3 set != {x4,x5,x6}");
  bool flagged = false;
  for (const auto& note : run_repro(inst).notes) {
    flagged = flagged || note.find("x5,x6,x7") != std::string::npos;
  }
  c.require(flagged, "period-3 listing discrepancy not flagged in the report");
}

void criterion_3_max_fixed_points() {
  Criterion c{3, "em_2_2 at k=4,5,6: coefficient k/(k+2) and k-1 fixed points"};
  for (std::size_t k : {4, 5, 6}) {
    const auto& inst = *find_instance("em_2_2_k" + std::to_string(k));
    auto peri = perimetric_coefficient(inst.space, inst.map, k);
    c.require(peri.infimum == Rational(static_cast<std::int64_t>(k),
                                       static_cast<std::int64_t>(k) + 2),
              "k=" + std::to_string(k) + " coefficient " + rs(peri.infimum));
    TheoremVerdict v = perimetric_fixed_point_check(inst.space, inst.map, k);
    c.require(v.hypotheses_hold, "k=" + std::to_string(k) + " hypotheses fail");
    c.require(v.fixed.size() == k - 1,
              "k=" + std::to_string(k) + " fixed count " + std::to_string(v.fixed.size()));
    c.require(v.conclusion_verified, "k=" + std::to_string(k) + " conclusion not verified");
  }
}

void criterion_4_single_ordering_gap() {
  Criterion c{4, "sec3_example: 1/3 on the printed ordering, 5/12 worst case"};
  const auto& inst = *find_instance("sec3_example");
  auto [pl, pr] = ratio_for_cycle(inst.space, inst.map, {0, 1, 2, 3, 4},
                                  ContractionClass::KannanPerimetric);
  c.require(pl == Rational(4) && pr == Rational(12), "printed-ordering ratio not 4/12");
  c.require(pl / pr == Rational(1, 3), "printed-ordering ratio not 1/3");

  auto strict = kannan_perimetric_coefficient(inst.space, inst.map, 5);
  c.require(strict.infimum == Rational(5, 12), "worst case " + rs(strict.infimum));
  c.require(!strict.member && strict.infimum >= Rational(2, 5),
            "strict semantics should reject at threshold 2/5");
  auto [wl, wr] = ratio_for_cycle(inst.space, inst.map, {0, 2, 1, 3, 4},
                                  ContractionClass::KannanPerimetric);
  c.require(wl == Rational(5) && wr == Rational(12),
            "witness cycle x1,x3,x2,x4,x5 does not attain 5/12");
  c.require(fixed_points(inst.map) == std::vector<std::size_t>{3}, "fixed points != {x4}");
}

void criterion_5_cycle_combinatorics() {
  Criterion c{5, "cycle enumeration: (k-1)!/2 cycles, each edge (k-2)! times, k=3..8"};
  for (std::size_t k = 3; k <= 8; ++k) {
    std::vector<std::size_t> points(k);
    for (std::size_t i = 0; i < k; ++i) points[i] = i;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> edge_uses;
    std::size_t count = 0;
    for_each_canonical_cycle(points, [&](const CanonicalCycle& cycle) {
      ++count;
      for (std::size_t i = 0; i < k; ++i) {
        std::size_t a = cycle.vertices[i], b = cycle.vertices[(i + 1) % k];
        ++edge_uses[{std::min(a, b), std::max(a, b)}];
      }
    });
    c.require(count == cycle_count(k),
              "k=" + std::to_string(k) + ": " + std::to_string(count) + " cycles");
    bool edges_ok = edge_uses.size() == k * (k - 1) / 2;
    for (const auto& [edge, uses] : edge_uses) edges_ok = edges_ok && uses == edge_frequency(k);
    c.require(edges_ok, "k=" + std::to_string(k) + ": edge frequencies off");
  }
}

void criterion_6_fuzz_oracle() {
  Criterion c{6, "fuzz oracle: 1000 trials, seed 424242, zero violations, floors met"};
  FuzzConfig config;
  config.seed = kPublishedSeed;
  config.trials = 1000;
  FuzzReport report = fuzz(config);

  for (const char* tag : {"perimetric_implies_total", "total_monotone_points",
                          "perimetric_fixed_point", "banach_principle"}) {
    const auto& r = report.tag(tag);
    c.require(r.violations.empty(),
              std::string(tag) + ": " + std::to_string(r.violations.size()) + " violations");
    c.require(r.premise_hits >= 10,
              std::string(tag) + " fired only " + std::to_string(r.premise_hits) + " times");
  }
  c.require(report.coverage_ok, "coverage floors not met");

  // the two Kannan-side implications are reported; violations are findings,
  // not build failures
  for (const char* tag : {"kannan_pointwise_implies_polygon",
                          "perimetric_implies_kannan_polygon"}) {
    const auto& r = report.tag(tag);
    std::printf("      %-36s premise %4zu/1000, violations %zu\n", tag, r.premise_hits,
                r.violations.size());
    for (const auto& v : r.violations) {
      findings.push_back(std::string(tag) + ": " + v.details + " (trial seed " +
                         std::to_string(v.trial_seed) + ")");
    }
  }
}

void criterion_7_picard_bounds() {
  Criterion c{7, "picard: geometric bound 3*2^-n, affine limit 2, unique fixed point"};
  auto half = picard::make_oracle("linear", {{"a", 0.5}});
  auto trace = picard::picard_iterate(half, {1.0}, 3, {1e-9, 100});
  c.require(trace.converged, "halving iteration did not converge");
  c.require(std::abs(trace.r0_perimeter - 1.5) < 1e-12, "r0 perimeter != 1.5");
  bool bounds_ok = trace.bounds.size() == trace.points.size();
  for (std::size_t n = 0; bounds_ok && n < trace.points.size(); ++n) {
    double expected = 3.0 * std::pow(0.5, static_cast<double>(n));
    bounds_ok = std::abs(trace.bounds[n] - expected) < 1e-9 &&
                std::abs(trace.points[n][0]) <= expected + 1e-9;
  }
  c.require(bounds_ok, "per-step bound fails 3*2^-n within 1e-9");

  auto affine = picard::make_oracle("affine", {{"a", 0.5}, {"b", 1.0}});
  auto atrace = picard::picard_iterate(affine, {0.0}, 3, {1e-9, 200});
  c.require(atrace.converged && std::abs(atrace.limit[0] - 2.0) < 1e-6,
            "affine limit not within 1e-6 of 2");
  auto unique = picard::uniqueness_check(atrace, affine, {{-10.0, 10.0}}, 20001, 0);
  c.require(!unique.vacuous && unique.fixed_point_clusters.size() == 1,
            "grid search found " + std::to_string(unique.fixed_point_clusters.size()) +
                " fixed-point clusters");
  if (unique.fixed_point_clusters.size() == 1) {
    c.require(std::abs(unique.fixed_point_clusters[0][0] - 2.0) <= 1e-3,
              "fixed-point cluster far from 2");
  }
}

void criterion_8_property_suite() {
  Criterion c{8, "properties on 100 seeded instances: scaling, symmetry, k=3 equality"};
  const Rational scale(3, 7);
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    SplitMix64 rng{derive_seed(0xACCE97, trial)};
    const std::size_t n = rng.range(3, 8);
    const std::size_t k = rng.range(3, std::min<std::size_t>(5, n));
    auto model = trial % 2 ? DistanceModel::TaxicabGrid : DistanceModel::IntegerClosure;
    FiniteMetricSpace space = random_space(derive_seed(0xACCE98, trial), n, model);
    FiniteMetricSpace scaled = space.scaled(scale);
    SelfMap map = random_map(derive_seed(0xACCE99, trial), n);

    ClassificationReport a = classify_all(space, map, k);
    ClassificationReport b = classify_all(scaled, map, k);
    for (auto pick : {&ClassificationReport::banach, &ClassificationReport::kannan,
                      &ClassificationReport::perimetric, &ClassificationReport::total_pairwise,
                      &ClassificationReport::kannan_perimetric}) {
      const CoefficientResult& ra = a.*pick;
      const CoefficientResult& rb = b.*pick;
      bool same = ra.feasible == rb.feasible && ra.member == rb.member &&
                  ra.witness == rb.witness && (!ra.feasible || ra.infimum == rb.infimum);
      if (!same) {
        c.require(false, "scaling changed " + class_name(ra.kind) + " at trial " +
                             std::to_string(trial));
        return;
      }
    }

    PointTuple tuple(n);
    for (std::size_t i = 0; i < n; ++i) tuple[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(tuple[i - 1], tuple[rng.below(i)]);
    tuple.resize(k);
    PointTuple rotated(tuple.begin() + 1, tuple.end());
    rotated.push_back(tuple.front());
    PointTuple reversed(tuple.rbegin(), tuple.rend());
    if (perimeter(space, rotated) != perimeter(space, tuple) ||
        perimeter(space, reversed) != perimeter(space, tuple)) {
      c.require(false, "perimeter not dihedral-invariant at trial " + std::to_string(trial));
      return;
    }
    PointTuple shuffled = tuple;
    for (std::size_t i = k; i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    if (total_pairwise(space, shuffled) != total_pairwise(space, tuple)) {
      c.require(false, "total distance not permutation-invariant at trial " +
                           std::to_string(trial));
      return;
    }

    if (perimetric_coefficient(space, map, 3).infimum !=
        total_distance_coefficient(space, map, 3).infimum) {
      c.require(false, "k=3 coefficients differ at trial " + std::to_string(trial));
      return;
    }
  }
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion_1_separating_instance();
  criterion_2_periodic_instance();
  criterion_3_max_fixed_points();
  criterion_4_single_ordering_gap();
  criterion_5_cycle_combinatorics();
  criterion_6_fuzz_oracle();
  criterion_7_picard_bounds();
  criterion_8_property_suite();

  if (!findings.empty()) {
    std::printf("findings (reported, not failures):\n");
    for (const auto& f : findings) std::printf("  %s\n", f.c_str());
  }
  std::printf("%d criterion failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
