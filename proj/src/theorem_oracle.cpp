#include "polyfix/theorem_oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polyfix {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 s{master + 0x9E3779B97F4A7C15ull * (index + 1)};
  return s.next();
}

namespace {

std::vector<std::string> numbered_labels(const char* prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return labels;
}

FiniteMetricSpace integer_closure_space(SplitMix64& rng, std::size_t n) {
  constexpr std::uint64_t kMaxEntry = 9;
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      auto v = static_cast<std::int64_t>(rng.range(1, kMaxEntry));
      w[i][j] = w[j][i] = v;
    }
  }
  // All-pairs shortest paths repair the triangle inequality exactly; entries
  // stay positive integers.
  for (std::size_t m = 0; m < n; ++m) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) continue;
        w[i][j] = std::min(w[i][j], w[i][m] + w[m][j]);
      }
    }
  }
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = Rational(w[i][j]);
  }
  return FiniteMetricSpace(numbered_labels("x", n), std::move(rows));
}

FiniteMetricSpace taxicab_grid_space(SplitMix64& rng, std::size_t n) {
  constexpr std::uint64_t kGrid = 16;  // coordinates in [0, 15]^2
  std::set<std::pair<std::uint64_t, std::uint64_t>> used;
  std::vector<std::pair<std::int64_t, std::int64_t>> pts;
  while (pts.size() < n) {
    std::pair<std::uint64_t, std::uint64_t> p{rng.below(kGrid), rng.below(kGrid)};
    if (used.insert(p).second) {
      pts.emplace_back(static_cast<std::int64_t>(p.first), static_cast<std::int64_t>(p.second));
    }
  }
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rows[i][j] = Rational(std::abs(pts[i].first - pts[j].first) +
                            std::abs(pts[i].second - pts[j].second));
    }
  }
  return FiniteMetricSpace(numbered_labels("g", n), std::move(rows));
}

}  // namespace

FiniteMetricSpace random_space(std::uint64_t seed, std::size_t n, DistanceModel model) {
  if (n < 2) throw std::invalid_argument("random_space requires n >= 2");
  SplitMix64 rng{seed};
  switch (model) {
    case DistanceModel::IntegerClosure: return integer_closure_space(rng, n);
    case DistanceModel::TaxicabGrid: return taxicab_grid_space(rng, n);
  }
  throw std::invalid_argument("unknown distance model");
}

SelfMap random_map(std::uint64_t seed, std::size_t n) {
  if (n < 1) throw std::invalid_argument("random_map requires n >= 1");
  SplitMix64 rng{seed};
  SelfMap map;
  map.image.reserve(n);
  for (std::size_t i = 0; i < n; ++i) map.image.push_back(rng.below(n));
  return map;
}

namespace {

struct TagCheck {
  ImplicationResult result;
  const FiniteMetricSpace* space{};
  const SelfMap* map{};
  std::size_t k{};
  std::uint64_t trial_seed{};

  void premise() { ++result.premise_hits; }
  void violation(std::string details) {
    result.violations.push_back({*space, *map, k, trial_seed, std::move(details)});
  }
};

std::string label_of(const FiniteMetricSpace& s, std::size_t i) { return s.label(i); }

}  // namespace

std::vector<ImplicationResult> check_implications(const FiniteMetricSpace& space,
                                                  const SelfMap& map, std::size_t k,
                                                  std::uint64_t trial_seed) {
  const std::size_t n = space.size();
  if (k < 3 || k > n) throw std::invalid_argument("check_implications requires 3 <= k <= n");
  if (map.size() != n) throw std::invalid_argument("map size does not match space");

  std::vector<TagCheck> checks;
  for (const auto& tag : implication_tags()) {
    TagCheck c;
    c.result.name = tag;
    c.result.instances_checked = 1;
    c.space = &space;
    c.map = &map;
    c.k = k;
    c.trial_seed = trial_seed;
    checks.push_back(std::move(c));
  }
  auto tag_index = [&](const std::string& name) -> TagCheck& {
    for (auto& c : checks) {
      if (c.result.name == name) return c;
    }
    throw std::logic_error("unknown tag " + name);
  };

  const Rational one(1);
  const CoefficientResult banach = banach_coefficient(space, map);
  const CoefficientResult kannan = kannan_coefficient(space, map, k);
  const CoefficientResult peri = perimetric_coefficient(space, map, k);
  const CoefficientResult kperi = kannan_perimetric_coefficient(space, map, k);
  std::vector<CoefficientResult> totals(n + 1);  // totals[m] for m = 2..n
  for (std::size_t m = 2; m <= n; ++m) totals[m] = total_distance_coefficient(space, map, m);
  const auto fixed = fixed_points(map);
  const auto periods = prime_period_table(map);

  // Same-coefficient inclusion of the polygon class in the total-distance
  // class at k. The averaging argument is unconditional, so the coefficient
  // inequality is checked on every instance; the premise counter tracks
  // actual polygon-class members.
  {
    auto& c = tag_index("perimetric_implies_total");
    if (peri.member) c.premise();
    if (totals[k].infimum > peri.infimum) {
      c.violation("total coefficient " + totals[k].infimum.str() +
                  " exceeds perimetric coefficient " + peri.infimum.str() + " at k=" +
                  std::to_string(k));
    }
  }

  // Total-distance coefficient is nonincreasing in the number of points.
  {
    auto& c = tag_index("total_monotone_points");
    bool fired = false;
    for (std::size_t m = 2; m < n; ++m) fired = fired || totals[m].infimum < one;
    if (fired) c.premise();
    for (std::size_t m = 2; m < n; ++m) {
      if (totals[m + 1].infimum > totals[m].infimum) {
        c.violation("total coefficient rises from " + totals[m].infimum.str() + " at m=" +
                    std::to_string(m) + " to " + totals[m + 1].infimum.str() + " at m=" +
                    std::to_string(m + 1));
      }
    }
  }

  // Member at k stays a total-distance member, with the same bound, at every
  // larger point count.
  {
    auto& c = tag_index("perimetric_implies_total_above_k");
    if (peri.member) {
      c.premise();
      for (std::size_t m = k + 1; m <= n; ++m) {
        if (totals[m].infimum > peri.infimum) {
          c.violation("total coefficient " + totals[m].infimum.str() + " at m=" +
                      std::to_string(m) + " exceeds perimetric coefficient " +
                      peri.infimum.str() + " from k=" + std::to_string(k));
        }
      }
    }
  }

  // A Banach member has exactly one fixed point and no periodic points of
  // prime period >= 2.
  {
    auto& c = tag_index("banach_principle");
    if (banach.member) {
      c.premise();
      for (const auto& [period, points] : periods) {
        if (period >= 2 && !points.empty()) {
          c.violation("banach member with coefficient " + banach.infimum.str() +
                      " has point " + label_of(space, points.front()) + " of prime period " +
                      std::to_string(period));
        }
      }
      if (fixed.size() != 1) {
        c.violation("banach member has " + std::to_string(fixed.size()) +
                    " fixed points, expected exactly 1");
      }
    }
  }

  {
    auto& c = tag_index("iteration_limit_uniqueness");
    c.result.note = "vacuous on finite spaces: the iteration limit is always an iterate";
  }

  // Pointwise Kannan coefficient below 1/k gives a polygon coefficient of at
  // most twice it (each polygon edge inequality is summed once).
  {
    auto& c = tag_index("kannan_pointwise_implies_polygon");
    if (kannan.feasible && kannan.below_inverse_k.value_or(false)) {
      c.premise();
      Rational doubled = kannan.infimum * Rational(2);
      if (!kperi.feasible) {
        c.violation("kannan coefficient " + kannan.infimum.str() +
                    " < 1/k but polygon class infeasible");
      } else if (kperi.infimum > doubled) {
        c.violation("kannan polygon coefficient " + kperi.infimum.str() + " exceeds 2*" +
                    kannan.infimum.str());
      } else if (!kperi.member) {
        c.violation("kannan polygon coefficient " + kperi.infimum.str() +
                    " not below threshold " + kperi.threshold.str());
      }
    }
  }

  // Perimetric coefficient below 1/(k+1) gives a Kannan polygon coefficient
  // of at most 2*lambda/(1-lambda). Checked empirically; any violation is a
  // finding for the report, not an assumption.
  {
    auto& c = tag_index("perimetric_implies_kannan_polygon");
    if (peri.infimum < Rational(1, static_cast<std::int64_t>(k) + 1)) {
      c.premise();
      Rational bound = (peri.infimum * Rational(2)) / (one - peri.infimum);
      if (!kperi.feasible) {
        c.violation("perimetric coefficient " + peri.infimum.str() +
                    " < 1/(k+1) but kannan polygon class infeasible");
      } else if (kperi.infimum > bound) {
        c.violation("kannan polygon coefficient " + kperi.infimum.str() + " exceeds bound " +
                    bound.str());
      } else if (!kperi.member) {
        c.violation("kannan polygon coefficient " + kperi.infimum.str() +
                    " not below threshold " + kperi.threshold.str());
      }
    }
  }

  auto fixed_point_tag = [&](const char* name, const CoefficientResult& coeff) {
    auto& c = tag_index(name);
    if (!coeff.member) return;
    c.premise();
    if (fixed.size() > k - 1) {
      c.violation("member with coefficient " + coeff.infimum.str() + " has " +
                  std::to_string(fixed.size()) + " fixed points, bound is " +
                  std::to_string(k - 1));
    }
    bool periodic_free = true;
    for (std::size_t p = 2; p < k; ++p) {
      auto it = periods.find(p);
      if (it != periods.end() && !it->second.empty()) periodic_free = false;
    }
    if (periodic_free) {
      ++c.result.premise_hits_full;
      if (fixed.empty()) {
        c.violation("member without periodic points of prime periods 2.." +
                    std::to_string(k - 1) + " has no fixed point");
      }
    }
  };
  fixed_point_tag("perimetric_fixed_point", peri);
  fixed_point_tag("kannan_polygon_fixed_point", kperi);

  {
    auto& c = tag_index("kannan_iteration_limit_uniqueness");
    c.result.note = "vacuous on finite spaces: the iteration limit is always an iterate";
  }

  std::vector<ImplicationResult> out;
  out.reserve(checks.size());
  for (auto& c : checks) out.push_back(std::move(c.result));
  return out;
}

void FuzzConfig::validate() const {
  if (trials < 1) throw std::invalid_argument("fuzz config: trials must be >= 1");
  if (n_min < 3 || n_min > n_max) throw std::invalid_argument("fuzz config: bad n range");
  if (k_min < 3 || k_min > k_max) throw std::invalid_argument("fuzz config: bad k range");
  if (k_min > n_min) throw std::invalid_argument("fuzz config: k_min must not exceed n_min");
}

bool FuzzReport::violations_found() const {
  return std::any_of(tags.begin(), tags.end(),
                     [](const ImplicationResult& t) { return !t.pass(); });
}

const ImplicationResult& FuzzReport::tag(const std::string& name) const {
  for (const auto& t : tags) {
    if (t.name == name) return t;
  }
  throw std::invalid_argument("no such tag: " + name);
}

FuzzReport fuzz(const FuzzConfig& config) {
  config.validate();
  FuzzReport report;
  report.config = config;
  for (const auto& tag : implication_tags()) {
    ImplicationResult r;
    r.name = tag;
    report.tags.push_back(std::move(r));
  }

  for (std::size_t t = 0; t < config.trials; ++t) {
    const std::uint64_t trial_seed = derive_seed(config.seed, t);
    SplitMix64 pick{derive_seed(trial_seed, 0)};
    const std::size_t n = pick.range(config.n_min, config.n_max);
    const std::size_t k = pick.range(config.k_min, std::min(config.k_max, n));
    FiniteMetricSpace space = random_space(derive_seed(trial_seed, 1), n, config.model);
    SelfMap map = random_map(derive_seed(trial_seed, 2), n);

    auto results = check_implications(space, map, k, trial_seed);
    for (std::size_t i = 0; i < results.size(); ++i) {
      auto& agg = report.tags[i];
      agg.instances_checked += results[i].instances_checked;
      agg.premise_hits += results[i].premise_hits;
      agg.premise_hits_full += results[i].premise_hits_full;
      if (agg.note.empty()) agg.note = results[i].note;
      for (auto& v : results[i].violations) agg.violations.push_back(std::move(v));
    }
  }

  report.coverage_floor = (config.trials * 10 + 999) / 1000;
  if (report.coverage_floor < 1) report.coverage_floor = 1;
  for (const char* name : {"perimetric_implies_total", "total_monotone_points",
                           "perimetric_fixed_point", "banach_principle"}) {
    if (report.tag(name).premise_hits < report.coverage_floor) {
      report.coverage_failures.emplace_back(name);
    }
  }
  report.coverage_ok = report.coverage_failures.empty();
  return report;
}

}  // namespace polyfix
