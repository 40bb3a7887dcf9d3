#include "polyfix/picard.hpp"

#include <cmath>
#include <stdexcept>

#include "polyfix/polygon_enum.hpp"
#include "polyfix/theorem_oracle.hpp"

namespace polyfix::picard {

namespace {

double get_param(const std::map<std::string, double>& params, const std::string& key,
                 double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

double abs_distance(const Point& a, const Point& b) { return std::abs(a[0] - b[0]); }

double euclid_distance(const Point& a, const Point& b) {
  double sum = 0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum);
}

void require_finite(const Point& p, const char* what) {
  for (double v : p) {
    if (!std::isfinite(v)) {
      throw std::runtime_error(std::string("oracle produced a non-finite ") + what);
    }
  }
}

}  // namespace

MetricOracle make_oracle(const std::string& name, const std::map<std::string, double>& params) {
  MetricOracle o;
  o.name = name;
  if (name == "linear") {
    double a = get_param(params, "a", 0.5);
    o.dimension = 1;
    o.distance = abs_distance;
    o.map = [a](const Point& p) { return Point{a * p[0]}; };
  } else if (name == "affine") {
    double a = get_param(params, "a", 0.5);
    double b = get_param(params, "b", 1.0);
    o.dimension = 1;
    o.distance = abs_distance;
    o.map = [a, b](const Point& p) { return Point{a * p[0] + b}; };
  } else if (name == "cubic") {
    o.dimension = 1;
    o.distance = abs_distance;
    o.map = [](const Point& p) { return Point{p[0] - p[0] * p[0] * p[0] / 3.0}; };
  } else if (name == "constant") {
    double c = get_param(params, "c", 0.0);
    o.dimension = 1;
    o.distance = abs_distance;
    o.map = [c](const Point&) { return Point{c}; };
  } else if (name == "rotscale") {
    double s = get_param(params, "s", 0.5);
    double theta = get_param(params, "theta", 0.78539816339744831);
    double c = std::cos(theta), n = std::sin(theta);
    o.dimension = 2;
    o.distance = euclid_distance;
    o.map = [s, c, n](const Point& p) {
      return Point{s * (c * p[0] - n * p[1]), s * (n * p[0] + c * p[1])};
    };
  } else {
    throw std::invalid_argument("unknown map '" + name + "'");
  }
  return o;
}

std::vector<std::string> oracle_names() {
  return {"linear", "affine", "cubic", "constant", "rotscale"};
}

namespace {

double window_perimeter(const MetricOracle& oracle, const std::vector<Point>& pts,
                        std::size_t start, std::size_t k) {
  double sum = 0;
  for (std::size_t i = 0; i < k; ++i) {
    sum += oracle.distance(pts[start + i], pts[start + (i + 1) % k]);
  }
  return sum;
}

}  // namespace

IterationTrace picard_iterate(const MetricOracle& oracle, const Point& x0, std::size_t k,
                              const StopRule& stop) {
  if (k < 3) throw std::invalid_argument("picard_iterate requires k >= 3");
  if (stop.tolerance <= 0) throw std::invalid_argument("tolerance must be positive");
  if (stop.max_steps < k) throw std::invalid_argument("max_steps must be at least k");
  if (x0.size() != oracle.dimension) throw std::invalid_argument("x0 dimension mismatch");

  IterationTrace trace;
  trace.k = k;
  trace.tolerance = stop.tolerance;
  trace.points.push_back(x0);
  while (trace.step_distances.size() < stop.max_steps) {
    Point next = oracle.map(trace.points.back());
    require_finite(next, "point");
    double r = oracle.distance(trace.points.back(), next);
    if (!std::isfinite(r)) throw std::runtime_error("oracle produced a non-finite distance");
    trace.points.push_back(std::move(next));
    trace.step_distances.push_back(r);
    // Keep at least k+1 points so the window estimates below are defined.
    if (r < stop.tolerance && trace.points.size() >= k + 1) break;
  }
  trace.converged = !trace.step_distances.empty() && trace.step_distances.back() < stop.tolerance;
  trace.limit = trace.points.back();

  const std::size_t n_points = trace.points.size();
  trace.r0_perimeter = window_perimeter(oracle, trace.points, 0, k);

  // lambda: worst consecutive-window perimeter ratio realized on the trace.
  std::vector<double> window;
  for (std::size_t s = 0; s + k <= n_points; ++s) {
    window.push_back(window_perimeter(oracle, trace.points, s, k));
  }
  trace.lambda_estimate = 0;
  for (std::size_t s = 1; s < window.size(); ++s) {
    if (window[s - 1] > 0) {
      trace.lambda_estimate = std::max(trace.lambda_estimate, window[s] / window[s - 1]);
    }
  }
  if (trace.lambda_estimate < 1) {
    trace.bounds.resize(n_points);
    for (std::size_t n = 0; n < n_points; ++n) {
      trace.bounds[n] =
          std::pow(trace.lambda_estimate, static_cast<double>(n)) * trace.r0_perimeter /
          (1.0 - trace.lambda_estimate);
    }
  }

  // mu: worst realized ratio of an image-window perimeter to the sum of the
  // window's displacements.
  trace.mu_estimate = 0;
  for (std::size_t s = 0; s + 1 < window.size(); ++s) {
    double displacement = 0;
    for (std::size_t i = 0; i < k; ++i) displacement += trace.step_distances[s + i];
    if (displacement > 0) {
      trace.mu_estimate = std::max(trace.mu_estimate, window[s + 1] / displacement);
    }
  }
  trace.big_r = 0;
  for (std::size_t i = 1; i < k && i < trace.step_distances.size(); ++i) {
    trace.big_r = std::max(trace.big_r, trace.step_distances[i]);
  }
  if (trace.mu_estimate < 2.0 / static_cast<double>(k - 1)) {
    trace.rho = static_cast<double>(k - 2) * trace.mu_estimate / (2.0 - trace.mu_estimate);
    trace.kannan_bounds.assign(n_points, 0.0);
    for (std::size_t n = k; n < n_points; ++n) {
      double exponent = static_cast<double>(n) / static_cast<double>(k - 1) - 1.0;
      trace.kannan_bounds[n] = std::pow(trace.rho, exponent) * trace.big_r;
    }
  }
  return trace;
}

namespace {

class RegionSampler {
public:
  RegionSampler(std::uint64_t seed, const std::vector<std::pair<double, double>>& region,
                std::size_t dimension)
      : rng_{seed}, region_(region) {
    if (region_.size() != dimension) {
      throw std::invalid_argument("sampler region dimension mismatch");
    }
    for (auto& [lo, hi] : region_) {
      if (!(lo < hi)) throw std::invalid_argument("sampler region must have lo < hi");
    }
  }

  Point draw() {
    Point p;
    p.reserve(region_.size());
    for (auto& [lo, hi] : region_) p.push_back(lo + unit() * (hi - lo));
    return p;
  }

private:
  double unit() { return static_cast<double>(rng_.next() >> 11) * 0x1.0p-53; }

  SplitMix64 rng_;
  std::vector<std::pair<double, double>> region_;
};

constexpr double kDistinctEps = 1e-9;
constexpr double kDenominatorEps = 1e-12;

}  // namespace

CoefficientEstimate sample_coefficient(const MetricOracle& oracle, ContractionClass cls,
                                       std::size_t k, const SamplerConfig& sampler) {
  if (sampler.count < 1) throw std::invalid_argument("sampler count must be >= 1");
  const std::size_t tuple_size =
      (cls == ContractionClass::Banach || cls == ContractionClass::Kannan) ? 2 : k;
  if (tuple_size < 2) throw std::invalid_argument("tuple size must be >= 2");
  if (tuple_size >= 3 && k < 3) throw std::invalid_argument("polygon classes require k >= 3");

  RegionSampler draw(sampler.seed, sampler.region, oracle.dimension);
  CoefficientEstimate est;
  std::size_t attempts = 0;
  const std::size_t max_attempts = sampler.count * 1000 + 1000;

  std::vector<std::size_t> indices(tuple_size);
  for (std::size_t i = 0; i < tuple_size; ++i) indices[i] = i;

  while (est.samples < sampler.count) {
    if (++attempts > max_attempts) {
      throw std::runtime_error("sampler kept drawing degenerate tuples");
    }
    std::vector<Point> pts;
    pts.reserve(tuple_size);
    for (std::size_t i = 0; i < tuple_size; ++i) pts.push_back(draw.draw());
    bool distinct = true;
    for (std::size_t i = 0; i < tuple_size && distinct; ++i) {
      for (std::size_t j = i + 1; j < tuple_size; ++j) {
        if (oracle.distance(pts[i], pts[j]) <= kDistinctEps) {
          distinct = false;
          break;
        }
      }
    }
    if (!distinct) {
      ++est.rejected;
      continue;
    }
    std::vector<Point> images;
    images.reserve(tuple_size);
    for (const auto& p : pts) {
      images.push_back(oracle.map(p));
      require_finite(images.back(), "point");
    }

    double ratio = -1;
    switch (cls) {
      case ContractionClass::Banach: {
        ratio = oracle.distance(images[0], images[1]) / oracle.distance(pts[0], pts[1]);
        break;
      }
      case ContractionClass::Kannan: {
        double den = oracle.distance(pts[0], images[0]) + oracle.distance(pts[1], images[1]);
        if (den <= kDenominatorEps) break;
        ratio = oracle.distance(images[0], images[1]) / den;
        break;
      }
      case ContractionClass::Perimetric: {
        for_each_canonical_cycle(indices, [&](const CanonicalCycle& cycle) {
          double num = 0, den = 0;
          for (std::size_t i = 0; i < tuple_size; ++i) {
            std::size_t a = cycle.vertices[i];
            std::size_t b = cycle.vertices[(i + 1) % tuple_size];
            num += oracle.distance(images[a], images[b]);
            den += oracle.distance(pts[a], pts[b]);
          }
          if (den > kDenominatorEps) ratio = std::max(ratio, num / den);
        });
        break;
      }
      case ContractionClass::KannanPerimetric: {
        double den = 0;
        for (std::size_t i = 0; i < tuple_size; ++i) den += oracle.distance(pts[i], images[i]);
        if (den <= kDenominatorEps) break;
        for_each_canonical_cycle(indices, [&](const CanonicalCycle& cycle) {
          double num = 0;
          for (std::size_t i = 0; i < tuple_size; ++i) {
            num += oracle.distance(images[cycle.vertices[i]],
                                   images[cycle.vertices[(i + 1) % tuple_size]]);
          }
          ratio = std::max(ratio, num / den);
        });
        break;
      }
      case ContractionClass::TotalPairwise: {
        double num = 0, den = 0;
        for (std::size_t i = 0; i < tuple_size; ++i) {
          for (std::size_t j = i + 1; j < tuple_size; ++j) {
            num += oracle.distance(images[i], images[j]);
            den += oracle.distance(pts[i], pts[j]);
          }
        }
        if (den > kDenominatorEps) ratio = num / den;
        break;
      }
    }
    if (ratio < 0) {
      ++est.rejected;
      continue;
    }
    est.estimate = std::max(est.estimate, ratio);
    ++est.samples;
  }
  return est;
}

PointwiseBoundReport pointwise_contraction_check(const MetricOracle& oracle, double lambda_hat,
                                                 const SamplerConfig& sampler) {
  RegionSampler draw(sampler.seed, sampler.region, oracle.dimension);
  PointwiseBoundReport report;
  report.assumption_note =
      "every point of the sampled region is treated as an accumulation point of the domain";
  while (report.pairs_checked < sampler.count) {
    Point x = draw.draw();
    Point y = draw.draw();
    if (oracle.distance(x, y) <= kDistinctEps) continue;
    double slack = oracle.distance(oracle.map(x), oracle.map(y)) -
                   lambda_hat * oracle.distance(x, y);
    report.max_slack = std::max(report.max_slack, slack);
    if (slack > 1e-9) ++report.violations;
    ++report.pairs_checked;
  }
  return report;
}

UniquenessReport uniqueness_check(const IterationTrace& trace, const MetricOracle& oracle,
                                  const std::vector<std::pair<double, double>>& region,
                                  std::size_t grid_points_per_axis, double fp_tolerance) {
  if (region.size() != oracle.dimension) {
    throw std::invalid_argument("uniqueness region dimension mismatch");
  }
  if (grid_points_per_axis < 2) throw std::invalid_argument("grid needs at least 2 points");

  UniquenessReport report;
  report.assumption_note =
      "every point of the search region is treated as an accumulation point of the domain";
  if (!trace.converged) {
    report.vacuous = true;
    report.reason = "iteration did not converge";
    return report;
  }
  for (std::size_t i = 0; i + 1 < trace.points.size(); ++i) {
    if (oracle.distance(trace.limit, trace.points[i]) == 0) {
      report.vacuous = true;
      report.reason = "limit coincides with iterate " + std::to_string(i);
      return report;
    }
  }

  std::vector<double> step(region.size());
  for (std::size_t d = 0; d < region.size(); ++d) {
    step[d] = (region[d].second - region[d].first) / static_cast<double>(grid_points_per_axis - 1);
  }
  if (fp_tolerance <= 0) {
    fp_tolerance = 0;
    for (double s : step) fp_tolerance = std::max(fp_tolerance, s);
  }

  auto residual = [&](const Point& z) { return oracle.distance(oracle.map(z), z); };

  if (oracle.dimension == 1) {
    bool in_cluster = false;
    Point best;
    double best_res = 0;
    for (std::size_t i = 0; i < grid_points_per_axis; ++i) {
      Point z{region[0].first + static_cast<double>(i) * step[0]};
      double res = residual(z);
      if (res < fp_tolerance) {
        ++report.grid_hits;
        if (!in_cluster || res < best_res) {
          best = z;
          best_res = res;
        }
        in_cluster = true;
      } else if (in_cluster) {
        report.fixed_point_clusters.push_back(best);
        in_cluster = false;
      }
    }
    if (in_cluster) report.fixed_point_clusters.push_back(best);
    return report;
  }

  // 2-D: mark hits on the grid, then merge 4-adjacent hits into clusters.
  const std::size_t g = grid_points_per_axis;
  std::vector<char> hit(g * g, 0);
  std::vector<double> res_at(g * g, 0);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      Point z{region[0].first + static_cast<double>(i) * step[0],
              region[1].first + static_cast<double>(j) * step[1]};
      double res = residual(z);
      res_at[i * g + j] = res;
      if (res < fp_tolerance) {
        hit[i * g + j] = 1;
        ++report.grid_hits;
      }
    }
  }
  std::vector<char> seen(g * g, 0);
  for (std::size_t i = 0; i < g; ++i) {
    for (std::size_t j = 0; j < g; ++j) {
      if (!hit[i * g + j] || seen[i * g + j]) continue;
      std::vector<std::pair<std::size_t, std::size_t>> stack{{i, j}};
      seen[i * g + j] = 1;
      std::pair<std::size_t, std::size_t> best{i, j};
      while (!stack.empty()) {
        auto [a, b] = stack.back();
        stack.pop_back();
        if (res_at[a * g + b] < res_at[best.first * g + best.second]) best = {a, b};
        const std::pair<std::size_t, std::size_t> nbrs[4] = {
            {a + 1, b}, {a, b + 1}, {a ? a - 1 : g, b}, {a, b ? b - 1 : g}};
        for (auto [na, nb] : nbrs) {
          if (na < g && nb < g && hit[na * g + nb] && !seen[na * g + nb]) {
            seen[na * g + nb] = 1;
            stack.emplace_back(na, nb);
          }
        }
      }
      report.fixed_point_clusters.push_back(
          Point{region[0].first + static_cast<double>(best.first) * step[0],
                region[1].first + static_cast<double>(best.second) * step[1]});
    }
  }
  return report;
}

}  // namespace polyfix::picard
