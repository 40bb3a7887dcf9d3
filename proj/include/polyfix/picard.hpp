#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "polyfix/classifier.hpp"

namespace polyfix::picard {

/// Continuous-side computations use doubles with explicit tolerances; the
/// finite-space modules stay exact. Points are dimension-sized coordinate
/// vectors.
using Point = std::vector<double>;

/// A continuous metric space with a self-map, both pure functions. Distances
/// are assumed symmetric and zero-on-diagonal (spot-checked at 1e-12 by the
/// registry tests).
struct MetricOracle {
  std::string name;
  std::size_t dimension{1};
  std::function<double(const Point&, const Point&)> distance;
  std::function<Point(const Point&)> map;
};

/// Built-in map registry. Names: "linear" (a*x; a=0.5), "affine" (a*x+b;
/// a=0.5, b=1), "cubic" (x - x^3/3), "constant" (c; c=0), "rotscale"
/// (2-D scaling s with rotation angle theta; s=0.5, theta=0.785398...).
MetricOracle make_oracle(const std::string& name,
                         const std::map<std::string, double>& params = {});
std::vector<std::string> oracle_names();

struct StopRule {
  double tolerance{1e-9};
  std::size_t max_steps{200};
};

/// One Picard run x_{n+1} = T x_n with the a-priori error bounds attached.
///
/// r0_perimeter is the polygon perimeter of the first k iterates; the
/// geometric bound at step n is lambda^n * r0 / (1 - lambda). The Kannan-side
/// bound at step n >= k is rho^(n/(k-1) - 1) * R with R = max(r_1..r_{k-1})
/// and rho = (k-2)*mu/(2-mu); it is attached whenever mu < 2/(k-1) so rho < 1.
/// Both coefficient estimates are the maxima realized along the trace, so the
/// attached bounds are self-consistent by construction.
struct IterationTrace {
  std::size_t k{3};
  double tolerance{0};
  std::vector<Point> points;
  std::vector<double> step_distances;  // r_n = d(x_n, x_{n+1})
  double r0_perimeter{0};
  double lambda_estimate{0};
  std::vector<double> bounds;  // empty when lambda_estimate >= 1
  double mu_estimate{0};
  double rho{0};
  double big_r{0};
  std::vector<double> kannan_bounds;  // bound for step n at index n; 0 below n = k
  bool converged{false};
  Point limit;
};

/// Iterates until d(x_n, x_{n+1}) < tolerance or max_steps applications, but
/// always records at least k+1 points so the window estimates exist.
/// Non-finite oracle output aborts with a diagnostic.
IterationTrace picard_iterate(const MetricOracle& oracle, const Point& x0, std::size_t k,
                              const StopRule& stop);

struct SamplerConfig {
  std::uint64_t seed{1};
  std::size_t count{1000};
  std::vector<std::pair<double, double>> region;  // one [lo, hi] per dimension
};

/// Maximum class ratio over sampled pairwise-distinct tuples: a lower bound
/// for the true supremum, labeled as such. Degenerate draws (coincident
/// points, zero denominators) are rejected and redrawn. Accumulation is a
/// running max, so estimates never decrease as samples accumulate within one
/// run, and a longer run with the same seed extends the same draw sequence.
struct CoefficientEstimate {
  double estimate{0};
  std::size_t samples{0};
  std::size_t rejected{0};
  bool lower_bound_only{true};
};

CoefficientEstimate sample_coefficient(const MetricOracle& oracle, ContractionClass cls,
                                       std::size_t k, const SamplerConfig& sampler);

/// Checks d(Tx,Ty) <= lambda_hat * d(x,y) + 1e-9 on freshly sampled pairs.
struct PointwiseBoundReport {
  std::size_t pairs_checked{0};
  std::size_t violations{0};
  double max_slack{0};  // max of d(Tx,Ty) - lambda_hat*d(x,y)
  std::string assumption_note;
};

PointwiseBoundReport pointwise_contraction_check(const MetricOracle& oracle, double lambda_hat,
                                                 const SamplerConfig& sampler);

/// Dense-grid search of the region for fixed points other than the trace
/// limit. Vacuous unless the trace converged with a limit distinct from every
/// earlier iterate. Adjacent grid hits are merged into one cluster.
struct UniquenessReport {
  bool vacuous{false};
  std::string reason;
  std::size_t grid_hits{0};
  std::vector<Point> fixed_point_clusters;  // best point of each cluster
  std::string assumption_note;
};

UniquenessReport uniqueness_check(const IterationTrace& trace, const MetricOracle& oracle,
                                  const std::vector<std::pair<double, double>>& region,
                                  std::size_t grid_points_per_axis, double fp_tolerance);

}  // namespace polyfix::picard
