#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyfix/rational.hpp"

namespace polyfix {

/// One violated requirement found while checking a candidate distance matrix.
/// Structural problems (ragged matrix, negative entries) are kept apart from
/// metric-axiom violations so callers can tell "not a distance matrix at all"
/// from "a distance matrix that is not a metric".
struct MetricViolation {
  enum class Kind {
    NotSquare,        // structural: row count != column count
    NegativeEntry,    // structural: d[i][j] < 0
    NonzeroDiagonal,  // d[i][i] != 0
    Asymmetric,       // d[i][j] != d[j][i]
    ZeroOffDiagonal,  // d[i][j] == 0 for i != j
    Triangle,         // d[i][k] > d[i][j] + d[j][k]
  };

  Kind kind{};
  std::size_t i{}, j{}, k{};

  bool structural() const { return kind == Kind::NotSquare || kind == Kind::NegativeEntry; }
  std::string describe() const;
};

struct ValidationReport {
  std::vector<MetricViolation> violations;

  bool valid() const { return violations.empty(); }
  bool structurally_rejected() const;
};

/// Checks every metric axiom on a candidate matrix and reports each violation
/// with the offending index pair/triple. Structural defects short-circuit the
/// axiom checks (the axioms are not well posed on a ragged or negative input).
ValidationReport validate_metric(const std::vector<std::vector<Rational>>& rows);

class InvalidMetricError : public std::runtime_error {
public:
  InvalidMetricError(std::string message, ValidationReport report)
      : std::runtime_error(std::move(message)), report_(std::move(report)) {}
  const ValidationReport& report() const { return report_; }

private:
  ValidationReport report_;
};

/// A finite metric space: labeled points plus an exact rational distance
/// matrix that satisfies the metric axioms. Point identity is by index;
/// labels are display-only. Immutable after construction.
class FiniteMetricSpace {
public:
  FiniteMetricSpace(std::vector<std::string> labels, std::vector<std::vector<Rational>> rows);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Rational& dist(std::size_t i, std::size_t j) const { return dist_[i * labels_.size() + j]; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Same points with every distance multiplied by c (c > 0 required).
  FiniteMetricSpace scaled(const Rational& c) const;

private:
  std::vector<std::string> labels_;
  std::vector<Rational> dist_;  // row-major n*n
};

/// Total self-map on a space with n points: image[i] is the index of T(i).
struct SelfMap {
  std::vector<std::size_t> image;

  std::size_t operator()(std::size_t i) const { return image.at(i); }
  std::size_t size() const { return image.size(); }
};

/// Ordered tuple of point indices. Repeats are allowed (image tuples need
/// them); classifier preimage tuples are always pairwise distinct.
using PointTuple = std::vector<std::size_t>;

bool pairwise_distinct(const PointTuple& t);

/// Perimeter of the closed polygon through the tuple in order:
/// d(t0,t1) + d(t1,t2) + ... + d(t_{k-1},t0). Requires k >= 3.
Rational perimeter(const FiniteMetricSpace& space, const PointTuple& t);

/// Sum of distances over all position pairs i < j of the tuple. Requires k >= 2.
Rational total_pairwise(const FiniteMetricSpace& space, const PointTuple& t);

/// Positionwise image tuple (T t0, T t1, ...). May contain repeats even when
/// the input is pairwise distinct.
PointTuple apply_map(const SelfMap& map, const PointTuple& t);

}  // namespace polyfix
