#include "polyfix/metric_space.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace polyfix {

std::string MetricViolation::describe() const {
  switch (kind) {
    case Kind::NotSquare:
      return "row " + std::to_string(i) + " has " + std::to_string(j) +
             " entries, expected " + std::to_string(k);
    case Kind::NegativeEntry:
      return "negative entry at (" + std::to_string(i) + "," + std::to_string(j) + ")";
    case Kind::NonzeroDiagonal:
      return "d(" + std::to_string(i) + "," + std::to_string(i) + ") != 0";
    case Kind::Asymmetric:
      return "d(" + std::to_string(i) + "," + std::to_string(j) + ") != d(" +
             std::to_string(j) + "," + std::to_string(i) + ")";
    case Kind::ZeroOffDiagonal:
      return "d(" + std::to_string(i) + "," + std::to_string(j) + ") = 0 for distinct points";
    case Kind::Triangle:
      return "d(" + std::to_string(i) + "," + std::to_string(k) + ") > d(" +
             std::to_string(i) + "," + std::to_string(j) + ") + d(" + std::to_string(j) +
             "," + std::to_string(k) + ")";
  }
  return "unknown violation";
}

bool ValidationReport::structurally_rejected() const {
  return std::any_of(violations.begin(), violations.end(),
                     [](const MetricViolation& v) { return v.structural(); });
}

ValidationReport validate_metric(const std::vector<std::vector<Rational>>& rows) {
  ValidationReport report;
  const std::size_t n = rows.size();
  if (n == 0) {
    report.violations.push_back({MetricViolation::Kind::NotSquare, 0, 0, 0});
    return report;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (rows[i].size() != n) {
      report.violations.push_back({MetricViolation::Kind::NotSquare, i, rows[i].size(), n});
    }
  }
  if (!report.violations.empty()) return report;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j].sign() < 0) {
        report.violations.push_back({MetricViolation::Kind::NegativeEntry, i, j, 0});
      }
    }
  }
  if (report.structurally_rejected()) return report;

  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i][i].is_zero()) {
      report.violations.push_back({MetricViolation::Kind::NonzeroDiagonal, i, i, 0});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i][j] != rows[j][i]) {
        report.violations.push_back({MetricViolation::Kind::Asymmetric, i, j, 0});
      }
      if (rows[i][j].is_zero()) {
        report.violations.push_back({MetricViolation::Kind::ZeroOffDiagonal, i, j, 0});
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (std::size_t k = i + 1; k < n; ++k) {
        if (k == j) continue;
        if (rows[i][k] > rows[i][j] + rows[j][k]) {
          report.violations.push_back({MetricViolation::Kind::Triangle, i, j, k});
        }
      }
    }
  }
  return report;
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels,
                                     std::vector<std::vector<Rational>> rows)
    : labels_(std::move(labels)) {
  if (labels_.empty()) throw std::invalid_argument("metric space needs at least one point");
  if (rows.size() != labels_.size()) {
    throw std::invalid_argument("distance matrix size does not match point count");
  }
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw std::invalid_argument("duplicate point labels");

  ValidationReport report = validate_metric(rows);
  if (!report.valid()) {
    throw InvalidMetricError("distance matrix violates metric axioms", std::move(report));
  }
  const std::size_t n = labels_.size();
  dist_.reserve(n * n);
  for (const auto& row : rows) {
    dist_.insert(dist_.end(), row.begin(), row.end());
  }
}

std::optional<std::size_t> FiniteMetricSpace::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

FiniteMetricSpace FiniteMetricSpace::scaled(const Rational& c) const {
  if (c.sign() <= 0) throw std::invalid_argument("scale factor must be positive");
  const std::size_t n = size();
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rows[i][j] = dist(i, j) * c;
  }
  return FiniteMetricSpace(labels_, std::move(rows));
}

bool pairwise_distinct(const PointTuple& t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (t[i] == t[j]) return false;
    }
  }
  return true;
}

namespace {
void check_indices(const FiniteMetricSpace& space, const PointTuple& t) {
  for (std::size_t idx : t) {
    if (idx >= space.size()) throw std::invalid_argument("tuple index out of range");
  }
}
}  // namespace

Rational perimeter(const FiniteMetricSpace& space, const PointTuple& t) {
  if (t.size() < 3) throw std::invalid_argument("perimeter needs at least 3 points");
  check_indices(space, t);
  Rational sum;
  for (std::size_t i = 0; i < t.size(); ++i) {
    sum += space.dist(t[i], t[(i + 1) % t.size()]);
  }
  return sum;
}

Rational total_pairwise(const FiniteMetricSpace& space, const PointTuple& t) {
  if (t.size() < 2) throw std::invalid_argument("total pairwise distance needs at least 2 points");
  check_indices(space, t);
  Rational sum;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      sum += space.dist(t[i], t[j]);
    }
  }
  return sum;
}

PointTuple apply_map(const SelfMap& map, const PointTuple& t) {
  PointTuple out;
  out.reserve(t.size());
  for (std::size_t idx : t) out.push_back(map(idx));
  return out;
}

}  // namespace polyfix
