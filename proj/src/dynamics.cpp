#include "polyfix/dynamics.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyfix {

OrbitStructure orbit(const SelfMap& map, std::size_t start) {
  const std::size_t n = map.size();
  if (start >= n) throw std::invalid_argument("orbit start out of range");
  std::vector<std::size_t> seq;
  std::vector<std::size_t> pos(n, n);  // n = unvisited
  std::size_t cur = start;
  while (pos[cur] == n) {
    pos[cur] = seq.size();
    seq.push_back(cur);
    cur = map(cur);
  }
  OrbitStructure o;
  o.start = start;
  const std::size_t entry = pos[cur];
  o.tail.assign(seq.begin(), seq.begin() + entry);
  o.cycle.assign(seq.begin() + entry, seq.end());
  return o;
}

std::vector<std::size_t> fixed_points(const SelfMap& map) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (map(i) == i) out.push_back(i);
  }
  return out;
}

std::map<std::size_t, std::vector<std::size_t>> prime_period_table(const SelfMap& map) {
  const std::size_t n = map.size();
  std::map<std::size_t, std::vector<std::size_t>> table;
  std::vector<bool> seen(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    OrbitStructure o = orbit(map, i);
    for (std::size_t p : o.tail) seen[p] = true;
    bool fresh_cycle = !seen[o.cycle.front()];
    for (std::size_t p : o.cycle) seen[p] = true;
    if (fresh_cycle) {
      auto& bucket = table[o.cycle.size()];
      bucket.insert(bucket.end(), o.cycle.begin(), o.cycle.end());
    }
  }
  for (auto& [period, points] : table) std::sort(points.begin(), points.end());
  return table;
}

std::vector<std::size_t> periodic_points(const SelfMap& map, std::size_t p) {
  if (p < 1) throw std::invalid_argument("prime period must be >= 1");
  auto table = prime_period_table(map);
  auto it = table.find(p);
  return it == table.end() ? std::vector<std::size_t>{} : it->second;
}

namespace {

TheoremVerdict build_verdict(const FiniteMetricSpace& space, const SelfMap& map, std::size_t k,
                             CoefficientResult coefficient) {
  TheoremVerdict v;
  v.k = k;
  v.coefficient = std::move(coefficient);
  v.class_member = v.coefficient.member;

  auto table = prime_period_table(map);
  v.periodic_free = true;
  for (std::size_t p = 2; p < k; ++p) {
    auto it = table.find(p);
    if (it != table.end() && !it->second.empty()) {
      v.periodic_free = false;
      v.periodic_violation = {p, it->second.front()};
      break;
    }
  }
  v.hypotheses_hold = v.class_member && v.periodic_free;
  v.fixed = fixed_points(map);

  if (v.class_member) v.count_bound_ok = v.fixed.size() <= k - 1;
  if (v.hypotheses_hold) {
    for (const auto& [period, points] : table) {
      if (period != 1 && period < k) v.cycle_lengths_ok = false;
    }
    v.conclusion_verified = !v.fixed.empty() && v.count_bound_ok && v.cycle_lengths_ok;
  }
  (void)space;
  return v;
}

}  // namespace

TheoremVerdict perimetric_fixed_point_check(const FiniteMetricSpace& space, const SelfMap& map,
                                            std::size_t k, Semantics semantics) {
  if (k < 3 || k > space.size()) throw std::invalid_argument("theorem check requires 3 <= k <= n");
  return build_verdict(space, map, k, perimetric_coefficient(space, map, k, semantics));
}

TheoremVerdict kannan_fixed_point_check(const FiniteMetricSpace& space, const SelfMap& map,
                                        std::size_t k, Semantics semantics) {
  if (k < 3 || k > space.size()) throw std::invalid_argument("theorem check requires 3 <= k <= n");
  return build_verdict(space, map, k, kannan_perimetric_coefficient(space, map, k, semantics));
}

}  // namespace polyfix
