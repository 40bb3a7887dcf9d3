#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace polyfix {

/// Number of distinct Hamiltonian cycles on k labeled vertices up to rotation
/// and reversal: (k-1)!/2. Requires k >= 3.
std::uint64_t cycle_count(std::size_t k);

/// Number of those cycles containing one specific edge: (k-2)!. Requires k >= 3.
std::uint64_t edge_frequency(std::size_t k);

/// One cyclic order of k distinct points in canonical form: the smallest index
/// comes first (fixes rotation) and the second vertex is smaller than the last
/// (fixes reflection).
struct CanonicalCycle {
  std::vector<std::size_t> vertices;
};

/// Streams the C(n,k) index subsets of {0..n-1} in lexicographic order.
/// Requires 2 <= k <= n.
class SubsetEnumerator {
public:
  SubsetEnumerator(std::size_t n, std::size_t k);

  /// Fills `subset` with the next subset; returns false once exhausted.
  bool next(std::vector<std::size_t>& subset);

private:
  std::size_t n_, k_;
  std::vector<std::size_t> current_;
  bool fresh_{true};
  bool done_{false};
};

/// Streams the (k-1)!/2 canonical cycles over a fixed set of distinct points,
/// in lexicographic order of the vertex sequence. Requires k >= 3.
class CycleEnumerator {
public:
  explicit CycleEnumerator(std::vector<std::size_t> points);

  bool next(CanonicalCycle& cycle);

private:
  std::size_t anchor_{};
  std::vector<std::size_t> rest_;
  bool fresh_{true};
  bool done_{false};
};

template <typename Fn>
void for_each_k_subset(std::size_t n, std::size_t k, Fn&& fn) {
  SubsetEnumerator subsets(n, k);
  std::vector<std::size_t> subset;
  while (subsets.next(subset)) fn(subset);
}

template <typename Fn>
void for_each_canonical_cycle(const std::vector<std::size_t>& points, Fn&& fn) {
  CycleEnumerator cycles(points);
  CanonicalCycle cycle;
  while (cycles.next(cycle)) fn(cycle);
}

}  // namespace polyfix
