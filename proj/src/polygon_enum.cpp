#include "polyfix/polygon_enum.hpp"

#include <algorithm>
#include <stdexcept>

namespace polyfix {

namespace {
std::uint64_t factorial(std::size_t m) {
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= m; ++i) f *= i;
  return f;
}
}  // namespace

std::uint64_t cycle_count(std::size_t k) {
  if (k < 3) throw std::invalid_argument("cycle_count requires k >= 3");
  if (k > 21) throw std::invalid_argument("cycle_count: k too large for 64-bit result");
  return factorial(k - 1) / 2;
}

std::uint64_t edge_frequency(std::size_t k) {
  if (k < 3) throw std::invalid_argument("edge_frequency requires k >= 3");
  if (k > 21) throw std::invalid_argument("edge_frequency: k too large for 64-bit result");
  return factorial(k - 2);
}

SubsetEnumerator::SubsetEnumerator(std::size_t n, std::size_t k) : n_(n), k_(k) {
  if (k < 2) throw std::invalid_argument("subset enumeration requires k >= 2");
  if (k > n) throw std::invalid_argument("subset enumeration requires k <= n");
  current_.resize(k);
  for (std::size_t i = 0; i < k; ++i) current_[i] = i;
}

bool SubsetEnumerator::next(std::vector<std::size_t>& subset) {
  if (done_) return false;
  if (fresh_) {
    fresh_ = false;
    subset = current_;
    return true;
  }
  // Advance the rightmost index that still has room.
  std::size_t i = k_;
  while (i > 0) {
    --i;
    if (current_[i] + 1 <= n_ - k_ + i) {
      ++current_[i];
      for (std::size_t j = i + 1; j < k_; ++j) current_[j] = current_[j - 1] + 1;
      subset = current_;
      return true;
    }
  }
  done_ = true;
  return false;
}

CycleEnumerator::CycleEnumerator(std::vector<std::size_t> points) {
  if (points.size() < 3) throw std::invalid_argument("cycle enumeration requires k >= 3");
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end()) {
    throw std::invalid_argument("cycle enumeration requires distinct points");
  }
  anchor_ = points.front();
  rest_.assign(points.begin() + 1, points.end());
}

bool CycleEnumerator::next(CanonicalCycle& cycle) {
  if (done_) return false;
  while (true) {
    if (!fresh_) {
      if (!std::next_permutation(rest_.begin(), rest_.end())) {
        done_ = true;
        return false;
      }
    }
    fresh_ = false;
    // Reflection is fixed by requiring the vertex after the anchor to be
    // smaller than the vertex before it.
    if (rest_.front() < rest_.back()) {
      cycle.vertices.clear();
      cycle.vertices.reserve(rest_.size() + 1);
      cycle.vertices.push_back(anchor_);
      cycle.vertices.insert(cycle.vertices.end(), rest_.begin(), rest_.end());
      return true;
    }
  }
}

}  // namespace polyfix
