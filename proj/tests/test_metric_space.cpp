#include <doctest.h>

#include <algorithm>

#include "polyfix/instances.hpp"
#include "polyfix/metric_space.hpp"
#include "polyfix/theorem_oracle.hpp"
#include "support/brute_force.hpp"

using namespace polyfix;

namespace {

const FiniteMetricSpace& separating4() { return find_instance("em_2_1")->space; }
const FiniteMetricSpace& seven_point() { return find_instance("ex_2_1")->space; }

std::vector<std::vector<Rational>> matrix_of(const FiniteMetricSpace& s) {
  std::vector<std::vector<Rational>> rows(s.size(), std::vector<Rational>(s.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = 0; j < s.size(); ++j) rows[i][j] = s.dist(i, j);
  }
  return rows;
}

}  // namespace

TEST_CASE("validate_metric accepts valid matrices") {
  CHECK(validate_metric(matrix_of(separating4())).valid());
  CHECK(validate_metric({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}}).valid());
}

TEST_CASE("validate_metric reports a triangle violation with the offending triple") {
  auto report = validate_metric({{Rational(0), Rational(1), Rational(5)},
                                 {Rational(1), Rational(0), Rational(1)},
                                 {Rational(5), Rational(1), Rational(0)}});
  REQUIRE_FALSE(report.valid());
  CHECK_FALSE(report.structurally_rejected());
  REQUIRE(report.violations.size() == 1);
  const auto& v = report.violations.front();
  CHECK(v.kind == MetricViolation::Kind::Triangle);
  CHECK(v.i == 0);
  CHECK(v.j == 1);
  CHECK(v.k == 2);
}

TEST_CASE("validate_metric separates structural rejection from axiom violations") {
  auto ragged = validate_metric({{Rational(0), Rational(1)}, {Rational(1)}});
  CHECK(ragged.structurally_rejected());

  auto negative = validate_metric({{Rational(0), Rational(-1)}, {Rational(-1), Rational(0)}});
  CHECK(negative.structurally_rejected());

  auto axioms = validate_metric({{Rational(1), Rational(0)}, {Rational(2), Rational(0)}});
  CHECK_FALSE(axioms.structurally_rejected());
  CHECK_FALSE(axioms.valid());
  auto has = [&](MetricViolation::Kind kind) {
    return std::any_of(axioms.violations.begin(), axioms.violations.end(),
                       [&](const MetricViolation& v) { return v.kind == kind; });
  };
  CHECK(has(MetricViolation::Kind::NonzeroDiagonal));
  CHECK(has(MetricViolation::Kind::Asymmetric));
  CHECK(has(MetricViolation::Kind::ZeroOffDiagonal));
}

TEST_CASE("space construction rejects invalid input") {
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{Rational(0), Rational(0)},
                                                 {Rational(0), Rational(0)}}),
                  InvalidMetricError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "a"}, {{Rational(0), Rational(1)},
                                                 {Rational(1), Rational(0)}}),
                  std::invalid_argument);
}

TEST_CASE("perimeter matches the worked values") {
  CHECK(perimeter(separating4(), {0, 1, 3, 2}) == Rational(7));
  CHECK(perimeter(seven_point(), {0, 1, 2, 3, 4, 5, 6}) == Rational(9));
  CHECK(perimeter(separating4(), {1, 1, 1}) == Rational(0));
  CHECK_THROWS_AS(perimeter(separating4(), {0, 1}), std::invalid_argument);
  CHECK_THROWS_AS(perimeter(separating4(), {0, 1, 9}), std::invalid_argument);
}

TEST_CASE("total pairwise distance matches the worked values") {
  CHECK(total_pairwise(separating4(), {0, 1, 2, 3}) == Rational(11));
  CHECK(total_pairwise(separating4(), apply_map(find_instance("em_2_1")->map, {0, 1, 2, 3})) ==
        Rational(10));
  CHECK(total_pairwise(separating4(), {2, 2}) == Rational(0));
  CHECK_THROWS_AS(total_pairwise(separating4(), {0}), std::invalid_argument);
}

TEST_CASE("apply_map is positionwise and may introduce repeats") {
  const auto& seven = *find_instance("ex_2_1");
  CHECK(apply_map(seven.map, {3, 4, 5}) == PointTuple{4, 5, 3});
  CHECK(apply_map(find_instance("em_2_1")->map, {0, 1, 2, 3}) == PointTuple{0, 2, 3, 0});
  SelfMap identity{{0, 1, 2, 3, 4, 5, 6}};
  PointTuple t{2, 6, 2, 0};
  CHECK(apply_map(identity, t) == t);
}

TEST_CASE("tuple functional invariants on random spaces") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    SplitMix64 rng{derive_seed(901, seed)};
    const std::size_t n = rng.range(3, 8);
    auto model = seed % 2 ? DistanceModel::TaxicabGrid : DistanceModel::IntegerClosure;
    FiniteMetricSpace space = random_space(derive_seed(902, seed), n, model);

    const std::size_t k = rng.range(3, n);
    PointTuple distinct(n);
    for (std::size_t i = 0; i < n; ++i) distinct[i] = i;
    for (std::size_t i = n; i > 1; --i) std::swap(distinct[i - 1], distinct[rng.below(i)]);
    distinct.resize(k);

    // pairwise-distinct polygons have positive perimeter
    CHECK(perimeter(space, distinct) > Rational(0));

    // perimeter is invariant under rotation and reversal
    PointTuple rotated(distinct.begin() + 1, distinct.end());
    rotated.push_back(distinct.front());
    PointTuple reversed(distinct.rbegin(), distinct.rend());
    CHECK(perimeter(space, rotated) == perimeter(space, distinct));
    CHECK(perimeter(space, reversed) == perimeter(space, distinct));

    // a tuple with repeats is legal for both functionals
    PointTuple repeated = distinct;
    repeated.push_back(distinct.front());
    CHECK(perimeter(space, repeated) >= Rational(0));

    // total pairwise distance is invariant under any permutation
    PointTuple shuffled = distinct;
    for (std::size_t i = k; i > 1; --i) std::swap(shuffled[i - 1], shuffled[rng.below(i)]);
    CHECK(total_pairwise(space, shuffled) == total_pairwise(space, distinct));

    // at k=3 the polygon perimeter equals the total pairwise distance
    PointTuple triple(distinct.begin(), distinct.begin() + 3);
    CHECK(perimeter(space, triple) == total_pairwise(space, triple));

    // each polygon edge is one of the pairwise distances
    CHECK(perimeter(space, distinct) <= Rational(2) * total_pairwise(space, distinct));
  }
}

TEST_CASE("scaling multiplies distances exactly") {
  FiniteMetricSpace scaled = separating4().scaled(Rational(3, 7));
  CHECK(scaled.dist(1, 3) == Rational(3, 7));
  CHECK(scaled.dist(0, 1) == Rational(6, 7));
  CHECK_THROWS_AS(separating4().scaled(Rational(0)), std::invalid_argument);
}
