#include <doctest.h>

#include <set>

#include "polyfix/dynamics.hpp"
#include "polyfix/instances.hpp"
#include "polyfix/theorem_oracle.hpp"
#include "support/brute_force.hpp"

using namespace polyfix;

namespace {
const BuiltinInstance& seven_point() { return *find_instance("ex_2_1"); }
const BuiltinInstance& kannan5() { return *find_instance("sec3_example"); }
}  // namespace

TEST_CASE("orbit decomposition") {
  const auto& seven = seven_point();
  OrbitStructure from7 = orbit(seven.map, 6);
  CHECK(from7.tail == std::vector<std::size_t>{6});
  CHECK(from7.cycle == std::vector<std::size_t>{0});

  OrbitStructure from4 = orbit(seven.map, 3);
  CHECK(from4.tail.empty());
  CHECK(from4.cycle == std::vector<std::size_t>{3, 4, 5});

  SelfMap identity{{0, 1, 2}};
  OrbitStructure id = orbit(identity, 1);
  CHECK(id.tail.empty());
  CHECK(id.cycle == std::vector<std::size_t>{1});

  CHECK(from7.tail.size() + from7.cycle.size() <= seven.map.size());
  CHECK_THROWS_AS(orbit(identity, 5), std::invalid_argument);
}

TEST_CASE("fixed points and prime periods") {
  const auto& seven = seven_point();
  CHECK(fixed_points(seven.map) == std::vector<std::size_t>{0});
  CHECK(periodic_points(seven.map, 2) == std::vector<std::size_t>{1, 2});
  CHECK(periodic_points(seven.map, 3) == std::vector<std::size_t>{3, 4, 5});
  CHECK(periodic_points(seven.map, 4).empty());

  SelfMap identity{{0, 1, 2, 3, 4}};
  CHECK(periodic_points(identity, 2).empty());
  CHECK(periodic_points(identity, 1).size() == 5);

  SelfMap constant{{2, 2, 2, 2}};
  CHECK(fixed_points(constant) == std::vector<std::size_t>{2});
}

TEST_CASE("prime-period classes partition the cyclic part") {
  for (std::uint64_t trial = 0; trial < 40; ++trial) {
    SplitMix64 rng{derive_seed(8100, trial)};
    const std::size_t n = rng.range(2, 10);
    SelfMap map = random_map(derive_seed(8200, trial), n);
    CAPTURE(trial);

    auto table = prime_period_table(map);
    std::set<std::size_t> covered;
    std::size_t total = 0;
    for (const auto& [p, points] : table) {
      for (std::size_t x : points) {
        // agreement with the direct-iteration oracle
        CHECK(brute::prime_period(map, x) == p);
        CHECK(covered.insert(x).second);
      }
      total += points.size();
    }
    std::size_t on_cycles = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (brute::prime_period(map, x) != 0) ++on_cycles;
    }
    CHECK(total == on_cycles);
    // tail points have no prime period
    for (std::size_t x = 0; x < n; ++x) {
      if (!covered.count(x)) CHECK(brute::prime_period(map, x) == 0);
    }
  }
}

TEST_CASE("fixed-point verdict: hypotheses hold on the maximal-fixed-points family") {
  for (std::size_t k : {4, 5, 6}) {
    const auto& inst = *find_instance("em_2_2_k" + std::to_string(k));
    TheoremVerdict v = perimetric_fixed_point_check(inst.space, inst.map, k);
    CHECK(v.class_member);
    CHECK(v.coefficient.infimum ==
          Rational(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k) + 2));
    CHECK(v.periodic_free);
    CHECK(v.hypotheses_hold);
    CHECK(v.fixed.size() == k - 1);
    CHECK(v.count_bound_ok);
    CHECK(v.cycle_lengths_ok);
    CHECK(v.conclusion_verified);
  }
}

TEST_CASE("fixed-point verdict: member with periodic points fails the hypotheses") {
  const auto& seven = seven_point();
  TheoremVerdict v = perimetric_fixed_point_check(seven.space, seven.map, 7);
  CHECK(v.class_member);
  CHECK_FALSE(v.periodic_free);
  REQUIRE(v.periodic_violation.has_value());
  CHECK(v.periodic_violation->first == 2);
  CHECK(v.periodic_violation->second == 1);
  CHECK_FALSE(v.hypotheses_hold);
  // a fixed point still exists; the converse direction is not claimed
  CHECK(v.fixed == std::vector<std::size_t>{0});
  CHECK(v.count_bound_ok);  // 1 <= 6
}

TEST_CASE("fixed-point verdict: constant map") {
  const auto& inst = *find_instance("em_2_1");
  SelfMap constant{{1, 1, 1, 1}};
  for (std::size_t k : {3, 4}) {
    TheoremVerdict v = perimetric_fixed_point_check(inst.space, constant, k);
    CHECK(v.hypotheses_hold);
    CHECK(v.fixed.size() == 1);
    CHECK(v.conclusion_verified);
  }
}

TEST_CASE("kannan verdict: strict semantics reject, single-ordering semantics accept") {
  const auto& inst = kannan5();
  TheoremVerdict strict = kannan_fixed_point_check(inst.space, inst.map, 5);
  CHECK_FALSE(strict.class_member);
  CHECK_FALSE(strict.hypotheses_hold);

  TheoremVerdict paper = kannan_fixed_point_check(inst.space, inst.map, 5,
                                                  Semantics::PaperOrdering);
  CHECK(paper.class_member);
  CHECK(paper.coefficient.infimum == Rational(1, 3));
  CHECK(paper.periodic_free);
  CHECK(paper.hypotheses_hold);
  CHECK(paper.fixed == std::vector<std::size_t>{3});
  CHECK(paper.conclusion_verified);
}

TEST_CASE("kannan verdict: infeasible class on a space of fixed points") {
  const auto& inst = kannan5();
  SelfMap identity{{0, 1, 2, 3, 4}};
  TheoremVerdict v = kannan_fixed_point_check(inst.space, identity, 5);
  CHECK_FALSE(v.coefficient.feasible);
  CHECK_FALSE(v.class_member);
  CHECK_FALSE(v.hypotheses_hold);
}

TEST_CASE("members reach a fixed point from every start when hypotheses hold") {
  // finite-space reading of convergence: under the hypotheses every orbit
  // lands on a cycle of length 1
  std::size_t members_seen = 0;
  for (std::uint64_t trial = 0; trial < 300; ++trial) {
    SplitMix64 rng{derive_seed(8300, trial)};
    const std::size_t n = rng.range(3, 7);
    const std::size_t k = rng.range(3, std::min<std::size_t>(5, n));
    FiniteMetricSpace space =
        random_space(derive_seed(8400, trial), n, DistanceModel::IntegerClosure);
    SelfMap map = random_map(derive_seed(8500, trial), n);
    TheoremVerdict v = perimetric_fixed_point_check(space, map, k);
    if (!v.hypotheses_hold) continue;
    ++members_seen;
    CHECK(v.conclusion_verified);
    for (std::size_t start = 0; start < n; ++start) {
      OrbitStructure o = orbit(map, start);
      CHECK(o.cycle.size() == 1);
      CHECK(map(o.cycle.front()) == o.cycle.front());
    }
  }
  CHECK(members_seen > 10);  // the hypothesis case actually fires
}
