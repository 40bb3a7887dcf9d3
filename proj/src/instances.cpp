#include "polyfix/instances.hpp"

#include "polyfix/classifier.hpp"
#include "polyfix/dynamics.hpp"

namespace polyfix {

namespace {

std::string join_labels(const FiniteMetricSpace& space, const std::vector<std::size_t>& idx) {
  std::string out;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ',';
    out += space.label(idx[i]);
  }
  return out;
}

const char* kPublished = "printed value in the source presentation";
const char* kEnumerated = "exhaustive enumeration over all subsets and cyclic orders";
const char* kIterated = "direct iteration of the map";

FiniteMetricSpace uniform_two_class_space(const char* prefix, std::size_t n, std::int64_t far) {
  // d = 1 inside the first n-1 points, d = far from each of them to the last.
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      rows[i][j] = (i == n - 1 || j == n - 1) ? Rational(far) : Rational(1);
    }
  }
  return FiniteMetricSpace(std::move(labels), std::move(rows));
}

BuiltinInstance make_separating_four_point() {
  std::vector<std::vector<Rational>> rows = {
      {Rational(0), Rational(2), Rational(2), Rational(2)},
      {Rational(2), Rational(0), Rational(2), Rational(1)},
      {Rational(2), Rational(2), Rational(0), Rational(2)},
      {Rational(2), Rational(1), Rational(2), Rational(0)},
  };
  BuiltinInstance inst{
      .id = "em_2_1",
      .description = "four-point space whose map contracts the total pairwise distance at k=4 "
                     "but inflates one polygon perimeter",
      .space = FiniteMetricSpace({"x1", "x2", "x3", "x4"}, std::move(rows)),
      .map = SelfMap{{0, 2, 3, 0}},
      .k = 4,
      .expected = {},
      .notes = {},
  };
  auto add = [&](std::string quantity, std::string expected, std::string basis,
                 std::function<std::string(const BuiltinInstance&)> compute) {
    inst.expected.push_back({std::move(quantity), std::move(expected), std::move(basis),
                             std::move(compute)});
  };
  add("S(x1,x2,x3,x4)", "11", kPublished, [](const BuiltinInstance& b) {
    return total_pairwise(b.space, {0, 1, 2, 3}).str();
  });
  add("S(Tx1,Tx2,Tx3,Tx4)", "10", kPublished, [](const BuiltinInstance& b) {
    return total_pairwise(b.space, apply_map(b.map, {0, 1, 2, 3})).str();
  });
  add("P(x1,x2,x4,x3)", "7", kPublished, [](const BuiltinInstance& b) {
    return perimeter(b.space, {0, 1, 3, 2}).str();
  });
  add("P(Tx1,Tx2,Tx4,Tx3)", "8", kPublished, [](const BuiltinInstance& b) {
    return perimeter(b.space, apply_map(b.map, {0, 1, 3, 2})).str();
  });
  add("total-pairwise coefficient at k=4", "10/11", kEnumerated, [](const BuiltinInstance& b) {
    return total_distance_coefficient(b.space, b.map, 4).infimum.str();
  });
  add("total-pairwise membership at k=4", "member", kEnumerated, [](const BuiltinInstance& b) {
    return total_distance_coefficient(b.space, b.map, 4).member ? "member" : "nonmember";
  });
  add("perimetric coefficient at k=4", "8/7", kEnumerated, [](const BuiltinInstance& b) {
    return perimetric_coefficient(b.space, b.map, 4).infimum.str();
  });
  add("perimetric membership at k=4", "nonmember", kEnumerated, [](const BuiltinInstance& b) {
    return perimetric_coefficient(b.space, b.map, 4).member ? "member" : "nonmember";
  });
  add("perimetric witness cycle at k=4", "x1,x2,x4,x3", kEnumerated,
      [](const BuiltinInstance& b) {
        return join_labels(b.space, perimetric_coefficient(b.space, b.map, 4).witness);
      });
  add("banach coefficient", "2", kEnumerated, [](const BuiltinInstance& b) {
    return banach_coefficient(b.space, b.map).infimum.str();
  });
  add("banach witness pair", "x2,x4", kEnumerated, [](const BuiltinInstance& b) {
    return join_labels(b.space, banach_coefficient(b.space, b.map).witness);
  });
  return inst;
}

BuiltinInstance make_seven_point_periodic() {
  BuiltinInstance inst{
      .id = "ex_2_1",
      .description = "seven-point space: polygon-perimeter member at k=7 with a fixed point "
                     "alongside periodic points of prime periods 2 and 3",
      .space = uniform_two_class_space("x", 7, 2),
      .map = SelfMap{{0, 2, 1, 4, 5, 3, 0}},
      .k = 7,
      .expected = {},
      .notes = {},
  };
  auto add = [&](std::string quantity, std::string expected, std::string basis,
                 std::function<std::string(const BuiltinInstance&)> compute) {
    inst.expected.push_back({std::move(quantity), std::move(expected), std::move(basis),
                             std::move(compute)});
  };
  add("P(x1,...,x7)", "9", kPublished, [](const BuiltinInstance& b) {
    return perimeter(b.space, {0, 1, 2, 3, 4, 5, 6}).str();
  });
  add("P(Tx1,...,Tx7)", "6", kPublished, [](const BuiltinInstance& b) {
    return perimeter(b.space, apply_map(b.map, {0, 1, 2, 3, 4, 5, 6})).str();
  });
  add("perimetric coefficient at k=7", "7/9", kEnumerated, [](const BuiltinInstance& b) {
    return perimetric_coefficient(b.space, b.map, 7).infimum.str();
  });
  add("perimetric membership at k=7", "member", kEnumerated, [](const BuiltinInstance& b) {
    return perimetric_coefficient(b.space, b.map, 7).member ? "member" : "nonmember";
  });
  add("perimetric coefficient at k=3", "1", kEnumerated, [](const BuiltinInstance& b) {
    return perimetric_coefficient(b.space, b.map, 3).infimum.str();
  });
  add("perimetric membership at k=3", "nonmember", kEnumerated, [](const BuiltinInstance& b) {
    return perimetric_coefficient(b.space, b.map, 3).member ? "member" : "nonmember";
  });
  add("P(Tx4,Tx5,Tx6) / P(x4,x5,x6)", "3/3", kPublished, [](const BuiltinInstance& b) {
    auto [lhs, rhs] = ratio_for_cycle(b.space, b.map, {3, 4, 5}, ContractionClass::Perimetric);
    return lhs.str() + "/" + rhs.str();
  });
  add("fixed points", "x1", kPublished, [](const BuiltinInstance& b) {
    return join_labels(b.space, fixed_points(b.map));
  });
  add("points of prime period 2", "x2,x3", kPublished, [](const BuiltinInstance& b) {
    return join_labels(b.space, periodic_points(b.map, 2));
  });
  add("points of prime period 3", "x4,x5,x6", kIterated, [](const BuiltinInstance& b) {
    return join_labels(b.space, periodic_points(b.map, 3));
  });
  add("orbit of x7", "tail x7; cycle x1", kIterated, [](const BuiltinInstance& b) {
    OrbitStructure o = orbit(b.map, 6);
    return "tail " + join_labels(b.space, o.tail) + "; cycle " + join_labels(b.space, o.cycle);
  });
  inst.notes.push_back(
      "the source presentation lists the prime-period-3 points as x5,x6,x7; iterating the "
      "printed map gives the 3-cycle {x4,x5,x6} while x7 maps to the fixed point x1");
  return inst;
}

BuiltinInstance make_max_fixed_points(std::size_t k) {
  SelfMap map;
  for (std::size_t i = 0; i + 1 < k; ++i) map.image.push_back(i);
  map.image.push_back(0);  // last point falls onto the first fixed point
  BuiltinInstance inst{
      .id = "em_2_2_k" + std::to_string(k),
      .description = "polygon-perimeter member on " + std::to_string(k) +
                     " points attaining the maximal count of " + std::to_string(k - 1) +
                     " fixed points",
      .space = uniform_two_class_space("p", k, 2),
      .map = std::move(map),
      .k = k,
      .expected = {},
      .notes = {},
  };
  Rational coeff(static_cast<std::int64_t>(k), static_cast<std::int64_t>(k) + 2);
  std::vector<std::size_t> fixed_idx;
  for (std::size_t i = 0; i + 1 < k; ++i) fixed_idx.push_back(i);
  std::string fixed_labels = join_labels(inst.space, fixed_idx);

  auto add = [&](std::string quantity, std::string expected, std::string basis,
                 std::function<std::string(const BuiltinInstance&)> compute) {
    inst.expected.push_back({std::move(quantity), std::move(expected), std::move(basis),
                             std::move(compute)});
  };
  add("perimetric coefficient at k=" + std::to_string(k), coeff.str(), kEnumerated,
      [k](const BuiltinInstance& b) {
        return perimetric_coefficient(b.space, b.map, k).infimum.str();
      });
  add("perimetric membership at k=" + std::to_string(k), "member", kEnumerated,
      [k](const BuiltinInstance& b) {
        return perimetric_coefficient(b.space, b.map, k).member ? "member" : "nonmember";
      });
  add("fixed points", fixed_labels, kIterated, [](const BuiltinInstance& b) {
    return join_labels(b.space, fixed_points(b.map));
  });
  add("fixed point count", std::to_string(k - 1), kIterated, [](const BuiltinInstance& b) {
    return std::to_string(fixed_points(b.map).size());
  });
  add("membership and periodic-point hypotheses", "hold", kIterated,
      [k](const BuiltinInstance& b) {
        return perimetric_fixed_point_check(b.space, b.map, k).hypotheses_hold ? "hold" : "fail";
      });
  add("fixed point exists within the k-1 bound", "verified", kIterated,
      [k](const BuiltinInstance& b) {
        return perimetric_fixed_point_check(b.space, b.map, k).conclusion_verified ? "verified"
                                                                                   : "failed";
      });
  inst.notes.push_back(
      "the source presentation writes the map as Tp1=p1, Tp2=p2, ..., Tpk=p1 and lists the "
      "fixed points as {p1,p3,...}; this registry encodes T as fixing p1..p" +
      std::to_string(k - 1) + " with p" + std::to_string(k) +
      " -> p1, which attains the k-1 fixed-point bound exactly");
  return inst;
}

BuiltinInstance make_kannan_five_point() {
  BuiltinInstance inst{
      .id = "sec3_example",
      .description = "five-point space whose map satisfies the Kannan polygon inequality on the "
                     "increasing ordering but not on every cyclic order",
      .space = uniform_two_class_space("x", 5, 9),
      .map = SelfMap{{1, 2, 3, 3, 0}},
      .k = 5,
      .expected = {},
      .notes = {},
  };
  auto add = [&](std::string quantity, std::string expected, std::string basis,
                 std::function<std::string(const BuiltinInstance&)> compute) {
    inst.expected.push_back({std::move(quantity), std::move(expected), std::move(basis),
                             std::move(compute)});
  };
  add("P(Tx1,...,Tx5) on the increasing order", "4", kPublished, [](const BuiltinInstance& b) {
    return ratio_for_cycle(b.space, b.map, {0, 1, 2, 3, 4}, ContractionClass::KannanPerimetric)
        .first.str();
  });
  add("sum of displacements d(xi,Txi)", "12", kPublished, [](const BuiltinInstance& b) {
    return ratio_for_cycle(b.space, b.map, {0, 1, 2, 3, 4}, ContractionClass::KannanPerimetric)
        .second.str();
  });
  add("single-ordering kannan-polygon coefficient at k=5", "1/3", kPublished,
      [](const BuiltinInstance& b) {
        return kannan_perimetric_coefficient(b.space, b.map, 5, Semantics::PaperOrdering)
            .infimum.str();
      });
  add("single-ordering membership at k=5 (threshold 2/5)", "member", kPublished,
      [](const BuiltinInstance& b) {
        return kannan_perimetric_coefficient(b.space, b.map, 5, Semantics::PaperOrdering).member
                   ? "member"
                   : "nonmember";
      });
  add("all-orderings kannan-polygon coefficient at k=5", "5/12", kEnumerated,
      [](const BuiltinInstance& b) {
        return kannan_perimetric_coefficient(b.space, b.map, 5).infimum.str();
      });
  add("all-orderings membership at k=5 (threshold 2/5)", "nonmember", kEnumerated,
      [](const BuiltinInstance& b) {
        return kannan_perimetric_coefficient(b.space, b.map, 5).member ? "member" : "nonmember";
      });
  add("ratio on the cycle x1,x3,x2,x4,x5", "5/12", kEnumerated, [](const BuiltinInstance& b) {
    auto [lhs, rhs] =
        ratio_for_cycle(b.space, b.map, {0, 2, 1, 3, 4}, ContractionClass::KannanPerimetric);
    return lhs.str() + "/" + rhs.str();
  });
  add("fixed points", "x4", kPublished, [](const BuiltinInstance& b) {
    return join_labels(b.space, fixed_points(b.map));
  });
  add("kannan coefficient", "1", kEnumerated, [](const BuiltinInstance& b) {
    return kannan_coefficient(b.space, b.map).infimum.str();
  });
  inst.notes.push_back(
      "the published coefficient 1/3 checks the single increasing ordering; over all 12 cyclic "
      "orders the worst ratio is 5/12, which is not below the 2/5 threshold, so under the "
      "all-orderings reading of the definition the map is not a member (run classify with "
      "--semantics paper-ordering to reproduce the published computation)");
  return inst;
}

}  // namespace

const std::vector<BuiltinInstance>& instance_registry() {
  static const std::vector<BuiltinInstance> registry = [] {
    std::vector<BuiltinInstance> v;
    v.push_back(make_separating_four_point());
    v.push_back(make_seven_point_periodic());
    v.push_back(make_max_fixed_points(4));
    v.push_back(make_max_fixed_points(5));
    v.push_back(make_max_fixed_points(6));
    v.push_back(make_kannan_five_point());
    return v;
  }();
  return registry;
}

const BuiltinInstance* find_instance(std::string_view id) {
  for (const auto& inst : instance_registry()) {
    if (inst.id == id) return &inst;
  }
  return nullptr;
}

ReproOutcome run_repro(const BuiltinInstance& instance) {
  ReproOutcome outcome;
  outcome.id = instance.id;
  outcome.notes = instance.notes;
  for (const auto& ev : instance.expected) {
    ReproLine line;
    line.quantity = ev.quantity;
    line.expected = ev.expected;
    line.actual = ev.compute(instance);
    line.match = line.actual == ev.expected;
    outcome.all_match = outcome.all_match && line.match;
    outcome.lines.push_back(std::move(line));
  }
  return outcome;
}

}  // namespace polyfix
