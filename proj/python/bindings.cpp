#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include "polyfix/json_io.hpp"

namespace py = pybind11;
using namespace polyfix;

namespace {

py::object json_to_py(const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::null: return py::none();
    case nlohmann::json::value_t::boolean: return py::bool_(j.get<bool>());
    case nlohmann::json::value_t::number_integer: return py::int_(j.get<std::int64_t>());
    case nlohmann::json::value_t::number_unsigned: return py::int_(j.get<std::uint64_t>());
    case nlohmann::json::value_t::number_float: return py::float_(j.get<double>());
    case nlohmann::json::value_t::string: return py::str(j.get<std::string>());
    case nlohmann::json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case nlohmann::json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) out[py::str(key)] = json_to_py(value);
      return out;
    }
    default: return py::none();
  }
}

nlohmann::json doc_from_object(const py::object& obj) {
  std::string text;
  if (py::isinstance<py::str>(obj)) {
    text = obj.cast<std::string>();
  } else {
    text = py::module_::import("json").attr("dumps")(obj).cast<std::string>();
  }
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(e.what());
  }
}

Instance instance_from_object(const py::object& obj) {
  return parse_instance(doc_from_object(obj));
}

PointTuple tuple_from_labels(const FiniteMetricSpace& space,
                             const std::vector<std::string>& labels) {
  PointTuple t;
  for (const auto& label : labels) {
    auto idx = space.index_of(label);
    if (!idx) throw InputError("unknown point label '" + label + "'");
    t.push_back(*idx);
  }
  return t;
}

}  // namespace

PYBIND11_MODULE(polyfix, m) {
  m.doc() = "contraction classification, fixed-point analysis and Picard iteration "
            "on finite metric spaces";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<InvalidMetricError>(m, "InvalidMetricError", PyExc_ValueError);

  py::class_<Rational>(m, "Rational")
      .def(py::init([](const std::string& text) { return Rational::parse(text); }))
      .def_property_readonly("num", &Rational::num)
      .def_property_readonly("den", &Rational::den)
      .def("__str__", &Rational::str)
      .def("__repr__", [](const Rational& r) { return "Rational('" + r.str() + "')"; })
      .def("__float__", &Rational::to_double)
      .def("__eq__", [](const Rational& a, const Rational& b) { return a == b; })
      .def("__lt__", [](const Rational& a, const Rational& b) { return a < b; });

  m.def("cycle_count", &cycle_count, py::arg("k"),
        "distinct cyclic orders of k points up to rotation and reversal");
  m.def("edge_frequency", &edge_frequency, py::arg("k"),
        "how often one fixed edge appears across those cyclic orders");

  m.def(
      "validate",
      [](const py::object& doc) {
        InstanceData data = parse_instance_data(doc_from_object(doc));
        return json_to_py(validation_to_json(validate_metric(data.rows), data.labels));
      },
      py::arg("instance"), "metric-axiom report for an instance document");

  m.def(
      "classify",
      [](const py::object& doc, std::size_t k, const std::string& semantics) {
        Instance inst = instance_from_object(doc);
        ClassificationReport report =
            classify_all(inst.space, inst.map, k, parse_semantics(semantics));
        return json_to_py(classification_to_json(report, inst.space));
      },
      py::arg("instance"), py::arg("k"), py::arg("semantics") = "strict",
      "all five contraction coefficients with witnesses");

  m.def(
      "dynamics",
      [](const py::object& doc, std::size_t k, const std::string& semantics) {
        Instance inst = instance_from_object(doc);
        return json_to_py(dynamics_to_json(inst.space, inst.map, k, parse_semantics(semantics)));
      },
      py::arg("instance"), py::arg("k"), py::arg("semantics") = "strict",
      "orbits, fixed points, prime periods and fixed-point verdicts");

  m.def(
      "theorems",
      [](const py::object& doc, std::size_t k) {
        Instance inst = instance_from_object(doc);
        return json_to_py(implications_to_json(check_implications(inst.space, inst.map, k)));
      },
      py::arg("instance"), py::arg("k"), "implication checks on one instance");

  m.def(
      "perimeter",
      [](const py::object& doc, const std::vector<std::string>& labels) {
        Instance inst = instance_from_object(doc);
        return perimeter(inst.space, tuple_from_labels(inst.space, labels));
      },
      py::arg("instance"), py::arg("labels"));

  m.def(
      "total_pairwise",
      [](const py::object& doc, const std::vector<std::string>& labels) {
        Instance inst = instance_from_object(doc);
        return total_pairwise(inst.space, tuple_from_labels(inst.space, labels));
      },
      py::arg("instance"), py::arg("labels"));

  m.def(
      "fuzz",
      [](std::uint64_t seed, std::size_t trials, std::size_t n_min, std::size_t n_max,
         std::size_t k_min, std::size_t k_max, const std::string& model) {
        FuzzConfig config;
        config.seed = seed;
        config.trials = trials;
        config.n_min = n_min;
        config.n_max = n_max;
        config.k_min = k_min;
        config.k_max = k_max;
        config.model = parse_model(model);
        return json_to_py(fuzz_to_json(fuzz(config)));
      },
      py::arg("seed"), py::arg("trials"), py::arg("n_min") = 3, py::arg("n_max") = 8,
      py::arg("k_min") = 3, py::arg("k_max") = 5, py::arg("model") = "closure",
      "seed-reproducible randomized implication checking");

  m.def(
      "iterate",
      [](const std::string& map_name, const std::vector<double>& x0, std::size_t k, double tol,
         std::size_t max_steps, const std::map<std::string, double>& params) {
        picard::MetricOracle oracle = picard::make_oracle(map_name, params);
        return json_to_py(trace_to_json(picard::picard_iterate(oracle, x0, k, {tol, max_steps})));
      },
      py::arg("map"), py::arg("x0"), py::arg("k") = 3, py::arg("tol") = 1e-9,
      py::arg("max_steps") = 200, py::arg("params") = std::map<std::string, double>{},
      "Picard iteration on a built-in map with a-priori error bounds");

  m.def("map_names", &picard::oracle_names, "built-in map registry names");

  m.def("instance_ids", [] {
    std::vector<std::string> ids;
    for (const auto& inst : instance_registry()) ids.push_back(inst.id);
    return ids;
  });

  m.def(
      "repro",
      [](const std::string& id) {
        const BuiltinInstance* inst = find_instance(id);
        if (!inst) throw InputError("unknown instance '" + id + "'");
        return json_to_py(repro_to_json(run_repro(*inst)));
      },
      py::arg("id"), "recompute a registered instance's pinned values");

  m.def(
      "instance_document",
      [](const std::string& id) {
        const BuiltinInstance* inst = find_instance(id);
        if (!inst) throw InputError("unknown instance '" + id + "'");
        return json_to_py(instance_to_json(inst->space, inst->map));
      },
      py::arg("id"), "a registered instance as a plain instance document");
}
