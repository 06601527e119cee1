#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "ulrich_lab/chern.hpp"
#include "ulrich_lab/cli/checks.hpp"
#include "ulrich_lab/cli/commands.hpp"
#include "ulrich_lab/cubic.hpp"
#include "ulrich_lab/error.hpp"
#include "ulrich_lab/json_io.hpp"
#include "ulrich_lab/syzygy.hpp"
#include "ulrich_lab/ulrich.hpp"

namespace py = pybind11;
using namespace ulrich_lab;

// Arbitrary-precision integers cross the boundary as Python ints, by way of
// their decimal text.
namespace pybind11::detail {
template <>
struct type_caster<Integer> {
  PYBIND11_TYPE_CASTER(Integer, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    const auto text = py::str(src).cast<std::string>();
    auto parsed = parse_integer(text);
    if (!parsed) return false;
    value = std::move(*parsed);
    return true;
  }

  static handle cast(const Integer& v, return_value_policy, handle) {
    if (auto small = to_int64(v)) return PyLong_FromLongLong(*small);
    return PyLong_FromString(v.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::object fraction(const Rational& q) {
  return py::module_::import("fractions")
      .attr("Fraction")(Integer(boost::multiprecision::numerator(q)), Integer(boost::multiprecision::denominator(q)));
}

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) { return Json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact numerics of Ulrich bundles and their syzygies on del Pezzo surfaces";

  py::register_exception<Error>(m, "UlrichLabError", PyExc_ValueError);

  py::class_<DivisorClass>(m, "DivisorClass")
      .def(py::init<Integer, std::vector<Integer>>(), py::arg("a"), py::arg("b"))
      .def_static("parse", [](const std::string& text) { return parse_divisor(text); })
      .def_property_readonly("a", &DivisorClass::a)
      .def_property_readonly("b", &DivisorClass::b)
      .def("__add__", [](const DivisorClass& x, const DivisorClass& y) { return x + y; })
      .def("__sub__", [](const DivisorClass& x, const DivisorClass& y) { return x - y; })
      .def("__neg__", [](const DivisorClass& x) { return -x; })
      .def("__mul__", [](const DivisorClass& x, const Integer& n) { return n * x; })
      .def("__rmul__", [](const DivisorClass& x, const Integer& n) { return n * x; })
      .def("__eq__", [](const DivisorClass& x, const DivisorClass& y) { return x == y; })
      .def("__hash__", [](const DivisorClass& x) { return py::hash(py::str(format_divisor(x))); })
      .def("__str__", &format_divisor)
      .def("__repr__", [](const DivisorClass& x) { return "DivisorClass('" + format_divisor(x) + "')"; });

  py::class_<DelPezzoSurface>(m, "DelPezzoSurface")
      .def(py::init<int>(), py::arg("degree"))
      .def_property_readonly("degree", &DelPezzoSurface::degree)
      .def_property_readonly("num_exceptional", &DelPezzoSurface::num_exceptional)
      .def("line_class", &DelPezzoSurface::line_class)
      .def("exceptional_class", &DelPezzoSurface::exceptional_class, py::arg("i"))
      .def("canonical_class", &DelPezzoSurface::canonical_class)
      .def("anticanonical_class", &DelPezzoSurface::anticanonical_class)
      .def("fiber_class", &DelPezzoSurface::fiber_class)
      .def("zero", &DelPezzoSurface::zero)
      .def("parse", [](const DelPezzoSurface& s, const std::string& text) { return parse_divisor(text, s); })
      .def("__repr__", [](const DelPezzoSurface& s) { return "DelPezzoSurface(" + std::to_string(s.degree()) + ")"; });

  m.def("intersect", py::overload_cast<const DivisorClass&, const DivisorClass&>(&intersect), py::arg("x"),
        py::arg("y"));

  py::class_<BundleNumerics>(m, "BundleNumerics")
      .def(py::init<Integer, DivisorClass, Integer>(), py::arg("rank"), py::arg("c1"), py::arg("c2"))
      .def_readonly("rank", &BundleNumerics::rank)
      .def_readonly("c1", &BundleNumerics::c1)
      .def_readonly("c2", &BundleNumerics::c2)
      .def("__eq__", [](const BundleNumerics& x, const BundleNumerics& y) { return x == y; })
      .def("to_dict", [](const BundleNumerics& f) { return to_python(to_json(f)); })
      .def_static("from_dict", [](const py::object& o) { return bundle_from_json(from_python(o)); })
      .def("__repr__", [](const BundleNumerics& f) { return "BundleNumerics(" + to_json(f).dump() + ")"; });

  py::class_<NumericClassData>(m, "NumericClassData")
      .def(py::init([](Integer rank, Integer c1_sq, Integer c1_dot_h, Integer c2) {
             return NumericClassData{std::move(rank), std::move(c1_sq), std::move(c1_dot_h), std::move(c2)};
           }),
           py::arg("rank"), py::arg("c1_sq"), py::arg("c1_dot_H"), py::arg("c2"))
      .def_readonly("rank", &NumericClassData::rank)
      .def_readonly("c1_sq", &NumericClassData::c1_sq)
      .def_readonly("c1_dot_H", &NumericClassData::c1_dot_H)
      .def_readonly("c2", &NumericClassData::c2)
      .def("__eq__", [](const NumericClassData& x, const NumericClassData& y) { return x == y; })
      .def("__repr__", [](const NumericClassData& f) { return "NumericClassData(" + to_json(f).dump() + ")"; });

  m.def("line_bundle", &line_bundle, py::arg("c1"));
  m.def("tensor", &tensor, py::arg("f"), py::arg("g"));
  m.def("tensor_line", &tensor_line, py::arg("f"), py::arg("l"));
  m.def("direct_sum", [](const std::vector<BundleNumerics>& fs) { return direct_sum(fs); }, py::arg("bundles"));
  m.def("dual", py::overload_cast<const BundleNumerics&>(&dual), py::arg("f"));
  m.def("euler_char", py::overload_cast<const BundleNumerics&, const DelPezzoSurface&>(&euler_char), py::arg("f"),
        py::arg("surface"));
  m.def("slope", [](const BundleNumerics& f, const DelPezzoSurface& s) { return fraction(slope(f, s)); },
        py::arg("f"), py::arg("surface"));
  m.def("discriminant", py::overload_cast<const BundleNumerics&>(&discriminant), py::arg("f"));
  m.def("expected_moduli_dim", py::overload_cast<const BundleNumerics&>(&expected_moduli_dim), py::arg("f"));
  m.def("numeric_data", &numeric_data, py::arg("f"), py::arg("surface"));

  py::class_<PolarizedData>(m, "PolarizedData")
      .def(py::init<int, Integer, Integer>(), py::arg("n"), py::arg("Hn"), py::arg("HK"))
      .def("to_dict", [](const PolarizedData& p) { return to_python(to_json(p)); });
  m.def("polarization", &polarization, py::arg("surface"));
  m.def("curve_section_genus", [](const PolarizedData& p) { return curve_section_genus(p).value; }, py::arg("p"));
  m.def("butler_semistability_criterion", &butler_semistability_criterion, py::arg("p"));
  m.def("koszul_criterion", &koszul_criterion, py::arg("p"));
  m.def("coprime_stability_criterion", &coprime_stability_criterion, py::arg("p"));
  m.def("ulrich_c2", &ulrich_c2, py::arg("r"), py::arg("c1_sq"), py::arg("surface"));
  m.def("is_ulrich_candidate", py::overload_cast<const BundleNumerics&, const DelPezzoSurface&>(&is_ulrich_candidate),
        py::arg("f"), py::arg("surface"));
  m.def("is_ulrich_candidate",
        py::overload_cast<const NumericClassData&, const DelPezzoSurface&>(&is_ulrich_candidate), py::arg("f"),
        py::arg("surface"));
  m.def("prioritary_polarization_check", &prioritary_polarization_check, py::arg("surface"));

  m.def("syzygy_numerics", py::overload_cast<const BundleNumerics&, const Integer&>(&syzygy_numerics), py::arg("f"),
        py::arg("h0"));
  m.def("rank_by_recurrence", &rank_by_recurrence, py::arg("d"), py::arg("r"), py::arg("k"));
  m.def("rank_closed_form", &rank_closed_form, py::arg("d"), py::arg("r"), py::arg("k"));
  m.def(
      "iterate_syzygy",
      [](const BundleNumerics& seed, const DelPezzoSurface& s, int k_max) {
        return to_python(to_json(iterate_syzygy(seed, s, k_max)));
      },
      py::arg("seed"), py::arg("surface"), py::arg("k_max"), "Trace as a dict in the JSON trace layout.");
  m.def(
      "iterate_syzygy",
      [](const NumericClassData& seed, const DelPezzoSurface& s, int k_max) {
        return to_python(to_json(iterate_syzygy(seed, s, k_max)));
      },
      py::arg("seed"), py::arg("surface"), py::arg("k_max"));
  m.def("cink_chern", py::overload_cast<const BundleNumerics&, const DelPezzoSurface&, int>(&cink_chern),
        py::arg("seed"), py::arg("surface"), py::arg("k"));
  m.def("cink_chern", py::overload_cast<const NumericClassData&, const DelPezzoSurface&, int>(&cink_chern),
        py::arg("seed"), py::arg("surface"), py::arg("k"));
  m.def("intro_chern", &intro_chern, py::arg("d"), py::arg("c1_sq"), py::arg("c2"), py::arg("k"));
  m.def(
      "discriminant_drift",
      [](const BundleNumerics& seed, const DelPezzoSurface& s, int k_max) {
        return discriminant_drift(iterate_syzygy(seed, s, k_max));
      },
      py::arg("seed"), py::arg("surface"), py::arg("k_max"));

  m.def("twisted_cubics", [] {
    std::vector<std::pair<std::string, DivisorClass>> out;
    for (const auto& t : twisted_cubics()) out.emplace_back(std::string(to_string(t.type)), t.cls);
    return out;
  });
  m.def("is_twisted_cubic", &is_twisted_cubic, py::arg("d"));
  m.def(
      "decompose_stable_sum",
      [](const DivisorClass& target, int r, bool unordered) {
        std::vector<std::vector<DivisorClass>> out;
        for (const auto& d :
             decompose_stable_sum(target, r, unordered ? DecompositionMode::Unordered : DecompositionMode::Ordered)) {
          std::vector<DivisorClass> parts;
          for (const auto& p : d.parts) parts.push_back(p.cls);
          out.push_back(std::move(parts));
        }
        return out;
      },
      py::arg("target"), py::arg("r"), py::arg("unordered") = false);
  m.def("chi_pair_closed_form",
        [](int j, const std::vector<Integer>& pairings) { return chi_pair_closed_form(j, pairings); }, py::arg("j"),
        py::arg("pairings"));
  m.def(
      "chi_pair_oracle",
      [](const BundleNumerics& fprev, const DivisorClass& t) {
        for (const auto& c : twisted_cubics()) {
          if (c.cls == t) return chi_pair_oracle(fprev, c);
        }
        throw Error(ErrorCode::InvalidArgument, format_divisor(t) + " is not a twisted cubic");
      },
      py::arg("fprev"), py::arg("t"));
  m.def(
      "cubic_moduli_pair",
      [](const BundleNumerics& f) {
        auto p = cubic_moduli_pair(f);
        return std::pair{p.partner, p.dim};
      },
      py::arg("f"));

  m.def(
      "run_checks",
      [](long cases, std::uint64_t seed) {
        cli::CheckOptions options;
        options.cases = cases;
        options.rng_seed = seed;
        py::list out;
        for (const auto& r : cli::run_property_checks(options)) {
          py::dict d;
          d["module"] = r.module;
          d["name"] = r.name;
          d["cases"] = r.cases;
          d["failures"] = r.failures;
          d["passed"] = r.passed();
          d["first_failure"] = r.first_failure;
          out.append(d);
        }
        return out;
      },
      py::arg("cases") = 1000, py::arg("seed") = cli::CheckOptions{}.rng_seed);

  m.def(
      "run_command",
      [](const std::string& command, int d, int r, int k_max, std::optional<Integer> c1_sq, std::optional<Integer> c2,
         std::optional<std::string> c1, std::optional<std::string> target, bool unordered, const std::string& format) {
        cli::RunConfig cfg;
        cfg.command = cli::parse_command(command);
        cfg.d = d;
        cfg.r = r;
        cfg.k_max = k_max;
        cfg.seed_c1_sq = std::move(c1_sq);
        cfg.seed_c2 = std::move(c2);
        cfg.c1 = std::move(c1);
        cfg.target = std::move(target);
        cfg.unordered = unordered;
        cfg.format = cli::parse_output_format(format);
        std::ostringstream out, err;
        const int code = cli::run(cfg, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("command"), py::arg("d") = 4, py::arg("r") = 2, py::arg("k_max") = 10, py::arg("c1_sq") = py::none(),
      py::arg("c2") = py::none(), py::arg("c1") = py::none(), py::arg("target") = py::none(),
      py::arg("unordered") = false, py::arg("format") = "json",
      "Runs a CLI subcommand in-process; returns (exit_code, stdout, stderr).");
}
