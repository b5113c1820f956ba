#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sumorder/errors.hpp"
#include "sumorder/group.hpp"
#include "sumorder/integers.hpp"
#include "sumorder/json_io.hpp"
#include "sumorder/parse.hpp"
#include "sumorder/prime_field.hpp"
#include "sumorder/product.hpp"
#include "sumorder/rectify.hpp"
#include "sumorder/search.hpp"
#include "sumorder/sequence.hpp"
#include "sumorder/verify.hpp"

namespace py = pybind11;

namespace {

using sumorder::ordered_json;

py::object json_to_py(const ordered_json& j) {
  switch (j.type()) {
    case ordered_json::value_t::null:
      return py::none();
    case ordered_json::value_t::boolean:
      return py::bool_(j.get<bool>());
    case ordered_json::value_t::number_integer:
      return py::int_(j.get<std::int64_t>());
    case ordered_json::value_t::number_unsigned:
      return py::int_(j.get<std::uint64_t>());
    case ordered_json::value_t::number_float:
      return py::float_(j.get<double>());
    case ordered_json::value_t::string:
      return py::str(j.get<std::string>());
    case ordered_json::value_t::array: {
      py::list out;
      for (const auto& item : j) out.append(json_to_py(item));
      return out;
    }
    case ordered_json::value_t::object: {
      py::dict out;
      for (const auto& [key, value] : j.items()) {
        out[py::str(key)] = json_to_py(value);
      }
      return out;
    }
    default:
      throw sumorder::internal_error("unconvertible JSON value");
  }
}

ordered_json py_to_json(py::handle h) {
  if (h.is_none()) return nullptr;
  if (py::isinstance<py::bool_>(h)) return h.cast<bool>();
  if (py::isinstance<py::int_>(h)) return h.cast<std::int64_t>();
  if (py::isinstance<py::float_>(h)) return h.cast<double>();
  if (py::isinstance<py::str>(h)) return h.cast<std::string>();
  if (py::isinstance<py::dict>(h)) {
    ordered_json out = ordered_json::object();
    for (auto item : h.cast<py::dict>()) {
      out[item.first.cast<std::string>()] = py_to_json(item.second);
    }
    return out;
  }
  if (py::isinstance<py::sequence>(h)) {
    ordered_json out = ordered_json::array();
    for (auto item : h.cast<py::sequence>()) out.push_back(py_to_json(item));
    return out;
  }
  throw sumorder::input_error("unsupported value in JSON-like input");
}

sumorder::GroupSpec spec_of(const std::string& group) {
  return sumorder::parse_group(group);
}

sumorder::Element to_element(const sumorder::GroupSpec& spec, py::handle h) {
  std::vector<std::int64_t> coords;
  if (py::isinstance<py::int_>(h)) {
    coords.push_back(h.cast<std::int64_t>());
  } else {
    for (auto c : h.cast<py::sequence>()) {
      coords.push_back(c.cast<std::int64_t>());
    }
  }
  return sumorder::canonicalize(spec, coords);
}

std::vector<sumorder::Element> to_elements(const sumorder::GroupSpec& spec,
                                           py::handle seq) {
  std::vector<sumorder::Element> out;
  for (auto item : seq.cast<py::sequence>()) {
    out.push_back(to_element(spec, item));
  }
  return out;
}

std::vector<std::int64_t> to_residues(py::handle seq) {
  std::vector<std::int64_t> out;
  for (auto item : seq.cast<py::sequence>()) {
    out.push_back(item.cast<std::int64_t>());
  }
  return out;
}

py::object result_to_py(const sumorder::SequencingResult& result) {
  return json_to_py(sumorder::result_to_json(result));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "orderings of finite abelian-group subsets with pairwise distinct "
      "partial sums";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const sumorder::input_error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    } catch (const sumorder::no_ordering_found& e) {
      PyErr_SetString(PyExc_RuntimeError, e.what());
    }
  });

  m.def(
      "sequence",
      [](py::handle elems, const std::string& group) {
        const sumorder::GroupSpec spec = spec_of(group);
        return result_to_py(
            sumorder::sequence_subset(to_elements(spec, elems), spec));
      },
      py::arg("elems"), py::arg("group") = "Z",
      "Construct a valid ordering; returns a dict with ordering, "
      "partial_sums, method, verified, and certificate/layout when present.");

  m.def(
      "sequence_integers",
      [](py::handle elems) {
        sumorder::Ordering o =
            sumorder::sequence_integers(to_residues(elems));
        return json_to_py(sumorder::elements_to_json(o.elems));
      },
      py::arg("elems"),
      "Valid ordering of a set of distinct nonzero integers.");

  m.def(
      "sequence_mod_p",
      [](py::handle residues, std::int64_t p) {
        return result_to_py(sumorder::sequence_mod_p(to_residues(residues), p));
      },
      py::arg("residues"), py::arg("p"),
      "Rectification pipeline over F_p.");

  m.def(
      "is_valid",
      [](py::handle elems, const std::string& group) {
        const sumorder::GroupSpec spec = spec_of(group);
        return sumorder::is_valid(
            sumorder::Ordering{spec, to_elements(spec, elems)});
      },
      py::arg("ordering"), py::arg("group") = "Z");

  m.def(
      "analyze",
      [](py::handle elems, const std::string& group) {
        const sumorder::GroupSpec spec = spec_of(group);
        return json_to_py(sumorder::validity_to_json(sumorder::analyze(
            sumorder::Ordering{spec, to_elements(spec, elems)})));
      },
      py::arg("ordering"), py::arg("group") = "Z",
      "Validity, first collision, two-sidedness, and zero-sum blocks.");

  m.def(
      "find_dilation",
      [](py::handle residues, std::int64_t p, int ell) -> py::object {
        auto cert = sumorder::find_dilation(to_residues(residues), p, ell);
        if (!cert) return py::none();
        return json_to_py(sumorder::certificate_to_json(*cert));
      },
      py::arg("residues"), py::arg("p"), py::arg("ell"),
      "Freiman rectification certificate as a dict, or None.");

  m.def(
      "check_certificate",
      [](py::handle cert) {
        return sumorder::check_certificate(
            sumorder::certificate_from_json(py_to_json(cert)));
      },
      py::arg("certificate"));

  m.def(
      "freiman_verify",
      [](py::handle cert, int ell) {
        return sumorder::freiman_verify(
            sumorder::certificate_from_json(py_to_json(cert)), ell);
      },
      py::arg("certificate"), py::arg("ell"));

  m.def("graham_bound", &sumorder::graham_bound, py::arg("p"));
  m.def("lev_bound", &sumorder::lev_bound, py::arg("p"), py::arg("ell"));

  m.def(
      "backtrack_order",
      [](py::handle elems, const std::string& group) -> py::object {
        const sumorder::GroupSpec spec = spec_of(group);
        auto found = sumorder::backtrack_order(to_elements(spec, elems), spec);
        if (!found) return py::none();
        return json_to_py(sumorder::elements_to_json(found->elems));
      },
      py::arg("elems"), py::arg("group") = "Z",
      "Lexicographically first valid ordering, or None.");

  m.def(
      "count_valid_orderings",
      [](py::handle elems, const std::string& group) {
        const sumorder::GroupSpec spec = spec_of(group);
        return sumorder::count_valid_orderings(to_elements(spec, elems), spec);
      },
      py::arg("elems"), py::arg("group") = "Z");

  m.def(
      "sweep",
      [](std::int64_t p, std::optional<int> max_size,
         const std::string& engine) {
        sumorder::SweepEngine eng;
        if (engine == "backtracking") {
          eng = sumorder::SweepEngine::Backtracking;
        } else if (engine == "pipeline") {
          eng = sumorder::SweepEngine::Pipeline;
        } else {
          throw sumorder::input_error("unknown engine '" + engine + "'");
        }
        const sumorder::SweepReport report = sumorder::sweep(
            p, max_size.value_or(static_cast<int>(p - 1)), eng);
        return json_to_py(sumorder::sweep_to_json(report));
      },
      py::arg("p"), py::arg("max_size") = py::none(),
      py::arg("engine") = "backtracking",
      "Exhaustive conjecture sweep over subsets of F_p minus zero.");
}
