#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <tuple>

#include "polarwt/analysis.hpp"
#include "polarwt/json_io.hpp"
#include "polarwt/monomial_code.hpp"
#include "polarwt/oracle.hpp"
#include "polarwt/spectrum.hpp"

namespace py = pybind11;
using namespace polarwt;

namespace {

py::int_ to_py(const BigCount& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(to_decimal(v).c_str(), nullptr, 10));
}

std::vector<Monomial> masks_to_monomials(const std::vector<std::uint32_t>& masks) {
  std::vector<Monomial> out;
  for (auto s : masks) out.emplace_back(s);
  return out;
}

py::dict spectrum_dict(const WeightSpectrum& s) {
  py::dict out;
  for (const auto& [w, e] : s.entries) {
    py::dict row;
    row["mu"] = e.mu;
    row["total"] = to_py(e.total);
    if (e.split) {
      row["type1"] = to_py(e.type1);
      row["type2"] = to_py(e.type2);
    }
    out[py::int_(w)] = row;
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_polarwt, m) {
  m.doc() = "Exact low-weight spectra of decreasing monomial codes";

  py::class_<InfoSet>(m, "InfoSet")
      .def_static(
          "from_rows", [](int m, const std::vector<std::uint64_t>& rows) { return InfoSet::from_rows(m, rows); },
          py::arg("m"), py::arg("rows"))
      .def_static(
          "closure_of_rows",
          [](const std::vector<std::uint64_t>& rows, int m) { return InfoSet::closure_of_rows(rows, m); },
          py::arg("rows"), py::arg("m"))
      .def_static(
          "closure_of_masks",
          [](const std::vector<std::uint32_t>& masks, int m) { return decreasing_closure(masks_to_monomials(masks), m); },
          py::arg("masks"), py::arg("m"))
      .def_property_readonly("m", &InfoSet::m)
      .def_property_readonly("k", &InfoSet::size)
      .def_property_readonly("r", &InfoSet::max_degree)
      .def_property_readonly("w_min", [](const InfoSet& i) { return code_params(i).w_min; })
      .def("rows", &InfoSet::rows)
      .def("masks",
           [](const InfoSet& i) {
             std::vector<std::uint32_t> out;
             for (auto e : i.monomials()) out.push_back(e.mask());
             return out;
           })
      .def("contains", [](const InfoSet& i, std::uint32_t mask) { return i.contains(Monomial(mask)); })
      .def("__len__", &InfoSet::size)
      .def("__repr__", [](const InfoSet& i) {
        return "<InfoSet m=" + std::to_string(i.m()) + " K=" + std::to_string(i.size()) + ">";
      });

  py::class_<WeightSpectrum>(m, "WeightSpectrum")
      .def_readonly("m", &WeightSpectrum::m)
      .def_readonly("r", &WeightSpectrum::r)
      .def_readonly("k", &WeightSpectrum::k)
      .def_readonly("w_min", &WeightSpectrum::w_min)
      .def_readonly("oracle", &WeightSpectrum::oracle)
      .def("count", [](const WeightSpectrum& s, std::uint64_t w) { return to_py(s.count(w)); })
      .def("to_dict", &spectrum_dict)
      .def("to_json", &format_spectrum)
      .def_static("from_json", [](const std::string& text) { return parse_spectrum(text); });

  m.def("monomial_from_row", [](std::uint64_t z, int mm) { return monomial_from_row(z, mm).mask(); });
  m.def("row_from_monomial", [](std::uint32_t mask, int mm) { return row_from_monomial(Monomial(mask), mm); });
  m.def("leq", [](std::uint32_t a, std::uint32_t b) { return leq(Monomial(a), Monomial(b)); });

  m.def("construct_rm", &construct_rm, py::arg("m"), py::arg("r"));
  m.def("construct_bec", &construct_bec, py::arg("m"), py::arg("k"), py::arg("erasure_prob"));
  m.def("construct_pw", &construct_pw, py::arg("m"), py::arg("k"));
  m.def("parse_code_spec", &parse_code_spec);
  m.def("format_code_spec", &format_code_spec);

  m.def("count_min_weight", [](const InfoSet& i) { return to_py(count_min_weight(i)); });
  m.def(
      "count_type1", [](const InfoSet& i, int mu, unsigned t) { return to_py(count_type1(i, mu, t)); },
      py::arg("info"), py::arg("mu"), py::arg("threads") = 1);
  m.def(
      "count_type2", [](const InfoSet& i, int mu, unsigned t) { return to_py(count_type2(i, mu, t)); },
      py::arg("info"), py::arg("mu"), py::arg("threads") = 1);
  m.def("full_spectrum", [](const InfoSet& i, unsigned t) { return full_spectrum(i, t); }, py::arg("info"),
        py::arg("threads") = 1, py::call_guard<py::gil_scoped_release>());

  m.def(
      "brute_spectrum",
      [](const InfoSet& i, std::optional<std::uint64_t> cap, unsigned k_cap, unsigned threads) {
        return brute_spectrum(i, cap ? *cap : 2 * code_params(i).w_min, {k_cap, threads});
      },
      py::arg("info"), py::arg("weight_cap") = py::none(), py::arg("k_cap") = kDefaultKCap, py::arg("threads") = 1,
      py::call_guard<py::gil_scoped_release>());
  m.def("forms_census_type1", [](const InfoSet& i, int mu) { return to_py(forms_census_type1(i, mu)); });
  m.def("forms_census_type2", [](const InfoSet& i, int mu) { return to_py(forms_census_type2(i, mu)); });
  m.def("weight_shape_check", &weight_shape_check);

  m.def("q_function", &q_function);
  m.def("sigma_from_ebn0", &sigma_from_ebn0, py::arg("ebn0_db"), py::arg("rate"));
  m.def(
      "union_bound",
      [](const WeightSpectrum& s, double rate, const std::vector<double>& grid) {
        std::vector<std::tuple<double, double, double>> out;
        for (const auto& p : union_bound(s, rate, grid)) out.emplace_back(p.ebn0_db, p.sigma, p.bound);
        return out;
      },
      py::arg("spectrum"), py::arg("rate"), py::arg("ebn0_db"));
}
