#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <json.hpp>

#include <homaloidal/arrangements.hpp>
#include <homaloidal/atlas.hpp>
#include <homaloidal/errors.hpp>
#include <homaloidal/parse.hpp>
#include <homaloidal/polar.hpp>
#include <homaloidal/syzygy.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace py = pybind11;
using namespace homaloidal;

namespace {

FieldPtr field_of(std::uint64_t characteristic, int extension) {
  if (characteristic == 0) {
    if (extension != 1)
      throw InvalidField("extension degree must be 1 over the rationals");
    return Field::rationals();
  }
  return Field::make(characteristic, extension, 1);
}

RingPtr ring_of(std::uint64_t characteristic, int extension) {
  return Ring::make(field_of(characteristic, extension), {"x0", "x1", "x2"});
}

std::string analyze_json(const std::string& poly, std::uint64_t characteristic,
                         int extension, int trials, std::uint64_t seed) {
  Poly f = parse_poly(ring_of(characteristic, extension), poly);
  return report_json(analyze(f, trials, seed, poly));
}

std::string family_json(const std::string& name, int n,
                        std::uint64_t characteristic, int extension,
                        std::uint64_t slope_seed, bool allow_extension,
                        int trials, std::uint64_t seed) {
  FamilySpec spec{name, n, field_of(characteristic, extension), slope_seed,
                  allow_extension};
  FamilyResult fam = family_make(spec);
  AnalysisReport rep = analyze(fam.f, trials, seed, fam.label);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(report_json(rep));
  j["family"] = {{"name", name},
                 {"n", n},
                 {"label", fam.label},
                 {"extended", fam.extended},
                 {"f", fam.f.str()},
                 {"field", fam.field->name()}};
  return j.dump(2);
}

std::string arrangement_json(const std::vector<std::string>& lines,
                             std::uint64_t characteristic, int extension,
                             bool cross_check, std::uint64_t seed,
                             int trials) {
  RingPtr R = ring_of(characteristic, extension);
  std::vector<Poly> forms;
  forms.reserve(lines.size());
  for (const std::string& s : lines) forms.push_back(parse_poly(R, s));
  LineArrangement arr = make_arrangement(std::move(forms));
  CombinatorialVerdict v = classify_arrangement(arr, cross_check, seed, trials);
  nlohmann::ordered_json j;
  j["field"] = R->field()->name();
  j["lineCount"] = arr.d();
  nlohmann::ordered_json prof = nlohmann::ordered_json::object();
  for (const auto& [r, count] : v.profile.t)
    prof["t" + std::to_string(r)] = count;
  j["profile"] = prof;
  j["concurrent"] = v.profile.concurrent;
  j["sumTr"] = v.sum_tr;
  j["nearPencil"] = v.near_pencil;
  j["classification"] = arr_class_name(v.classification);
  if (v.d0) j["d0"] = *v.d0;
  if (v.algebraic_d0) j["algebraicD0"] = *v.algebraic_d0;
  j["degreeFormulaExact"] = v.degree_formula_exact;
  return j.dump(2);
}

std::string sweep_json_str(std::uint64_t characteristic, int extension,
                           int d_lo, int d_hi, int sample, std::uint64_t seed,
                           long long max_subsets) {
  return sweep_json(sweep_projective_plane(characteristic, extension, d_lo,
                                           d_hi, sample, seed, max_subsets));
}

std::string presentation_json_str(const std::string& poly,
                                  std::uint64_t characteristic,
                                  int extension) {
  Poly f = parse_poly(ring_of(characteristic, extension), poly);
  return presentation_json(minimal_presentation(f));
}

std::string verdict_json_str(const std::string& poly,
                             std::uint64_t characteristic, int extension,
                             int trials, std::uint64_t seed) {
  Poly f = parse_poly(ring_of(characteristic, extension), poly);
  return verdict_json(is_homaloidal(f, trials, seed));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "polar maps of plane curves over the rationals and finite fields";

  py::register_exception<MathError>(m, "MathError", PyExc_ValueError);

  m.def("analyze", &analyze_json, py::arg("poly"),
        py::arg("characteristic") = 0, py::arg("extension") = 1,
        py::arg("trials") = 3, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "Full analysis of one curve; returns a JSON report string.");

  m.def("family", &family_json, py::arg("name"), py::arg("n") = 0,
        py::arg("characteristic") = 0, py::arg("extension") = 1,
        py::arg("slope_seed") = 0, py::arg("allow_extension") = true,
        py::arg("trials") = 3, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "Build a named family member and analyze it; returns JSON.");

  m.def("arrangement", &arrangement_json, py::arg("lines"),
        py::arg("characteristic") = 0, py::arg("extension") = 1,
        py::arg("cross_check") = false, py::arg("seed") = 0,
        py::arg("trials") = 2, py::call_guard<py::gil_scoped_release>(),
        "Classify a line arrangement given as linear forms; returns JSON.");

  m.def("sweep", &sweep_json_str, py::arg("characteristic"),
        py::arg("extension") = 1, py::arg("d_lo") = 3, py::arg("d_hi") = 4,
        py::arg("sample") = 10, py::arg("seed") = 0,
        py::arg("max_subsets") = 200000,
        py::call_guard<py::gil_scoped_release>(),
        "Exhaustive arrangement sweep over one projective plane; returns "
        "JSON.");

  m.def("presentation", &presentation_json_str, py::arg("poly"),
        py::arg("characteristic") = 0, py::arg("extension") = 1,
        py::call_guard<py::gil_scoped_release>(),
        "Minimal graded presentation of the gradient ideal; returns JSON.");

  m.def("verdict", &verdict_json_str, py::arg("poly"),
        py::arg("characteristic") = 0, py::arg("extension") = 1,
        py::arg("trials") = 3, py::arg("seed") = 0,
        py::call_guard<py::gil_scoped_release>(),
        "Homaloidal verdict and multidegree only; returns JSON.");

  m.attr("__version__") = "0.1.0";
}
