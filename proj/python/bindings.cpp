#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orlicz/verify.hpp"

namespace py = pybind11;
using namespace orlicz;

namespace {

// python-side step functions arrive as level lists / value lists
StepFunction make_step(const Measure& m, const std::vector<std::pair<double, double>>& levels,
                       const std::vector<double>& values) {
  if (m.kind == Measure::Kind::Counting) return StepFunction::counting(values);
  std::vector<Level> lv;
  for (auto& [v, mass] : levels) lv.push_back({v, mass});
  return StepFunction::non_atomic(m.total, std::move(lv));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Orlicz-space toolkit: norms, conjugation, growth conditions, slice geometry";

  py::class_<OrliczFunction>(m, "OrliczFunction")
      .def_static("power", &OrliczFunction::power, py::arg("p"), py::arg("k") = 1.0)
      .def_static("linear", &OrliczFunction::linear, py::arg("k"))
      .def_static("exp_minus_one", &OrliczFunction::exp_minus_one)
      .def_static("u_log_u", &OrliczFunction::u_log_u)
      .def_static("entropy", &OrliczFunction::entropy)
      .def_static("piecewise_linear", &OrliczFunction::piecewise_linear, py::arg("points"))
      .def_static("capped", &OrliczFunction::capped, py::arg("inner"), py::arg("b"))
      .def("__call__", &OrliczFunction::operator())
      .def("right_derivative", &OrliczFunction::right_derivative)
      .def("generalized_inverse", &OrliczFunction::generalized_inverse)
      .def("domain_bound", &OrliczFunction::domain_bound)
      .def("critical_constants",
           [](const OrliczFunction& f) {
             auto cc = f.critical_constants();
             return py::dict(py::arg("a") = cc.a, py::arg("d") = cc.d, py::arg("c") = cc.c,
                             py::arg("b") = cc.b, py::arg("d_strict") = cc.d_strict);
           })
      .def("n_function_class",
           [](const OrliczFunction& f) {
             auto nc = f.n_function_class();
             return py::make_tuple(nc.at_zero, nc.at_infinity);
           })
      .def("check_delta2", [](const OrliczFunction& f, const std::string& cond) {
        Delta2Kind k = cond == "delta2"      ? Delta2Kind::Global
                       : cond == "delta2_inf" ? Delta2Kind::AtInfinity
                       : cond == "delta2_0"   ? Delta2Kind::AtZero
                                              : throw std::invalid_argument(
                                                    "condition must be delta2|delta2_inf|delta2_0");
        auto v = f.check_delta2(k);
        py::dict d;
        d["verdict"] = to_string(v.verdict);
        d["holds"] = v.holds();
        d["exact"] = v.exact();
        if (v.constant_K) d["K"] = *v.constant_K;
        if (v.threshold_u0) d["u0"] = *v.threshold_u0;
        if (v.witness_u) d["witness_u"] = *v.witness_u;
        return d;
      });

  py::class_<Measure>(m, "Measure")
      .def_static("non_atomic", &Measure::non_atomic, py::arg("total"))
      .def_static("counting", &Measure::counting);

  m.attr("inf") = kInf;

  m.def(
      "luxemburg_norm",
      [](const OrliczFunction& f, const Measure& mm,
         const std::vector<std::pair<double, double>>& levels, const std::vector<double>& values) {
        return luxemburg_norm(f, make_step(mm, levels, values));
      },
      py::arg("f"), py::arg("measure"),
      py::arg("levels") = std::vector<std::pair<double, double>>{},
      py::arg("values") = std::vector<double>{});
  m.def(
      "amemiya_norm",
      [](const OrliczFunction& f, const Measure& mm,
         const std::vector<std::pair<double, double>>& levels, const std::vector<double>& values) {
        auto r = amemiya_norm(f, make_step(mm, levels, values));
        return py::make_tuple(r.value, r.k_opt, r.inf_not_attained);
      },
      py::arg("f"), py::arg("measure"),
      py::arg("levels") = std::vector<std::pair<double, double>>{},
      py::arg("values") = std::vector<double>{});
  m.def(
      "orlicz_norm_dual",
      [](const OrliczFunction& f, const Measure& mm,
         const std::vector<std::pair<double, double>>& levels, const std::vector<double>& values) {
        return orlicz_norm_dual(f, make_step(mm, levels, values));
      },
      py::arg("f"), py::arg("measure"),
      py::arg("levels") = std::vector<std::pair<double, double>>{},
      py::arg("values") = std::vector<double>{});
  m.def("fundamental_function", &fundamental_function, py::arg("f"), py::arg("t"));

  m.def(
      "conjugate",
      [](const OrliczFunction& f) {
        auto pair = conjugate(f);
        return py::make_tuple(pair.conjugate,
                              pair.mode == ConjugatePair::Mode::ClosedForm ? "closed_form"
                                                                           : "numeric_grid");
      },
      py::arg("f"));
  m.def(
      "young_gap",
      [](const OrliczFunction& f, double u, double v) { return young_gap(conjugate(f), u, v); },
      py::arg("f"), py::arg("u"), py::arg("v"));

  m.def("sigma_bound", &sigma_bound, py::arg("f"), py::arg("lo"), py::arg("hi"));
  m.def(
      "construct_witness",
      [](const OrliczFunction& f, const Measure& mm) {
        Witness w = construct_witness(f, mm);
        py::dict d;
        d["applicable"] = w.applicable;
        if (w.applicable) {
          d["a"] = w.a;
          d["mass"] = w.mass;
        }
        return d;
      },
      py::arg("f"), py::arg("measure"));
  m.def(
      "slice_diameter_lower_bound",
      [](const OrliczFunction& f, size_t dimension, const std::vector<double>& functional,
         double epsilon, const std::string& side, size_t budget, uint64_t seed) {
        SliceSpec s;
        s.dimension = dimension;
        s.functional = functional;
        s.epsilon = epsilon;
        s.side = side == "weak_star_slice" ? SliceSpec::Side::WeakStarSlice
                                           : SliceSpec::Side::SliceOfBall;
        auto est = slice_diameter_lower_bound(f, s, budget, seed);
        py::dict d;
        d["lower_bound"] = est.lower_bound;
        d["samples_used"] = est.samples_used;
        d["empty_slice"] = est.empty_slice;
        d["best_a"] = est.best_a;
        d["best_b"] = est.best_b;
        return d;
      },
      py::arg("f"), py::arg("dimension"), py::arg("functional"), py::arg("epsilon"),
      py::arg("side") = "slice_of_ball", py::arg("budget") = 20000, py::arg("seed") = 42);

  m.def(
      "classify",
      [](const OrliczFunction& f, const Measure& mm, const std::string& norm) {
        auto rep = classify(f, mm,
                            norm == "orlicz" ? NormKind::Orlicz : NormKind::Luxemburg);
        auto v = [](const RuleVerdict& r) {
          return py::make_tuple(to_string(r.verdict), r.rule, r.empirical);
        };
        py::dict d;
        d["rnp"] = v(rep.rnp);
        d["daugavet"] = v(rep.daugavet);
        d["ld2p"] = v(rep.ld2p);
        d["d2p"] = v(rep.d2p);
        d["sd2p"] = v(rep.sd2p);
        d["orlicz_norm_ld2p"] = v(rep.orlicz_norm_ld2p);
        return d;
      },
      py::arg("f"), py::arg("measure"), py::arg("norm") = "luxemburg");
}
