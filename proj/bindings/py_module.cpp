#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pbwlab/formal.hpp"
#include "pbwlab/harish_chandra.hpp"
#include "pbwlab/jacobi.hpp"
#include "pbwlab/report.hpp"

namespace py = pybind11;
using namespace pbwlab;

namespace {

Mat<Scalar> index_from_rows(const std::vector<std::vector<std::string>>& rows) {
  if (rows.empty()) throw Error("empty index matrix");
  Mat<Scalar> m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != rows[0].size()) throw Error("ragged index matrix");
    for (size_t c = 0; c < rows[r].size(); ++c)
      m.at(static_cast<int>(r), static_cast<int>(c)) = Scalar::parse(rows[r][c]);
  }
  return m;
}

py::dict scan_row_dict(const ScanRow& row) {
  py::dict d;
  d["m"] = row.m;
  d["nonzero"] = row.nonzero;
  d["weight_ok"] = row.weight_ok;
  d["weight"] = row.weight.str();
  d["holomorphic"] = row.holomorphic;
  d["obstruction"] = row.obstruction.str();
  d["index_ok"] = row.index_ok;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact symbolic engine for sp(2n) and Jacobi enveloping algebras: PBW "
      "normal forms, character-induced modules, raising-operator recovery "
      "scans, Harish-Chandra projections and heat-operator identities.";

  py::register_exception<Error>(m, "PbwlabError");

  py::class_<Scalar>(m, "Scalar")
      .def(py::init([](long v) { return Scalar(v); }))
      .def_static("parse", &Scalar::parse)
      .def_static("rational",
                  [](long a, long b) { return Scalar::rational(a, b); })
      .def_static("pi_hat", &Scalar::pi_hat)
      .def_static("weight_k", &Scalar::weight_k)
      .def_static("param", &Scalar::param)
      .def("__add__", [](const Scalar& a, const Scalar& b) { return a + b; })
      .def("__sub__", [](const Scalar& a, const Scalar& b) { return a - b; })
      .def("__mul__", [](const Scalar& a, const Scalar& b) { return a * b; })
      .def("__truediv__", [](const Scalar& a, const Scalar& b) { return a / b; })
      .def("__neg__", [](const Scalar& a) { return -a; })
      .def("__pow__", [](const Scalar& a, long e) { return a.pow(e); })
      .def("__eq__", [](const Scalar& a, const Scalar& b) { return a == b; })
      .def("substitute",
           [](const Scalar& a, const std::map<std::string, std::string>& b) {
             std::map<std::string, Scalar> bindings;
             for (auto& [k, v] : b) bindings.emplace(k, Scalar::parse(v));
             return a.substitute(bindings);
           })
      .def("is_zero", &Scalar::is_zero)
      .def("__str__", &Scalar::str)
      .def("__repr__", [](const Scalar& s) { return "Scalar(" + s.str() + ")"; });

  py::class_<LieAlgebra, AlgebraRef>(m, "LieAlgebra")
      .def_static("symplectic", &LieAlgebra::symplectic, py::arg("n"))
      .def_static("jacobi", &LieAlgebra::jacobi, py::arg("n"), py::arg("j"))
      .def_property_readonly("dim", &LieAlgebra::dim)
      .def_property_readonly("name", &LieAlgebra::name)
      .def("label", &LieAlgebra::label)
      .def("index_of", &LieAlgebra::index_of)
      .def("subspace", &LieAlgebra::subspace)
      .def("bracket",
           [](const AlgebraRef& alg, int a, int b) {
             std::vector<std::pair<int, std::string>> out;
             for (auto& [k, c] : alg->bracket_basis(a, b))
               out.emplace_back(k, c.str());
             return out;
           })
      .def("check_jacobi_identity", &LieAlgebra::check_jacobi_identity)
      .def("check_realization_consistency",
           &LieAlgebra::check_realization_consistency)
      .def("to_json", &LieAlgebra::to_json);

  py::class_<PbwContext, ContextRef>(m, "PbwContext")
      .def_static("natural", &PbwContext::natural)
      .def_property_readonly("algebra", &PbwContext::algebra);

  py::class_<UeaElement>(m, "UeaElement")
      .def_static("unit", &UeaElement::unit)
      .def_static("generator", &UeaElement::generator)
      .def("__add__", [](const UeaElement& a, const UeaElement& b) { return a + b; })
      .def("__sub__", [](const UeaElement& a, const UeaElement& b) { return a - b; })
      .def("__mul__", [](const UeaElement& a, const UeaElement& b) { return a * b; })
      .def("scaled", [](const UeaElement& a, const std::string& c) {
        return a.scaled(Scalar::parse(c));
      })
      .def("pow", &UeaElement::pow)
      .def("__eq__", [](const UeaElement& a, const UeaElement& b) { return a == b; })
      .def("degree", &UeaElement::degree)
      .def("is_zero", &UeaElement::is_zero)
      .def("__str__", &UeaElement::str)
      .def("__repr__", [](const UeaElement& u) { return u.str(); });

  m.def("symmetrize", &symmetrize);
  m.def("is_central", &is_central);
  m.def("ad_action",
        [](ContextRef ctx, int basis, const UeaElement& u) {
          return ad_action(ctx, basis, u);
        });
  m.def("laplace_pair", [](ContextRef ctx) {
    LaplacePair lp = laplace_pair(ctx);
    return py::make_tuple(lp.delta, lp.delta1);
  });
  m.def("gelfand_invariant", &gelfand_invariant);
  m.def("raising_determinant",
        [](ContextRef ctx) { return raising_operator(ctx).det; });

  py::class_<ModuleVector>(m, "ModuleVector")
      .def("__add__", [](const ModuleVector& a, const ModuleVector& b) { return a + b; })
      .def("__sub__", [](const ModuleVector& a, const ModuleVector& b) { return a - b; })
      .def("scaled", [](const ModuleVector& a, const std::string& c) {
        return a.scaled(Scalar::parse(c));
      })
      .def("__eq__", [](const ModuleVector& a, const ModuleVector& b) { return a == b; })
      .def("is_zero", &ModuleVector::is_zero)
      .def("__str__", &ModuleVector::str)
      .def("__repr__", [](const ModuleVector& v) { return v.str(); });

  py::class_<InducedModule, ModuleRef>(m, "InducedModule")
      .def_static("siegel",
                  [](int n, const std::string& weight) {
                    return InducedModule::siegel(n, Scalar::parse(weight));
                  })
      .def_static("jacobi",
                  [](int n, int j, const std::string& weight,
                     const std::vector<std::vector<std::string>>& index) {
                    return InducedModule::jacobi(n, j, Scalar::parse(weight),
                                                 index_from_rows(index));
                  })
      .def_property_readonly("context", &InducedModule::context)
      .def("generator", &InducedModule::generator)
      .def("act", [](const ModuleRef& mod, const UeaElement& u,
                     const ModuleVector& v) { return mod->act(u, v); })
      .def("act_basis", [](const ModuleRef& mod, int basis,
                           const ModuleVector& v) { return mod->act(basis, v); })
      .def("weight", [](const ModuleRef& mod) { return mod->weight().str(); });

  m.def("weight_check", [](const ModuleVector& v) {
    WeightCheck wc = weight_check(v);
    return py::make_tuple(wc.semispherical,
                          wc.weight ? py::object(py::str(wc.weight->str()))
                                    : py::object(py::none()));
  });
  m.def("is_holomorphic", &is_holomorphic);
  m.def("recovery_scan", [](const ModuleRef& mod, int m_max) {
    py::list rows;
    for (const auto& row : recovery_scan(mod, m_max)) rows.append(scan_row_dict(row));
    return rows;
  });
  m.def("delta_eigencheck", [](int n, const std::string& weight, int r_max) {
    DeltaEigenReport rep = delta_eigencheck(n, Scalar::parse(weight), r_max);
    py::dict d;
    d["delta_ok"] = rep.delta_ok;
    d["delta_expected"] = rep.delta_expected.str();
    py::list rows;
    for (auto& row : rep.delta1_rows) {
      py::dict rd;
      rd["r"] = row.r;
      rd["ok"] = row.ok;
      rd["expected"] = row.expected.str();
      rows.append(rd);
    }
    d["delta1_rows"] = rows;
    d["all_ok"] = rep.all_ok();
    return d;
  });
  m.def("cofactor_relation_check", [](int n, int r) {
    CofactorReport rep = cofactor_relation_check(n, r);
    py::dict d;
    d["uniform"] = rep.uniform;
    d["C"] = rep.C.str();
    d["span_dim"] = rep.span_dim;
    return d;
  });
  m.def("center_projection_check", [](const UeaElement& elem, int n) {
    CenterProjectionReport rep = check_center_projection(elem, n);
    py::dict d;
    d["member_ok"] = rep.member_ok;
    d["weyl_ok"] = rep.weyl_ok;
    d["action_ok"] = rep.action_ok;
    d["projected"] = rep.projected.str([](int) { return std::string("H0"); });
    d["action_expected"] = rep.action_expected.str();
    return d;
  });
  m.def("bol_extension_check",
        [](int n, int j, const std::vector<std::vector<std::string>>& index,
           int l_max) {
          BolReport rep = verify_bol_extension(n, j, index_from_rows(index), l_max);
          py::dict d;
          d["uniform"] = rep.uniform;
          d["powers_ok"] = rep.powers_ok;
          d["c"] = rep.c.str();
          d["matched_form"] = rep.matched_form;
          return d;
        });

  m.def("run_config", [](const std::string& config_json) {
    RunConfig cfg = parse_config_json(config_json);
    RunResult result = run_all(cfg);
    return py::make_tuple(exit_code(result), render_json(result),
                          render_markdown(result));
  });
  m.def("known_suites", []() { return known_suites(); });

  m.attr("__version__") = "0.1.0";
}
