#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <string>
#include <vector>

#include "mpschain/json_io.hpp"
#include "mpschain/models.hpp"

namespace py = pybind11;
using namespace mpschain;

namespace {

Tail tail_from_string(const std::string& s) {
  if (s == "repeat_last") {
    return Tail::RepeatLast;
  }
  if (s == "finite") {
    return Tail::Finite;
  }
  throw ArgumentError("tail must be \"repeat_last\" or \"finite\"");
}

std::string tail_to_string(Tail tail) {
  return tail == Tail::RepeatLast ? "repeat_last" : "finite";
}

EntropyBase base_from_string(const std::string& s) {
  if (s == "natural") {
    return EntropyBase::Natural;
  }
  if (s == "two") {
    return EntropyBase::Two;
  }
  throw ArgumentError("base must be \"natural\" or \"two\"");
}

MPSFamily make_family(int d, int m,
                      const std::vector<std::vector<ComplexMatrix>>& sites,
                      const std::string& tail) {
  std::vector<SiteTensors> converted;
  converted.reserve(sites.size());
  for (const auto& site : sites) {
    converted.push_back(SiteTensors{site});
  }
  return MPSFamily(d, m, std::move(converted), tail_from_string(tail));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Matrix product state families on spin chains: state-extension "
      "condition checks, naive and transfer expectation engines, reduced "
      "density matrices, and entanglement entropy.";

  py::register_exception<ResourceError>(m, "ResourceError",
                                        PyExc_RuntimeError);
  py::register_exception<ValidationError>(m, "ValidationError",
                                          PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

  // --- linear algebra primitives ---
  m.def("dagger", &dagger, py::arg("matrix"), "Conjugate transpose.");
  m.def("trace", &trace, py::arg("matrix"), py::arg("normalized") = false,
        "Sum of diagonal entries, divided by the side when normalized.");
  m.def("kron", &kron, py::arg("a"), py::arg("b"), "Kronecker product.");
  m.def(
      "chain_product",
      [](const std::vector<ComplexMatrix>& ms) { return chain_product(ms); },
      py::arg("matrices"), "Left-to-right product of square matrices.");
  m.def("hermitian_eigenvalues", &hermitian_eigenvalues, py::arg("matrix"),
        py::arg("tol") = kDefaultHermitianTol,
        "Eigenvalues of a Hermitian matrix in descending order.");
  m.def(
      "partial_trace_last",
      [](const ComplexMatrix& matrix, int d, int n_sites, int k,
         bool normalized) {
        return partial_trace_last(matrix, SiteDims{d, n_sites}, k, normalized);
      },
      py::arg("matrix"), py::arg("d"), py::arg("n_sites"), py::arg("k"),
      py::arg("normalized") = false,
      "Trace out the last k tensor factors of an operator on d^n_sites.");

  // --- families and statevectors ---
  py::class_<MPSFamily>(m, "MPSFamily",
                        "Family of m x m site tensors over a spin chain; "
                        "site labels are 0-based, chain sites 1-based.")
      .def(py::init(&make_family), py::arg("d"), py::arg("m"),
           py::arg("sites"), py::arg("tail") = "repeat_last")
      .def_property_readonly("d", &MPSFamily::d)
      .def_property_readonly("m", &MPSFamily::m)
      .def_property_readonly(
          "tail",
          [](const MPSFamily& f) { return tail_to_string(f.tail()); })
      .def_property_readonly("explicit_site_count",
                             &MPSFamily::explicit_site_count)
      .def(
          "site_tensor",
          [](const MPSFamily& f, int n, int i) { return f.tensor(n, i); },
          py::arg("n"), py::arg("i"),
          "Tensor A_i^[n] (chain site n >= 1, label i in 0..d-1).")
      .def("__repr__", [](const MPSFamily& f) {
        return "MPSFamily(d=" + std::to_string(f.d()) +
               ", m=" + std::to_string(f.m()) + ", explicit_sites=" +
               std::to_string(f.explicit_site_count()) + ", tail=\"" +
               tail_to_string(f.tail()) + "\")";
      });

  py::class_<StateVector>(m, "StateVector")
      .def_readonly("n_sites", &StateVector::n_sites)
      .def_readonly("d", &StateVector::d)
      .def_readonly("amplitudes", &StateVector::amplitudes)
      .def("__repr__", [](const StateVector& psi) {
        return "StateVector(n_sites=" + std::to_string(psi.n_sites) +
               ", d=" + std::to_string(psi.d) + ")";
      });

  m.def(
      "amplitude",
      [](const MPSFamily& family, const std::vector<int>& indices) {
        return amplitude(family, indices);
      },
      py::arg("family"), py::arg("indices"),
      "Tr(A_{i_1}^[1] ... A_{i_n}^[n]) for a 0-based label tuple.");
  m.def("build_statevector", &build_statevector, py::arg("family"),
        py::arg("n"), py::arg("cap") = kDefaultAmplitudeCap,
        "All d^n amplitudes in lexicographic order (site 1 most "
        "significant).");
  m.def("norm_squared", &norm_squared, py::arg("family"), py::arg("n"),
        py::arg("cap") = kDefaultAmplitudeCap);

  // --- condition checks ---
  py::class_<ConditionReport>(m, "ConditionReport")
      .def_readonly("condition_name", &ConditionReport::condition_name)
      .def_readonly("passed", &ConditionReport::pass)
      .def_readonly("checked_sites", &ConditionReport::checked_sites)
      .def_readonly("residuals", &ConditionReport::residuals)
      .def_readonly("tolerance", &ConditionReport::tolerance)
      .def_readonly("notes", &ConditionReport::notes)
      .def("__repr__", [](const ConditionReport& r) {
        return "ConditionReport(" + r.condition_name + ", " +
               (r.pass ? "pass" : "FAIL") + ")";
      });

  m.def("check_normalization", &check_normalization, py::arg("family"),
        py::arg("tol") = kDefaultResidualTol,
        "Squared-modulus normalization of the site-1 traces; the literal "
        "sum is recorded in the notes.");
  m.def("check_consistency", &check_consistency, py::arg("family"),
        py::arg("n_max"), py::arg("tol") = kDefaultResidualTol,
        "Operator consistency condition at sites 1..n_max.");

  py::class_<TraceIdentityCheck>(m, "TraceIdentityCheck")
      .def_readonly("lhs", &TraceIdentityCheck::lhs)
      .def_readonly("rhs", &TraceIdentityCheck::rhs)
      .def_readonly("deviation", &TraceIdentityCheck::deviation);

  m.def(
      "evaluate_trace_identity",
      [](const MPSFamily& family, int n, int k, const std::vector<int>& left,
         const std::vector<int>& right) {
        return evaluate_trace_identity(family, n, k, left, right);
      },
      py::arg("family"), py::arg("n"), py::arg("k"), py::arg("left"),
      py::arg("right"),
      "Both sides of the double-trace split identity at position n.");
  m.def(
      "verify_trace_identity",
      [](const MPSFamily& family, int n, int k, const std::vector<int>& left,
         const std::vector<int>& right, double tol) {
        return verify_trace_identity(family, n, k, left, right, tol);
      },
      py::arg("family"), py::arg("n"), py::arg("k"), py::arg("left"),
      py::arg("right"), py::arg("tol") = kDefaultResidualTol);

  // --- observables and the state engine ---
  py::class_<LocalObservable>(m, "LocalObservable")
      .def_static(
          "product",
          [](const std::vector<ComplexMatrix>& factors) {
            return LocalObservable::product(factors);
          },
          py::arg("factors"), "Tensor product of per-site d x d factors.")
      .def_static("dense", &LocalObservable::dense, py::arg("d"),
                  py::arg("n_sites"), py::arg("matrix"),
                  "One dense matrix of side d^n_sites.")
      .def_property_readonly("form",
                             [](const LocalObservable& x) {
                               return x.form() ==
                                              LocalObservable::Form::Product
                                          ? "product"
                                          : "dense";
                             })
      .def_property_readonly("d", &LocalObservable::d)
      .def_property_readonly("n_sites", &LocalObservable::n_sites)
      .def("padded", &LocalObservable::padded, py::arg("extra"),
           "Same observable extended by identity factors.");

  py::class_<EvaluationReport>(m, "EvaluationReport")
      .def_readonly("value", &EvaluationReport::value)
      .def_readonly("method", &EvaluationReport::method)
      .def_readonly("n_sites", &EvaluationReport::n_sites)
      .def_readonly("elapsed_ms", &EvaluationReport::elapsed_ms)
      .def("__repr__", [](const EvaluationReport& r) {
        return "EvaluationReport(method=\"" + r.method + "\", value=(" +
               std::to_string(r.value.real()) + "+" +
               std::to_string(r.value.imag()) + "j))";
      });

  py::class_<DensityMatrix>(m, "DensityMatrix")
      .def_readonly("matrix", &DensityMatrix::matrix)
      .def_readonly("n_sites", &DensityMatrix::n_sites)
      .def_readonly("d", &DensityMatrix::d)
      .def("__repr__", [](const DensityMatrix& rho) {
        return "DensityMatrix(n_sites=" + std::to_string(rho.n_sites) +
               ", d=" + std::to_string(rho.d) + ")";
      });

  m.def("evaluate_naive", &evaluate_naive, py::arg("family"),
        py::arg("observable"), py::arg("cap") = kDefaultAmplitudeCap,
        "Statevector route: <psi_{N+1}| X (x) 1 |psi_{N+1}>.");
  m.def("evaluate_transfer", &evaluate_transfer, py::arg("family"),
        py::arg("observable"),
        "Transfer-operator route; polynomial cost, product form only.");
  m.def("reduced_density_matrix", &reduced_density_matrix, py::arg("family"),
        py::arg("n_sites"), py::arg("cap") = kDefaultAmplitudeCap,
        "rho_[1,N]: the last site of |psi_{N+1}><psi_{N+1}| traced out.");
  m.def("validate_density_matrix", &validate_density_matrix, py::arg("rho"),
        py::arg("tol") = kDefaultHermitianTol);
  m.def(
      "von_neumann_entropy",
      [](const DensityMatrix& rho, const std::string& base) {
        return von_neumann_entropy(rho, base_from_string(base));
      },
      py::arg("rho"), py::arg("base") = "natural",
      "-sum lambda log lambda over the eigenvalues of rho.");
  m.def("check_projectivity", &check_projectivity, py::arg("family"),
        py::arg("observable"), py::arg("k_max"),
        py::arg("tol") = kDefaultResidualTol,
        py::arg("cap") = kDefaultAmplitudeCap,
        "Stability of the expectation under identity padding k = 0..k_max.");

  // --- built-in models ---
  m.def("ghz_family", &ghz_family, "The GHZ tensor family (d = 2, m = 2).");
  m.def(
      "projector_family",
      [](int mm, int d, const std::vector<Complex>& coefficients) {
        return projector_family(ProjectorFamilySpec{mm, d, coefficients});
      },
      py::arg("m"), py::arg("d"), py::arg("coefficients"),
      "Condition-satisfying family built from orthogonal projectors.");
  m.def(
      "ghz_expectation_closed_form",
      [](const std::vector<ComplexMatrix>& factors) {
        return ghz_expectation_closed_form(factors);
      },
      py::arg("factors"),
      "(1/2)(prod <0|X_k|0> + prod <1|X_k|1>); oracle for both engines.");

  // --- JSON interop (same wire formats as the CLI) ---
  m.def(
      "family_to_json",
      [](const MPSFamily& family, bool pretty) {
        return dump_json(to_json(family), pretty);
      },
      py::arg("family"), py::arg("pretty") = false);
  m.def(
      "family_from_json",
      [](const std::string& text) {
        return family_from_json(parse_json(text));
      },
      py::arg("text"));
  m.def(
      "observable_to_json",
      [](const LocalObservable& x, bool pretty) {
        return dump_json(to_json(x), pretty);
      },
      py::arg("observable"), py::arg("pretty") = false);
  m.def(
      "observable_from_json",
      [](const std::string& text) {
        return observable_from_json(parse_json(text));
      },
      py::arg("text"));

#ifdef MPSCHAIN_VERSION
  m.attr("__version__") = MPSCHAIN_VERSION;
#else
  m.attr("__version__") = "dev";
#endif
}
