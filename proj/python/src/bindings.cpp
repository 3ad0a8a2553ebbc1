#include <optional>
#include <string>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "micpovm/coherent.hpp"
#include "micpovm/error.hpp"
#include "micpovm/frame.hpp"
#include "micpovm/json_io.hpp"
#include "micpovm/povm.hpp"
#include "micpovm/tomography.hpp"

namespace py = pybind11;
using namespace micpovm;

namespace {

std::vector<HermitianOperator> to_ops(const std::vector<ComplexMatrix>& ms) {
  std::vector<HermitianOperator> out;
  out.reserve(ms.size());
  for (const auto& m : ms) out.emplace_back(m);
  return out;
}

std::vector<ComplexMatrix> to_mats(const std::vector<HermitianOperator>& ops) {
  std::vector<ComplexMatrix> out;
  out.reserve(ops.size());
  for (const auto& op : ops) out.push_back(op.matrix());
  return out;
}

Direction to_direction(const std::vector<double>& v) {
  if (v.size() != 3) throw Error(ErrorKind::MalformedInput, "a direction has three components");
  return Direction(v[0], v[1], v[2]);
}

py::dict report_dict(const PovmReport& r) {
  py::dict d;
  d["dim"] = r.dim;
  d["element_count"] = r.element_count;
  d["completeness_residual"] = r.completeness_residual;
  d["min_element_eigenvalue"] = r.min_element_eigenvalue;
  d["gram_condition"] = r.gram_condition;
  d["complete"] = r.complete;
  d["positive"] = r.positive;
  d["informationally_complete"] = r.informationally_complete;
  d["sic"] = r.sic;
  d["element_ranks"] = r.element_ranks;
  d["sic_overlap_deviation"] = r.sic_overlap_deviation;
  d["duality_residual"] = r.duality_residual;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Minimal informationally complete POVMs";

  static py::exception<Error> error(m, "MicpovmError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(std::string(e.name()), std::string(e.what()));
      PyErr_SetObject(error.ptr(), args.ptr());
    }
  });

  m.def("eig_hermitian", [](const ComplexMatrix& h) {
    const auto e = eig_hermitian(HermitianOperator(h));
    return py::make_tuple(e.eigenvalues, e.eigenvectors);
  }, py::arg("h"), "Ascending eigenvalues and eigenvectors of a Hermitian matrix.");

  m.def("coherent_state", [](const std::vector<double>& n, int d) {
    return coherent_state(to_direction(n), d).amplitudes();
  }, py::arg("n"), py::arg("dim"));
  m.def("sample_directions", [](int count, std::uint64_t seed) {
    std::vector<std::vector<double>> out;
    for (const auto& n : sample_directions(count, seed)) out.push_back({n.x(), n.y(), n.z()});
    return out;
  }, py::arg("count"), py::arg("seed"));
  m.def("resolution_of_identity_mc", &resolution_of_identity_mc, py::arg("dim"), py::arg("samples"),
        py::arg("seed"));

  m.def("build_frame", [](const std::vector<ComplexMatrix>& ops) {
    const auto f = build_frame(to_ops(ops));
    py::dict d;
    d["gram"] = f.gram();
    d["gram_inverse"] = f.gram_inverse();
    d["duals"] = to_mats(f.duals());
    d["condition_number"] = f.condition_number();
    return d;
  }, py::arg("operators"));

  py::class_<Povm>(m, "Povm")
      .def_readonly("dim", &Povm::dim)
      .def_property_readonly("elements", [](const Povm& p) { return to_mats(p.elements); })
      .def_property_readonly("duals", [](const Povm& p) -> std::optional<std::vector<ComplexMatrix>> {
        if (!p.duals) return std::nullopt;
        return to_mats(*p.duals);
      })
      .def_property_readonly("method", [](const Povm& p) { return p.meta.method; })
      .def_property_readonly("shift", [](const Povm& p) { return p.meta.shift; })
      .def("to_json", [](const Povm& p) { return json::dump(json::from_povm(p)); })
      .def_static("from_json", [](const std::string& s) { return json::to_povm(json::parse(s)); });

  m.def("cfs_construct", [](const std::vector<ComplexMatrix>& f, std::optional<std::vector<double>> w) {
    return cfs_construct(to_ops(f), std::move(w));
  }, py::arg("operators"), py::arg("weights") = py::none());
  m.def("evr_primal_construct", [](const std::vector<ComplexMatrix>& ops) {
    return evr_primal_construct(build_frame(to_ops(ops)));
  }, py::arg("operators"));
  m.def("evr_dual_construct", [](const std::vector<ComplexMatrix>& ops) {
    return evr_dual_construct(build_frame(to_ops(ops)));
  }, py::arg("operators"));
  m.def("general_construct", [](const std::vector<ComplexMatrix>& k, const std::string& mode,
                                const std::string& side) {
    return general_construct(to_ops(k), parse_mode(mode), parse_side(side));
  }, py::arg("operators"), py::arg("mode") = "extremal", py::arg("side") = "primal");
  m.def("preset_tetrahedral", &preset_tetrahedral);
  m.def("preset_generic_qubit", [](const std::vector<double>& a, const std::vector<double>& b,
                                   const std::vector<double>& c) {
    return preset_generic_qubit(to_direction(a), to_direction(b), to_direction(c));
  }, py::arg("n1"), py::arg("n2"), py::arg("n3"));
  m.def("preset_discrimination", &preset_discrimination);
  m.def("verify", [](const Povm& p, double tol) { return report_dict(verify(p, tol)); }, py::arg("povm"),
        py::arg("tol") = 1e-8);

  m.def("random_density", [](int d, std::optional<int> rank, std::uint64_t seed) {
    return random_density(d, rank, seed).matrix().matrix();
  }, py::arg("dim"), py::arg("rank") = py::none(), py::arg("seed") = 0);
  m.def("probabilities", [](const ComplexMatrix& rho, const Povm& p) {
    return probabilities(DensityMatrix(HermitianOperator(rho)), p);
  }, py::arg("rho"), py::arg("povm"));
  m.def("sample_outcomes", [](const std::vector<double>& probs, long long shots, std::uint64_t seed) {
    return sample_outcomes(probs, shots, seed);
  }, py::arg("probs"), py::arg("shots"), py::arg("seed"));
  m.def("reconstruct", [](const std::vector<double>& freqs, const Povm& p) {
    return reconstruct(freqs, p).matrix();
  }, py::arg("freqs"), py::arg("povm"));
  m.def("fidelity", [](const ComplexMatrix& a, const ComplexMatrix& b) {
    return fidelity(DensityMatrix(HermitianOperator(a)), DensityMatrix(HermitianOperator(b)));
  }, py::arg("rho"), py::arg("sigma"));
  m.def("run_tomography", [](const ComplexMatrix& rho, const Povm& p, std::optional<long long> shots,
                             std::uint64_t seed) {
    const auto r = run_tomography(DensityMatrix(HermitianOperator(rho)), p, shots, seed);
    py::dict d;
    d["probabilities"] = r.probabilities;
    d["counts"] = r.counts;
    d["reconstructed"] = r.reconstructed.matrix();
    d["fidelity"] = r.fidelity;
    d["trace_distance"] = r.trace_distance;
    d["psd_clip"] = r.psd_clip;
    d["shots"] = r.shots;
    d["seed"] = r.seed;
    return d;
  }, py::arg("rho"), py::arg("povm"), py::arg("shots") = py::none(), py::arg("seed") = 0);
}
