#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "onepmac/coherence.hpp"
#include "onepmac/errors.hpp"
#include "onepmac/interference.hpp"
#include "onepmac/io.hpp"
#include "onepmac/polytope.hpp"
#include "onepmac/strategies.hpp"
#include "onepmac/vertices.hpp"
#include "onepmac/violation.hpp"

namespace py = pybind11;
using namespace onepmac;

namespace {

py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(to_string(q));
}

py::list fractions(const RationalVector& v) {
  py::list out;
  for (const auto& x : v) out.append(fraction(x));
  return out;
}

// Accepts floats, ints, Fractions or "p/q" strings; floats are rationalized.
RationalVector rationals(const py::sequence& seq) {
  RationalVector out;
  for (const auto& item : seq) {
    if (py::isinstance<py::str>(item)) {
      out.push_back(parse_rational(item.cast<std::string>()));
    } else if (py::isinstance<py::int_>(item)) {
      out.push_back(parse_rational(py::str(item).cast<std::string>()));
    } else if (py::hasattr(item, "numerator") && py::hasattr(item, "denominator") &&
               !py::isinstance<py::float_>(item)) {
      out.push_back(parse_rational(py::str(item.attr("numerator")).cast<std::string>() + "/" +
                                   py::str(item.attr("denominator")).cast<std::string>()));
    } else {
      out.push_back(rationalize(item.cast<double>()));
    }
  }
  return out;
}

py::dict facet_dict(const Facet& f) {
  py::dict d;
  d["normal"] = fractions(f.normal);
  d["offset"] = fraction(f.offset);
  return d;
}

py::dict census_dict(int N, int K) {
  const CensusReport r = facet_census(AlphabetSpec::binary(N), K);
  py::dict d;
  d["vertices"] = r.vertex_count;
  d["dim"] = r.dim;
  d["facets"] = r.facet_count;
  d["positivity"] = r.positivity_count;
  d["nontrivial_classes"] = r.nontrivial_classes();
  py::list classes;
  for (const auto& c : r.classes) {
    py::dict cd = facet_dict(c.representative);
    cd["orbit_size"] = c.orbit.size();
    cd["is_positivity"] = c.positivity;
    classes.append(cd);
  }
  d["classes"] = classes;
  return d;
}

py::dict membership_dict(const Mac& mac, int K) {
  std::vector<RationalVector> vertices;
  for (const auto& v : enumerate_vertices(mac.alphabets(), K))
    vertices.push_back(to_rational_vector(v.probs()));
  const MembershipResult r = lp_membership(to_rational_vector(mac.probs()), vertices);
  py::dict d;
  d["member"] = r.member;
  if (r.member)
    d["weights"] = fractions(r.weights);
  else
    d["separator"] = facet_dict(r.separator);
  return d;
}

py::dict witness_dict(const WitnessReport& w) {
  py::dict d;
  d["K"] = w.K;
  d["crk"] = w.crk;
  d["parties"] = w.parties;
  d["phases"] = w.phases;
  d["trace_norm"] = w.trace_norm;
  d["delta"] = w.delta;
  d["lhs"] = w.lhs;
  d["certified"] = w.certified;
  return d;
}

}  // namespace

PYBIND11_MODULE(_onepmac, m) {
  m.doc() = "Single-particle multiple-access channels: polytopes, violations and coherence witnesses.";

  py::register_exception<Error>(m, "OnepmacError", PyExc_ValueError);

  py::class_<AlphabetSpec>(m, "AlphabetSpec")
      .def(py::init<std::vector<int>, int>(), py::arg("input_sizes"), py::arg("output_size"))
      .def_static("binary", &AlphabetSpec::binary, py::arg("parties"))
      .def_readonly("input_sizes", &AlphabetSpec::input_sizes)
      .def_readonly("output_size", &AlphabetSpec::output_size)
      .def("parties", &AlphabetSpec::parties)
      .def("num_inputs", &AlphabetSpec::num_inputs)
      .def("num_transitions", &AlphabetSpec::num_transitions)
      .def("__repr__", &AlphabetSpec::describe);

  py::class_<Mac>(m, "Mac")
      .def(py::init<AlphabetSpec, std::vector<double>, double>(), py::arg("alphabets"),
           py::arg("probs"), py::arg("tol") = Tolerances{}.validation)
      .def_property_readonly("alphabets", &Mac::alphabets)
      .def_property_readonly("probs", &Mac::probs)
      .def("prob", [](const Mac& mac, int b, std::vector<int> inputs) { return mac.prob(b, inputs); },
           py::arg("b"), py::arg("inputs"))
      .def("to_json", [](const Mac& mac) { return to_json(mac).dump(); })
      .def_static("from_json", [](const std::string& text) {
        return mac_from_json(parse_json_text(text, "<string>"));
      });

  m.def("constant_mac", &constant_mac, py::arg("alphabets"), py::arg("b"));
  m.def("deterministic_mac",
        [](const AlphabetSpec& alph, std::vector<int> table) { return deterministic_mac(alph, table); },
        py::arg("alphabets"), py::arg("table"));
  m.def("mix", [](std::vector<Mac> macs, std::vector<double> w) { return mix(macs, w); },
        py::arg("macs"), py::arg("weights"));

  m.def("interference_I2", &interference_I2, py::arg("mac"), py::arg("i"), py::arg("j"));
  m.def("interference_IK",
        [](const Mac& mac, std::vector<int> S, std::vector<int> context, std::vector<int> alphas, int b) {
          return interference_IK(mac, S, context, alphas, b);
        },
        py::arg("mac"), py::arg("S"), py::arg("context"), py::arg("alphas") = std::vector<int>{},
        py::arg("b") = 0);
  m.def("max_interference_IK",
        [](const Mac& mac, std::vector<int> S) { return max_interference_IK(mac, S); },
        py::arg("mac"), py::arg("S"));
  m.def("is_separable", [](const Mac& mac, double tol) { return is_separable(mac, {1e-12, tol}); },
        py::arg("mac"), py::arg("tol") = Tolerances{}.interference);
  m.def("interference_coords", [](const Mac& mac) { return to_interference_coords(mac).values; },
        py::arg("mac"), "Interference coordinates in the transition-tensor layout.");
  m.def("from_interference_coords",
        [](const AlphabetSpec& alph, std::vector<double> values) {
          return from_interference_coords({alph, std::move(values)});
        },
        py::arg("alphabets"), py::arg("values"));

  m.def("enumerate_vertices", py::overload_cast<int, int>(&enumerate_vertices), py::arg("N"),
        py::arg("K"));
  m.def("affine_dimension", [](const std::vector<Mac>& macs) { return affine_dimension(macs); },
        py::arg("macs"));
  m.def("hull_dimension", &deterministic_hull_dimension, py::arg("alphabets"), py::arg("K"),
        "Affine dimension of the deterministic K-local MACs (streamed).");
  m.def("census", &census_dict, py::arg("N"), py::arg("K"));
  m.def("membership", &membership_dict, py::arg("mac"), py::arg("K"));
  m.def("lp_membership",
        [](const py::sequence& point, const std::vector<py::sequence>& vertices) {
          std::vector<RationalVector> vs;
          for (const auto& v : vertices) vs.push_back(rationals(v));
          const MembershipResult r = lp_membership(rationals(point), vs);
          py::dict d;
          d["member"] = r.member;
          if (r.member)
            d["weights"] = fractions(r.weights);
          else
            d["separator"] = facet_dict(r.separator);
          return d;
        },
        py::arg("point"), py::arg("vertices"));

  m.def("fingerprint_value",
        [](const Mac& mac, int K) {
          return eval_inequality(fingerprint_inequality(mac.parties(), K), mac);
        },
        py::arg("mac"), py::arg("K"),
        "Left-hand side of the (N,K) fingerprinting inequality with bound K+1.");

  m.def("equal_superposition", [](int N) { return equal_superposition(N).matrix(); }, py::arg("N"));
  m.def("build_M", [](int N, std::vector<double> phases) { return build_M(N, phases); },
        py::arg("N"), py::arg("phases"));
  m.def("build_M3", &build_M3, py::arg("N"), py::arg("phi"));
  m.def("trace_norm", [](const CMatrix& a) { return trace_norm(a); }, py::arg("matrix"));
  m.def("hermitian_eigenvalues", [](const CMatrix& a) { return hermitian_eigenvalues(a); },
        py::arg("matrix"));
  m.def("violation_delta", &violation_delta, py::arg("N"), py::arg("phi"));
  m.def("max_violation", [](int N) {
    const auto v = max_violation(N);
    return py::make_tuple(v.delta, v.phi);
  }, py::arg("N"));
  m.def("helstrom_lhs", [](int N, std::vector<double> phases) { return helstrom_lhs(N, phases); },
        py::arg("N"), py::arg("phases"));
  m.def("violation_report", [](int N) { return to_json(violation_report(N)).dump(); },
        py::arg("N"), "ViolationReport as a JSON string.");
  m.def("i2_max_for_state",
        [](const CMatrix& rho, int i, int j) { return i2_max_for_state(OneParticleState(rho), i, j).value; },
        py::arg("rho"), py::arg("i"), py::arg("j"));
  m.def("phase_encoded_mac",
        [](const CMatrix& rho, std::vector<std::vector<double>> phases, const CVector& projector) {
          return generate_mac(OneParticleState(rho), phase_encoder(phases), Povm::projective(projector));
        },
        py::arg("rho"), py::arg("phases"), py::arg("projector"),
        "MAC of a phase encoding decoded by the projector onto `projector` (outcome 0).");

  m.def("coherence_rank", [](const CVector& psi, double tol) { return coherence_rank(psi, tol); },
        py::arg("psi"), py::arg("tol") = 1e-9);
  m.def("comparison_matrix_test", [](const CMatrix& rho) {
    const auto t = comparison_matrix_test(OneParticleState(rho));
    return py::make_tuple(t.trace_norm, t.coherent);
  }, py::arg("rho"));
  m.def("pure_state_witness",
        [](const CVector& psi, int K, double tol) { return witness_dict(pure_state_witness(psi, K, tol)); },
        py::arg("psi"), py::arg("K"), py::arg("crk_tol") = 1e-9);
  m.def("ensemble_game_value",
        [](const CMatrix& rho, int K) { return ensemble_game_value(OneParticleState(rho), K); },
        py::arg("rho"), py::arg("K"));
  m.def("ensemble_game_threshold", &ensemble_game_threshold, py::arg("K"));
  m.def("phase_scan_witness",
        [](const CMatrix& rho, int resolution) {
          PhaseScanResult r;
          {
            py::gil_scoped_release release;
            r = phase_scan_witness(OneParticleState(rho), resolution);
          }
          py::dict d;
          d["maxima"] = r.maxima;
          d["bounds"] = r.bounds;
          d["argmax"] = r.argmax;
          d["resolution"] = r.resolution;
          return d;
        },
        py::arg("rho"), py::arg("resolution") = 200);
}
