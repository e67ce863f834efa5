#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tokensign/eigen.hpp"
#include "tokensign/equivalence.hpp"
#include "tokensign/error.hpp"
#include "tokensign/families.hpp"
#include "tokensign/measures.hpp"
#include "tokensign/polynomial.hpp"
#include "tokensign/serialization.hpp"
#include "tokensign/tables.hpp"
#include "tokensign/token.hpp"
#include "tokensign/verify.hpp"

namespace py = pybind11;
using namespace tokensign;

namespace {

py::object fraction(const Rational& r) {
  // Leaked on purpose: must outlive interpreter shutdown.
  static auto* cls = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*cls)(py::int_(py::str(to_string(r.num()))), py::int_(py::str(to_string(r.den()))));
}

py::int_ big(const BigInt& x) { return py::int_(py::str(to_string(x))); }

py::object json_to_py(const Json& j) {
  static auto* loads = new py::object(py::module_::import("json").attr("loads"));
  return (*loads)(j.dump());
}

SignedGraph make_graph(int n, const std::vector<std::tuple<int, int, int>>& edges) {
  std::vector<Edge> out;
  for (const auto& [u, v, s] : edges) {
    if (s != 1 && s != -1) throw Error(ErrorCode::BadSignToken, "sign must be +1 or -1");
    out.push_back({u - 1, v - 1, s > 0 ? Sign::positive : Sign::negative});
  }
  return SignedGraph(n, std::move(out));
}

std::vector<std::tuple<int, int, int>> edge_list(const SignedGraph& g) {
  std::vector<std::tuple<int, int, int>> out;
  for (const Edge& e : g.edges()) out.emplace_back(e.u + 1, e.v + 1, to_int(e.sign));
  return out;
}

std::vector<int> signs(const SwitchingVector& s) {
  std::vector<int> out;
  for (Sign x : s.values()) out.push_back(to_int(x));
  return out;
}

SwitchingVector switching_arg(const SignedGraph& g, const std::vector<int>& plus_set) {
  std::vector<Vertex> zero_based;
  for (int v : plus_set) zero_based.push_back(v - 1);
  return SwitchingVector::from_set(g.order(), zero_based);
}

}  // namespace

PYBIND11_MODULE(_tokensign, m) {
  m.doc() = "Signed graphs, k-token graphs, frustration and spectral unbalance";

  static py::handle error_type = py::exception<Error>(m, "TokensignError").release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = error_type(py::str(e.what()));
      err.attr("name") = py::str(std::string(e.name()));
      PyErr_SetObject(error_type.ptr(), err.ptr());
    }
  });

  py::class_<SignedGraph>(m, "SignedGraph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
           "Edges are (u, v, sign) with 1-based vertices and sign +1 or -1.")
      .def_static("parse", [](const std::string& text) { return parse_graph(text); })
      .def_property_readonly("n", &SignedGraph::order)
      .def_property_readonly("m", &SignedGraph::size)
      .def_property_readonly("negative_edges", &SignedGraph::negative_edges)
      .def_property_readonly("edges", &edge_list)
      .def("to_text", [](const SignedGraph& g) { return write_graph(g); })
      .def("__eq__", [](const SignedGraph& a, const SignedGraph& b) { return a == b; })
      .def("__repr__", [](const SignedGraph& g) {
        return "SignedGraph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("family", [](const std::string& name, int n) { return family(name, n); }, py::arg("name"), py::arg("n"));
  m.def("family_names", &family_names);
  m.def("example", [](const std::string& name) {
    auto g = gallery::by_name(name);
    if (!g) throw Error(ErrorCode::UnknownFamily, name);
    return *g;
  });
  m.def("with_mask", [](const SignedGraph& g, const std::string& bits) { return apply_edge_mask(g, bits); });

  m.def("is_balanced", &is_balanced);
  m.def(
      "balance_check",
      [](const SignedGraph& g) -> py::tuple {
        const BalanceCertificate c = balance_check(g);
        if (c.balanced()) return py::make_tuple(true, signs(c.switching()));
        std::vector<int> cycle;
        for (Vertex v : c.witness().vertices) cycle.push_back(v + 1);
        return py::make_tuple(false, cycle);
      },
      "(True, switching) or (False, negative cycle with 1-based vertices).");
  m.def("switch", [](const SignedGraph& g, const std::vector<int>& plus_set) {
    return apply_switching(g, switching_arg(g, plus_set));
  }, py::arg("graph"), py::arg("plus_set"));
  m.def("negate", &negate);
  m.def("complement", &signed_complement);

  m.def("token_graph", [](const SignedGraph& g, int k, long cap) { return token_graph(g, k, cap).graph; },
        py::arg("graph"), py::arg("k"), py::arg("cap") = kDefaultTokenCap);
  m.def("token_subsets", [](int n, int k) {
    const SubsetIndex idx(n, k);
    std::vector<std::vector<int>> out;
    for (long r = 0; r < idx.size(); ++r) {
      std::vector<int> s;
      for (Vertex v : idx.unrank(r)) s.push_back(v + 1);
      out.push_back(std::move(s));
    }
    return out;
  });
  m.def("signed_binomial_matrix", [](const SignedGraph& g, int k1, int k2) {
    return signed_binomial_matrix(g, k1, k2).entries;
  });

  m.def("char_poly", [](const SignedGraph& g, const std::string& which) {
    const ExactMatrix a = which == "laplacian" ? laplacian(g) : adjacency(g);
    std::vector<py::int_> coeffs;
    const ExactPolynomial p = char_poly(a);
    for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(big(p.coefficient(i)));
    return coeffs;
  }, py::arg("graph"), py::arg("matrix") = "adjacency", "Coefficients, constant term first.");
  m.def("eigenvalues", [](const SignedGraph& g, const std::string& which) {
    return eigenvalues_symmetric(which == "laplacian" ? laplacian(g) : adjacency(g)).eigenvalues;
  }, py::arg("graph"), py::arg("matrix") = "adjacency");

  m.def("frustration_index", [](const SignedGraph& g, int max_vertices) {
    const FrustrationResult f = frustration_index(g, max_vertices);
    return py::make_tuple(f.index, signs(f.witness));
  }, py::arg("graph"), py::arg("max_vertices") = kDefaultFrustrationGuard);
  m.def("unbalance_level", [](const SignedGraph& g) { return fraction(unbalance_level(g).ell); });
  m.def("unbalance_level_m", [](const SignedGraph& g, int mm) { return fraction(unbalance_level_m(g, mm)); });
  m.def("frustration_bounds", [](const SignedGraph& g, int k) {
    const FrustrationBounds b = check_frustration_bounds(g, k);
    return py::make_tuple(b.base, b.token, b.upper);
  });

  m.def("switching_equivalent", [](const SignedGraph& a, const SignedGraph& b) -> py::object {
    auto s = switching_equivalent(a, b);
    if (!s) return py::none();
    return py::cast(signs(*s));
  });
  m.def("canonical_signature", &canonical_signature);
  m.def("switching_isomorphism", [](const SignedGraph& a, const SignedGraph& b) -> py::object {
    auto c = switching_isomorphism(a, b);
    if (!c) return py::none();
    std::vector<int> perm;
    for (Vertex v : c->permutation) perm.push_back(v + 1);
    return py::make_tuple(perm, signs(c->switching));
  });
  m.def("is_sign_symmetric", [](const SignedGraph& g) { return is_sign_symmetric(g).symmetric; });
  m.def("switching_iso_classes", [](const SignedGraph& g) {
    py::list out;
    for (const auto& c : enumerate_switching_iso_classes(g)) {
      py::dict d;
      d["label"] = c.label;
      d["class_size"] = c.class_size;
      d["frustration"] = c.frustration;
      d["unbalance"] = fraction(c.unbalance);
      d["representative"] = c.representative;
      out.append(d);
    }
    return out;
  });

  m.def("claim_ids", &claim_ids);
  m.def("verify_sweep", [](const std::vector<std::string>& claims, int trials, std::uint64_t seed) {
    SweepOptions o;
    o.trials = trials;
    o.seed = seed;
    py::dict out;
    for (const auto& s : run_sweep(claims, o)) out[py::str(s.claim_id)] = py::make_tuple(s.passed, s.failed);
    return out;
  }, py::arg("claims"), py::arg("trials") = 100, py::arg("seed") = 0);
  m.def("table", [](const std::string& name, int n_min, int n_max) {
    return json_to_py(to_json(table_by_name(name, n_min, n_max)));
  }, py::arg("name"), py::arg("n_min") = 0, py::arg("n_max") = 15);
  m.def("to_json", [](const SignedGraph& g) { return json_to_py(to_json(g)); });
}
