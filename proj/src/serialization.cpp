#include "tokensign/serialization.hpp"

#include "tokensign/error.hpp"
#include "tokensign/token.hpp"

namespace tokensign {

Json to_json(const BigInt& x) { return to_string(x); }

Json to_json(const Rational& r) {
  return Json{{"num", to_string(r.num())}, {"den", to_string(r.den())}, {"approx", r.to_double()}};
}

Rational rational_from_json(const Json& j) {
  try {
    return Rational(BigInt(j.at("num").get<std::string>()), BigInt(j.at("den").get<std::string>()));
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::MalformedInput, "bad rational in JSON");
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

Json to_json(const SignedGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u + 1, e.v + 1, to_int(e.sign)});
  return Json{{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

SignedGraph graph_from_json(const Json& j) {
  try {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      const int s = e.at(2).get<int>();
      if (s != 1 && s != -1) throw Error(ErrorCode::BadSignToken, "edge sign must be +1 or -1");
      edges.push_back({e.at(0).get<int>() - 1, e.at(1).get<int>() - 1, s > 0 ? Sign::positive : Sign::negative});
    }
    SignedGraph g(j.at("n").get<int>(), std::move(edges));
    if (j.contains("m") && j.at("m").get<int>() != g.size()) {
      throw Error(ErrorCode::HeaderMismatch, "declared edge count differs from the edge list");
    }
    return g;
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

Json to_json(const SwitchingVector& s) {
  Json out = Json::array();
  for (Sign x : s.values()) out.push_back(to_int(x));
  return out;
}

SwitchingVector switching_from_json(const Json& j) {
  try {
    return SwitchingVector::from_ints(j.get<std::vector<int>>());
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedInput, e.what());
  }
}

Json to_json(const NegativeCycle& c) {
  Json out = Json::array();
  for (Vertex v : c.vertices) out.push_back(v + 1);
  return out;
}

Json to_json(const BalanceCertificate& c) {
  if (c.balanced()) {
    Json plus = Json::array();
    for (Vertex v : c.switching().plus_set()) plus.push_back(v + 1);
    return Json{{"balanced", true}, {"switching", to_json(c.switching())}, {"switching_set", plus}};
  }
  return Json{{"balanced", false}, {"negative_cycle", to_json(c.witness())}};
}

Json to_json(const ExactMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const ExactPolynomial& p) {
  Json coeffs = Json::array();
  for (const BigInt& c : p.coefficients()) coeffs.push_back(to_string(c));
  return Json{{"coefficients", coeffs}, {"text", p.str()}};
}

Json to_json(const Spectrum& s) { return Json{{"eigenvalues", s.eigenvalues}, {"tolerance", s.tolerance}}; }

Json to_json(const FrustrationResult& f) {
  Json removed = Json::array();
  for (const Edge& e : f.removed_edges) removed.push_back({e.u + 1, e.v + 1, to_int(e.sign)});
  return Json{{"index", f.index}, {"witness", to_json(f.witness)}, {"removed_edges", removed}};
}

Json to_json(const UnbalanceResult& u) {
  Json plus = Json::array();
  Json sgn = Json::array();
  for (const auto& x : u.traces.unsigned_traces) plus.push_back(to_string(x));
  for (const auto& x : u.traces.signed_traces) sgn.push_back(to_string(x));
  return Json{{"ell", to_json(u.ell)},
              {"ell_n_minus_1", to_json(u.ell_n_minus_1)},
              {"ell_n", to_json(u.ell_n)},
              {"unsigned_traces", plus},
              {"signed_traces", sgn}};
}

Json to_json(const FrustrationBounds& b) {
  return Json{{"k", b.k},           {"base", b.base},
              {"token", b.token},   {"upper", b.upper},
              {"lower_holds", b.lower_holds}, {"upper_holds", b.upper_holds}};
}

Json to_json(const ClassReport& c) {
  return Json{{"label", c.label},
              {"class_size", c.class_size},
              {"frustration", c.frustration},
              {"unbalance", to_json(c.unbalance)},
              {"negation_class", c.negation_class},
              {"representative", to_json(c.representative)}};
}

Json to_json(const SwitchingIsomorphism& s) {
  Json perm = Json::array();
  for (Vertex v : s.permutation) perm.push_back(v + 1);
  return Json{{"permutation", perm}, {"switching", to_json(s.switching)}};
}

Json to_json(const ExplorerSample& s) {
  return Json{{"k", s.k},
              {"first", to_json(s.first)},
              {"second", to_json(s.second)},
              {"first_frustration", to_json(s.first_frustration)},
              {"second_frustration", to_json(s.second_frustration)},
              {"first_token_frustration", to_json(s.first_token_frustration)},
              {"second_token_frustration", to_json(s.second_token_frustration)},
              {"first_ell", to_json(s.first_ell)},
              {"second_ell", to_json(s.second_ell)},
              {"first_token_ell", to_json(s.first_token_ell)},
              {"second_token_ell", to_json(s.second_token_ell)},
              {"statement1", s.statement1},
              {"statement2", s.statement2},
              {"statement3", s.statement3}};
}

Json to_json(const ExplorerReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.counterexamples) samples.push_back(to_json(s));
  Json out{{"trials", r.trials_run},
           {"seed", r.options.seed},
           {"n_min", r.options.n_min},
           {"n_max", r.options.n_max},
           {"k", r.options.k},
           {"balanced_only", r.options.balanced_only},
           {"statement1_violations", r.statement1_violations},
           {"statement2_violations", r.statement2_violations},
           {"statement3_violations", r.statement3_violations},
           {"max_ell", to_json(r.max_ell)},
           {"max_ell_graph", r.max_ell_graph ? to_json(*r.max_ell_graph) : Json()},
           {"counterexamples", samples}};
  return out;
}

namespace {

bool witness_ok(const SignedGraph& g, const Json& stored, int index) {
  const SwitchingVector w = switching_from_json(stored.at("witness"));
  if (w.size() != g.order() || stored.at("index").get<int>() != index) return false;
  return apply_switching(g, w).negative_edges() == index;
}

}  // namespace

bool recheck_explorer_sample(const Json& sample) {
  const SignedGraph first = graph_from_json(sample.at("first"));
  const SignedGraph second = graph_from_json(sample.at("second"));
  const ExplorerSample s = evaluate_pair(first, second, sample.at("k").get<int>());
  if (!(s.first == first && s.second == second)) return false;
  const SignedGraph f1 = token_graph(first, s.k).graph;
  const SignedGraph f2 = token_graph(second, s.k).graph;
  return witness_ok(first, sample.at("first_frustration"), s.first_frustration.index) &&
         witness_ok(second, sample.at("second_frustration"), s.second_frustration.index) &&
         witness_ok(f1, sample.at("first_token_frustration"), s.first_token_frustration.index) &&
         witness_ok(f2, sample.at("second_token_frustration"), s.second_token_frustration.index) &&
         rational_from_json(sample.at("first_ell")) == s.first_ell &&
         rational_from_json(sample.at("second_ell")) == s.second_ell &&
         rational_from_json(sample.at("first_token_ell")) == s.first_token_ell &&
         rational_from_json(sample.at("second_token_ell")) == s.second_token_ell &&
         sample.at("statement1").get<bool>() == s.statement1 && sample.at("statement2").get<bool>() == s.statement2 &&
         sample.at("statement3").get<bool>() == s.statement3;
}

}  // namespace tokensign
