#pragma once

#include "json.hpp"

#include "tokensign/eigen.hpp"
#include "tokensign/equivalence.hpp"
#include "tokensign/measures.hpp"
#include "tokensign/polynomial.hpp"
#include "tokensign/rational.hpp"
#include "tokensign/signed_graph.hpp"

namespace tokensign {

using Json = nlohmann::ordered_json;

Json to_json(const BigInt& x);
/// {"num": "...", "den": "...", "approx": 0.1234}
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
/// {"n": .., "m": .., "edges": [[u, v, s], ...]} with 1-based vertices.
Json to_json(const SignedGraph& g);
SignedGraph graph_from_json(const Json& j);
/// Array of +1/-1.
Json to_json(const SwitchingVector& s);
SwitchingVector switching_from_json(const Json& j);
Json to_json(const NegativeCycle& c);
Json to_json(const BalanceCertificate& c);
/// Rows of decimal strings.
Json to_json(const ExactMatrix& m);
Json to_json(const ExactPolynomial& p);
Json to_json(const Spectrum& s);
Json to_json(const FrustrationResult& f);
Json to_json(const UnbalanceResult& u);
Json to_json(const FrustrationBounds& b);
Json to_json(const ClassReport& c);
Json to_json(const SwitchingIsomorphism& s);
Json to_json(const ExplorerSample& s);
Json to_json(const ExplorerReport& r);

/// Recomputes a serialized explorer sample from its two graphs and k and
/// checks that every stored value, witness and statement outcome agrees.
bool recheck_explorer_sample(const Json& sample);

}  // namespace tokensign
