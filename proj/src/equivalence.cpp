#include "tokensign/equivalence.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "tokensign/error.hpp"
#include "tokensign/families.hpp"
#include "tokensign/measures.hpp"

namespace tokensign {

std::vector<Sign> CotreeSignature::cotree_signs() const {
  std::vector<Sign> out;
  out.reserve(cotree.size());
  for (const Edge& e : cotree) out.push_back(e.sign);
  return out;
}

CotreeSignature cotree_signature(const SignedGraph& g) {
  const SpanningForest f = spanning_forest(g);
  std::vector<Sign> t(static_cast<std::size_t>(g.order()), Sign::positive);
  for (Vertex v : f.preorder) {
    const Vertex p = f.parent[static_cast<std::size_t>(v)];
    if (p >= 0) t[static_cast<std::size_t>(v)] = t[static_cast<std::size_t>(p)] * *g.sign(p, v);
  }
  CotreeSignature sig;
  sig.forest = f.tree_edges;
  sig.normalizer = SwitchingVector(std::move(t));
  for (Edge e : f.cotree_edges) {
    e.sign = sig.normalizer[e.u] * e.sign * sig.normalizer[e.v];
    sig.cotree.push_back(e);
  }
  return sig;
}

std::optional<SwitchingVector> switching_equivalent(const SignedGraph& g1, const SignedGraph& g2) {
  if (!g1.same_underlying(g2)) throw Error(ErrorCode::UnderlyingMismatch, "graphs have different underlying graphs");
  const CotreeSignature a = cotree_signature(g1);
  const CotreeSignature b = cotree_signature(g2);
  if (a.cotree != b.cotree) return std::nullopt;
  return a.normalizer * b.normalizer;
}

namespace {

using Cells = std::vector<std::vector<Vertex>>;

struct Search {
  Search(const SignedGraph& graph, long cap)
      : g(graph), n(graph.order()), adj(static_cast<std::size_t>(graph.order()), 0), leaf_cap(cap) {
    for (const Edge& e : g.edges()) {
      adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
      adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }
  }

  const SignedGraph& g;
  int n;
  std::vector<std::uint64_t> adj;
  long leaf_cap;
  long leaves = 0;
  bool have_best = false;
  std::string best_adj;
  std::string best_cotree;
  std::vector<Vertex> best_labeling;

  // Split cells by neighbor counts into every cell until stable.
  void refine(Cells& cells) const {
    std::vector<int> cell_of(static_cast<std::size_t>(n));
    while (true) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        for (Vertex v : cells[c]) cell_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
      }
      Cells next;
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<int>, Vertex>> keyed;
        for (Vertex v : cell) {
          std::vector<int> counts(cells.size(), 0);
          std::uint64_t nb = adj[static_cast<std::size_t>(v)];
          while (nb != 0) {
            ++counts[static_cast<std::size_t>(cell_of[static_cast<std::size_t>(std::countr_zero(nb))])];
            nb &= nb - 1;
          }
          keyed.emplace_back(std::move(counts), v);
        }
        std::sort(keyed.begin(), keyed.end());
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
      }
      const bool stable = next.size() == cells.size();
      cells = std::move(next);
      if (stable) return;
    }
  }

  void leaf(const Cells& cells) {
    if (++leaves > leaf_cap) {
      throw Error(ErrorCode::TooLarge, "canonical labeling search exceeded " + std::to_string(leaf_cap) + " leaves");
    }
    std::vector<Vertex> labeling(static_cast<std::size_t>(n));
    for (std::size_t c = 0; c < cells.size(); ++c) labeling[static_cast<std::size_t>(cells[c][0])] = static_cast<Vertex>(c);
    std::vector<Vertex> inverse(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) inverse[static_cast<std::size_t>(labeling[static_cast<std::size_t>(v)])] = v;
    std::string adj_bits;
    adj_bits.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
    for (Vertex i = 0; i < n; ++i) {
      const std::uint64_t row = adj[static_cast<std::size_t>(inverse[static_cast<std::size_t>(i)])];
      for (Vertex j = i + 1; j < n; ++j) adj_bits += (row >> inverse[static_cast<std::size_t>(j)]) & 1 ? '1' : '0';
    }
    if (have_best && adj_bits > best_adj) return;
    const CotreeSignature sig = cotree_signature(relabel(g, labeling));
    std::string cot;
    cot.reserve(sig.cotree.size());
    for (const Edge& e : sig.cotree) cot += e.sign == Sign::negative ? '1' : '0';
    if (!have_best || adj_bits < best_adj || cot < best_cotree) {
      have_best = true;
      best_adj = std::move(adj_bits);
      best_cotree = std::move(cot);
      best_labeling = std::move(labeling);
    }
  }

  void search(Cells cells) {
    refine(cells);
    if (static_cast<int>(cells.size()) == n) {
      leaf(cells);
      return;
    }
    // First smallest non-singleton cell.
    std::size_t target = cells.size();
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if (cells[c].size() > 1 && (target == cells.size() || cells[c].size() < cells[target].size())) target = c;
    }
    for (Vertex v : cells[target]) {
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c != target) {
          child.push_back(cells[c]);
          continue;
        }
        child.push_back({v});
        std::vector<Vertex> rest;
        for (Vertex w : cells[c]) {
          if (w != v) rest.push_back(w);
        }
        child.push_back(std::move(rest));
      }
      search(std::move(child));
    }
  }
};

// Negative triangles through each vertex; invariant under switching.
std::vector<int> negative_triangles(const SignedGraph& g) {
  std::vector<int> count(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : g.edges()) {
    for (const Neighbor& nb : g.neighbors(e.u)) {
      if (nb.vertex <= e.v) continue;
      const auto third = g.sign(e.v, nb.vertex);
      if (third && e.sign * nb.sign * *third == Sign::negative) {
        ++count[static_cast<std::size_t>(e.u)];
        ++count[static_cast<std::size_t>(e.v)];
        ++count[static_cast<std::size_t>(nb.vertex)];
      }
    }
  }
  return count;
}

}  // namespace

CanonicalForm canonical_form(const SignedGraph& g, int max_vertices, long leaf_cap) {
  const int n = g.order();
  if (n > std::min(max_vertices, 64)) {
    throw Error(ErrorCode::TooLarge, "canonical labeling limited to " + std::to_string(std::min(max_vertices, 64)) +
                                         " vertices, got " + std::to_string(n));
  }
  Search s(g, leaf_cap);
  CanonicalForm out;
  if (n == 0) {
    out.key = "0;;";
    return out;
  }
  const std::vector<int> colors = negative_triangles(g);
  std::map<int, std::vector<Vertex>> by_color;
  for (Vertex v = 0; v < n; ++v) by_color[colors[static_cast<std::size_t>(v)]].push_back(v);
  Cells start;
  for (auto& [color, cell] : by_color) start.push_back(std::move(cell));
  s.search(std::move(start));

  out.labeling = s.best_labeling;
  out.leaves = s.leaves;
  const SignedGraph relabeled = relabel(g, out.labeling);
  out.switching = cotree_signature(relabeled).normalizer;
  out.graph = apply_switching(relabeled, out.switching);
  out.key = std::to_string(n) + ";" + s.best_adj + ";" + s.best_cotree;
  return out;
}

std::string canonical_signature(const SignedGraph& g) { return canonical_form(g).key; }

std::optional<SwitchingIsomorphism> switching_isomorphism(const SignedGraph& g, const CanonicalForm& cg,
                                                          const SignedGraph& h, const CanonicalForm& ch) {
  if (cg.key != ch.key || g.order() != h.order()) return std::nullopt;
  const int n = g.order();
  std::vector<Vertex> inverse_h(static_cast<std::size_t>(n));
  for (Vertex w = 0; w < n; ++w) inverse_h[static_cast<std::size_t>(ch.labeling[static_cast<std::size_t>(w)])] = w;
  SwitchingIsomorphism cert;
  cert.permutation.resize(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    cert.permutation[static_cast<std::size_t>(v)] =
        inverse_h[static_cast<std::size_t>(cg.labeling[static_cast<std::size_t>(v)])];
  }
  const SwitchingVector t = cg.switching * ch.switching;
  std::vector<Sign> s(static_cast<std::size_t>(n));
  for (Vertex w = 0; w < n; ++w) s[static_cast<std::size_t>(w)] = t[ch.labeling[static_cast<std::size_t>(w)]];
  cert.switching = SwitchingVector(std::move(s));
  return cert;
}

std::optional<SwitchingIsomorphism> switching_isomorphism(const SignedGraph& g, const SignedGraph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  return switching_isomorphism(g, canonical_form(g), h, canonical_form(h));
}

bool check_switching_isomorphism(const SignedGraph& g, const SignedGraph& h, const SwitchingIsomorphism& cert) {
  if (g.order() != h.order() || static_cast<int>(cert.permutation.size()) != g.order() ||
      cert.switching.size() != g.order()) {
    return false;
  }
  std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
  for (Vertex v : cert.permutation) {
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = true;
  }
  return apply_switching(relabel(g, cert.permutation), cert.switching) == h;
}

namespace {

// Labels for the six Petersen classes, fixed by frustration and by which
// class holds the negation.
void label_petersen(std::vector<ClassReport>& classes) {
  if (classes.size() != 6) return;
  auto negation_of = [&](std::size_t i) { return static_cast<std::size_t>(classes[i].negation_class); };
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const bool self = negation_of(i) == i;
    switch (classes[i].frustration) {
      case 0: classes[i].label = "+P"; break;
      case 1: classes[i].label = "P_1"; break;
      case 2: classes[i].label = self ? "P_{2,2}" : "P_{2,3}"; break;
      case 3: classes[i].label = self ? "P_{3,2}" : "P_{3,3}"; break;
      default: return;
    }
  }
}

}  // namespace

std::vector<ClassReport> enumerate_switching_iso_classes(const SignedGraph& underlying, int max_cycle_rank) {
  const SignedGraph base = underlying.underlying();
  const SpanningForest f = spanning_forest(base);
  const int rank = static_cast<int>(f.cotree_edges.size());
  if (rank > max_cycle_rank) {
    throw Error(ErrorCode::TooLarge, "cycle rank " + std::to_string(rank) + " exceeds the limit of " +
                                         std::to_string(max_cycle_rank));
  }
  struct Bucket {
    SignedGraph representative;
    CanonicalForm form;
    int size = 0;
  };
  std::vector<Bucket> buckets;
  std::map<std::string, std::size_t> index;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << rank); ++mask) {
    std::vector<Edge> edges(f.tree_edges);
    for (int j = 0; j < rank; ++j) {
      Edge e = f.cotree_edges[static_cast<std::size_t>(j)];
      e.sign = (mask >> j) & 1 ? Sign::negative : Sign::positive;
      edges.push_back(e);
    }
    SignedGraph g(base.order(), std::move(edges));
    CanonicalForm form = canonical_form(g);
    auto it = index.find(form.key);
    if (it == index.end()) {
      index.emplace(form.key, buckets.size());
      buckets.push_back({std::move(g), std::move(form), 1});
      continue;
    }
    Bucket& b = buckets[it->second];
    const auto cert = switching_isomorphism(b.representative, b.form, g, form);
    if (!cert || !check_switching_isomorphism(b.representative, g, *cert)) {
      throw Error(ErrorCode::MalformedInput, "internal error: class merge without a valid certificate");
    }
    ++b.size;
  }

  std::vector<ClassReport> classes;
  for (const Bucket& b : buckets) {
    ClassReport r;
    r.representative = b.representative;
    r.class_size = b.size;
    r.frustration = frustration_index(b.representative).index;
    r.unbalance = unbalance_level(b.representative).ell;
    r.key = b.form.key;
    classes.push_back(std::move(r));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const ClassReport& a, const ClassReport& b) {
    if (a.frustration != b.frustration) return a.frustration < b.frustration;
    return a.unbalance < b.unbalance;
  });
  std::map<std::string, int> position;
  for (std::size_t i = 0; i < classes.size(); ++i) position[classes[i].key] = static_cast<int>(i);
  for (auto& c : classes) {
    const auto it = position.find(canonical_signature(negate(c.representative)));
    c.negation_class = it == position.end() ? -1 : it->second;
  }
  for (std::size_t i = 0; i < classes.size(); ++i) classes[i].label = "class " + std::to_string(i + 1);
  if (canonical_signature(base) == canonical_signature(petersen_graph())) label_petersen(classes);
  return classes;
}

SignSymmetry is_sign_symmetric(const SignedGraph& g) {
  const SignedGraph neg = negate(g);
  SignSymmetry out;
  out.certificate = switching_isomorphism(g, canonical_form(g), neg, canonical_form(neg));
  out.symmetric = out.certificate.has_value();
  return out;
}

}  // namespace tokensign
