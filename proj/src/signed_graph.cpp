#include "tokensign/signed_graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "tokensign/error.hpp"

namespace tokensign {

namespace {

std::string vertex_pair(Vertex u, Vertex v) {
  return "{" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "}";
}

}  // namespace

SignedGraph::SignedGraph(int n) : SignedGraph(n, {}) {}

SignedGraph::SignedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw Error(ErrorCode::MalformedInput, "negative vertex count");
  for (Edge& e : edges_) {
    if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u + 1));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + vertex_pair(e.u, e.v) + " outside 1.." + std::to_string(n));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].u == edges_[i - 1].u && edges_[i].v == edges_[i - 1].v) {
      throw Error(ErrorCode::DuplicateEdge, "edge " + vertex_pair(edges_[i].u, edges_[i].v));
    }
  }
  adjacency_.assign(static_cast<std::size_t>(n), {});
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back({e.v, e.sign});
    adjacency_[e.v].push_back({e.u, e.sign});
  }
  for (auto& row : adjacency_) {
    std::sort(row.begin(), row.end(), [](const Neighbor& a, const Neighbor& b) { return a.vertex < b.vertex; });
  }
}

std::optional<Sign> SignedGraph::sign(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::pair{u, v},
                             [](const Edge& e, const std::pair<Vertex, Vertex>& key) {
                               return std::pair{e.u, e.v} < key;
                             });
  if (it == edges_.end() || it->u != u || it->v != v) return std::nullopt;
  return it->sign;
}

int SignedGraph::positive_edges() const noexcept {
  return static_cast<int>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.sign == Sign::positive; }));
}

bool SignedGraph::same_underlying(const SignedGraph& other) const {
  if (n_ != other.n_ || edges_.size() != other.edges_.size()) return false;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (edges_[i].u != other.edges_[i].u || edges_[i].v != other.edges_[i].v) return false;
  }
  return true;
}

SignedGraph SignedGraph::underlying() const {
  std::vector<Edge> edges(edges_);
  for (Edge& e : edges) e.sign = Sign::positive;
  return SignedGraph(n_, std::move(edges));
}

SwitchingVector SwitchingVector::from_set(int n, std::span<const Vertex> plus_set) {
  std::vector<Sign> s(static_cast<std::size_t>(n), Sign::negative);
  for (Vertex v : plus_set) {
    if (v < 0 || v >= n) throw Error(ErrorCode::VertexOutOfRange, "switching vertex " + std::to_string(v + 1));
    s[v] = Sign::positive;
  }
  return SwitchingVector(std::move(s));
}

SwitchingVector SwitchingVector::from_ints(std::span<const int> values) {
  std::vector<Sign> s;
  s.reserve(values.size());
  for (int x : values) {
    if (x != 1 && x != -1) throw Error(ErrorCode::BadSignToken, "switching entry " + std::to_string(x));
    s.push_back(x > 0 ? Sign::positive : Sign::negative);
  }
  return SwitchingVector(std::move(s));
}

std::vector<Vertex> SwitchingVector::plus_set() const {
  std::vector<Vertex> out;
  for (int v = 0; v < size(); ++v) {
    if (signs_[v] == Sign::positive) out.push_back(v);
  }
  return out;
}

SwitchingVector SwitchingVector::operator*(const SwitchingVector& other) const {
  if (size() != other.size()) throw Error(ErrorCode::SizeMismatch, "switching vectors of different length");
  std::vector<Sign> s(signs_);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = s[i] * other.signs_[i];
  return SwitchingVector(std::move(s));
}

SwitchingVector SwitchingVector::operator-() const {
  std::vector<Sign> s(signs_);
  for (Sign& x : s) x = -x;
  return SwitchingVector(std::move(s));
}

SpanningForest spanning_forest(const SignedGraph& g) {
  const int n = g.order();
  SpanningForest f;
  f.parent.assign(n, -1);
  f.depth.assign(n, -1);
  f.root.assign(n, -1);
  std::vector<std::size_t> cursor(n, 0);
  std::vector<Vertex> stack;
  for (Vertex r = 0; r < n; ++r) {
    if (f.depth[r] >= 0) continue;
    ++f.components;
    f.depth[r] = 0;
    f.root[r] = r;
    f.preorder.push_back(r);
    stack.push_back(r);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      auto nbrs = g.neighbors(u);
      if (cursor[u] == nbrs.size()) {
        stack.pop_back();
        continue;
      }
      const Neighbor nb = nbrs[cursor[u]++];
      if (f.depth[nb.vertex] >= 0) continue;
      f.parent[nb.vertex] = u;
      f.depth[nb.vertex] = f.depth[u] + 1;
      f.root[nb.vertex] = r;
      f.preorder.push_back(nb.vertex);
      f.tree_edges.push_back({std::min(u, nb.vertex), std::max(u, nb.vertex), nb.sign});
      stack.push_back(nb.vertex);
    }
  }
  std::sort(f.tree_edges.begin(), f.tree_edges.end());
  for (const Edge& e : g.edges()) {
    const bool tree = f.parent[e.v] == e.u || f.parent[e.u] == e.v;
    if (!tree) f.cotree_edges.push_back(e);
  }
  return f;
}

SignedGraph apply_switching(const SignedGraph& g, const SwitchingVector& s) {
  if (s.size() != g.order()) {
    throw Error(ErrorCode::SizeMismatch, "switching vector has " + std::to_string(s.size()) +
                                             " entries for " + std::to_string(g.order()) + " vertices");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = s[e.u] * e.sign * s[e.v];
  return SignedGraph(g.order(), std::move(edges));
}

SignedGraph negate(const SignedGraph& g) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = -e.sign;
  return SignedGraph(g.order(), std::move(edges));
}

SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw Error(ErrorCode::SizeMismatch, "permutation length");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
  return SignedGraph(g.order(), std::move(edges));
}

namespace {

NegativeCycle normalize_cycle(std::vector<Vertex> cycle) {
  auto smallest = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), smallest, cycle.end());
  if (cycle.size() > 2 && cycle[1] > cycle.back()) std::reverse(cycle.begin() + 1, cycle.end());
  return NegativeCycle{std::move(cycle)};
}

}  // namespace

BalanceCertificate balance_check(const SignedGraph& g) {
  const SpanningForest forest = spanning_forest(g);
  std::vector<Sign> s(g.order(), Sign::positive);
  for (Vertex v : forest.preorder) {
    const Vertex p = forest.parent[v];
    if (p >= 0) s[v] = s[p] * *g.sign(p, v);
  }
  for (const Edge& e : forest.cotree_edges) {
    if (s[e.u] * e.sign * s[e.v] == Sign::positive) continue;
    // Tree path u .. lca .. v closed by the failing edge.
    std::vector<Vertex> up{e.u};
    std::vector<Vertex> down{e.v};
    Vertex a = e.u;
    Vertex b = e.v;
    while (forest.depth[a] > forest.depth[b]) up.push_back(a = forest.parent[a]);
    while (forest.depth[b] > forest.depth[a]) down.push_back(b = forest.parent[b]);
    while (a != b) {
      up.push_back(a = forest.parent[a]);
      down.push_back(b = forest.parent[b]);
    }
    down.pop_back();  // lca already in `up`
    up.insert(up.end(), down.rbegin(), down.rend());
    return BalanceCertificate(normalize_cycle(std::move(up)));
  }
  return BalanceCertificate(SwitchingVector(std::move(s)));
}

bool is_balanced(const SignedGraph& g) { return balance_check(g).balanced(); }

std::optional<Sign> closed_walk_sign(const SignedGraph& g, std::span<const Vertex> closed_walk) {
  Sign product = Sign::positive;
  for (std::size_t i = 0; i < closed_walk.size(); ++i) {
    auto s = g.sign(closed_walk[i], closed_walk[(i + 1) % closed_walk.size()]);
    if (!s) return std::nullopt;
    product = product * *s;
  }
  return product;
}

SignedGraph signed_complement(const SignedGraph& g) {
  const BalanceCertificate cert = balance_check(g);
  if (!cert.balanced()) throw Error(ErrorCode::NotBalanced, "signed complement needs a balanced graph");
  const SwitchingVector& s = cert.switching();
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v, s[u] * s[v]});
    }
  }
  return SignedGraph(g.order(), std::move(edges));
}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(std::string_view token, int line_no) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::MalformedInput,
                "line " + std::to_string(line_no) + ": expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

Sign parse_sign(std::string_view token, int line_no) {
  if (token == "+" || token == "+1") return Sign::positive;
  if (token == "-" || token == "-1") return Sign::negative;
  throw Error(ErrorCode::BadSignToken, "line " + std::to_string(line_no) + ": '" + std::string(token) + "'");
}

}  // namespace

SignedGraph parse_graph(std::string_view text) {
  bool have_header = false;
  long long n = 0;
  long long m = 0;
  std::vector<Edge> edges;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    if (!have_header) {
      if (tokens.size() != 2) throw Error(ErrorCode::MalformedInput, "header must be 'n m'");
      n = parse_int(tokens[0], line_no);
      m = parse_int(tokens[1], line_no);
      if (n < 1 || m < 0) throw Error(ErrorCode::MalformedInput, "header needs n >= 1 and m >= 0");
      have_header = true;
      continue;
    }
    if (tokens.size() != 3) {
      throw Error(ErrorCode::MalformedInput, "line " + std::to_string(line_no) + ": expected 'u v s'");
    }
    const long long u = parse_int(tokens[0], line_no);
    const long long v = parse_int(tokens[1], line_no);
    const Sign s = parse_sign(tokens[2], line_no);
    if (u == v) throw Error(ErrorCode::LoopEdge, "line " + std::to_string(line_no));
    if (u < 1 || v < 1 || u > n || v > n) {
      throw Error(ErrorCode::VertexOutOfRange, "line " + std::to_string(line_no) + ": vertex outside 1.." +
                                                   std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1), s});
  }
  if (!have_header) throw Error(ErrorCode::MalformedInput, "missing 'n m' header");
  if (static_cast<long long>(edges.size()) != m) {
    throw Error(ErrorCode::HeaderMismatch,
                "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return SignedGraph(static_cast<int>(n), std::move(edges));
}

std::string write_graph(const SignedGraph& g, std::span<const std::string> comments) {
  std::ostringstream out;
  for (const std::string& c : comments) out << "# " << c << '\n';
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u + 1 << ' ' << e.v + 1 << ' ' << (e.sign == Sign::positive ? "+1" : "-1") << '\n';
  }
  return out.str();
}

}  // namespace tokensign
