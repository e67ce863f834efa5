#pragma once

// Signed-graph data model: simple graphs whose edges carry a +1/-1 sign.
//
// Vertices are 0-based inside the library. Every text format and every
// user-facing printout is 1-based.

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace tokensign {

enum class Sign : std::int8_t { negative = -1, positive = 1 };

constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::positive ? Sign::negative : Sign::positive;
}
constexpr Sign operator*(Sign a, Sign b) noexcept { return a == b ? Sign::positive : Sign::negative; }

using Vertex = int;

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;
  Sign sign = Sign::positive;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge& a, const Edge& b) {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    return to_int(a.sign) <=> to_int(b.sign);
  }
};

struct Neighbor {
  Vertex vertex;
  Sign sign;
};

class SignedGraph {
 public:
  SignedGraph() = default;
  /// Edgeless graph on n vertices.
  explicit SignedGraph(int n);
  /// Validates and normalizes (u < v, sorted). Throws LoopEdge,
  /// VertexOutOfRange or DuplicateEdge.
  SignedGraph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

  std::optional<Sign> sign(Vertex u, Vertex v) const;
  bool has_edge(Vertex u, Vertex v) const { return sign(u, v).has_value(); }

  int positive_edges() const noexcept;
  int negative_edges() const noexcept { return size() - positive_edges(); }
  bool all_positive() const noexcept { return negative_edges() == 0; }

  /// Same vertex count and same unsigned edge set.
  bool same_underlying(const SignedGraph& other) const;
  /// All-positive copy.
  SignedGraph underlying() const;

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
};

/// A +1/-1 assignment on vertices. The switching set is U = {u : s(u) = +1}.
class SwitchingVector {
 public:
  SwitchingVector() = default;
  /// All +1 on n vertices.
  explicit SwitchingVector(int n) : signs_(static_cast<std::size_t>(n), Sign::positive) {}
  explicit SwitchingVector(std::vector<Sign> signs) : signs_(std::move(signs)) {}

  /// +1 exactly on the listed vertices.
  static SwitchingVector from_set(int n, std::span<const Vertex> plus_set);
  static SwitchingVector from_ints(std::span<const int> values);

  int size() const noexcept { return static_cast<int>(signs_.size()); }
  Sign operator[](Vertex v) const { return signs_[static_cast<std::size_t>(v)]; }
  std::span<const Sign> values() const noexcept { return signs_; }
  std::vector<Vertex> plus_set() const;
  /// Pointwise product.
  SwitchingVector operator*(const SwitchingVector& other) const;
  SwitchingVector operator-() const;

  friend bool operator==(const SwitchingVector&, const SwitchingVector&) = default;

 private:
  std::vector<Sign> signs_;
};

/// Closed walk v0 v1 ... v_{p-1} v0 through distinct vertices whose sign
/// product is -1. Normalized so that v0 is the smallest vertex and v1 < v_{p-1}.
struct NegativeCycle {
  std::vector<Vertex> vertices;
  friend bool operator==(const NegativeCycle&, const NegativeCycle&) = default;
};

class BalanceCertificate {
 public:
  explicit BalanceCertificate(SwitchingVector s) : value_(std::move(s)) {}
  explicit BalanceCertificate(NegativeCycle c) : value_(std::move(c)) {}

  bool balanced() const noexcept { return std::holds_alternative<SwitchingVector>(value_); }
  const SwitchingVector& switching() const { return std::get<SwitchingVector>(value_); }
  const NegativeCycle& witness() const { return std::get<NegativeCycle>(value_); }

 private:
  std::variant<SwitchingVector, NegativeCycle> value_;
};

/// Deterministic spanning forest: DFS from the lowest unvisited vertex,
/// neighbors taken in increasing order.
struct SpanningForest {
  std::vector<Vertex> parent;  // -1 for roots
  std::vector<int> depth;
  std::vector<Vertex> root;    // component root (its lowest vertex)
  std::vector<Vertex> preorder;
  std::vector<Edge> tree_edges;
  std::vector<Edge> cotree_edges;  // sorted
  int components = 0;
};

SpanningForest spanning_forest(const SignedGraph& g);

/// Sign of uv becomes s(u) sigma(uv) s(v).
SignedGraph apply_switching(const SignedGraph& g, const SwitchingVector& s);
SignedGraph negate(const SignedGraph& g);
/// Vertex v of g becomes perm[v].
SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm);

BalanceCertificate balance_check(const SignedGraph& g);
bool is_balanced(const SignedGraph& g);
/// Sign product along v0 v1 ... v_{p-1} v0; nullopt if a step is not an edge.
std::optional<Sign> closed_walk_sign(const SignedGraph& g, std::span<const Vertex> closed_walk);

/// Requires g balanced. Complement edges get sign s(u)s(v) where s is the
/// switching returned by balance_check.
SignedGraph signed_complement(const SignedGraph& g);

SignedGraph parse_graph(std::string_view text);
/// Canonical edge-list text; each entry of `comments` becomes a "# ..." line.
std::string write_graph(const SignedGraph& g, std::span<const std::string> comments = {});

}  // namespace tokensign
