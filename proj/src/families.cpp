#include "tokensign/families.hpp"

#include <array>

#include "tokensign/error.hpp"

namespace tokensign {

namespace {

struct FamilyInfo {
  Family id;
  std::string_view name;
};

constexpr std::array kFamilies{
    FamilyInfo{Family::cycle_one_negative, "Cn_minus"},
    FamilyInfo{Family::cycle_all_negative, "all_neg_Cn"},
    FamilyInfo{Family::complete_one_negative, "Kn_minus"},
    FamilyInfo{Family::complete_all_negative, "all_neg_Kn"},
    FamilyInfo{Family::complete_one_positive, "neg_Kn_plus"},
    FamilyInfo{Family::petersen, "petersen"},
};

SignedGraph with_signs(const SignedGraph& g, Sign default_sign, Sign edge12_sign) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (Edge& e : edges) e.sign = (e.u == 0 && e.v == 1) ? edge12_sign : default_sign;
  return SignedGraph(g.order(), std::move(edges));
}

SignedGraph from_list(int n, std::initializer_list<std::array<int, 3>> one_based) {
  std::vector<Edge> edges;
  for (const auto& [u, v, s] : one_based) edges.push_back({u - 1, v - 1, s > 0 ? Sign::positive : Sign::negative});
  return SignedGraph(n, std::move(edges));
}

}  // namespace

std::optional<Family> parse_family(std::string_view name) {
  for (const auto& f : kFamilies) {
    if (f.name == name) return f.id;
  }
  return std::nullopt;
}

std::string_view family_name(Family f) {
  for (const auto& info : kFamilies) {
    if (info.id == f) return info.name;
  }
  return "unknown";
}

std::vector<std::string> family_names() {
  std::vector<std::string> out;
  for (const auto& f : kFamilies) out.emplace_back(f.name);
  return out;
}

SignedGraph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::NTooSmall, "cycles need n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, Sign::positive});
  return SignedGraph(n, std::move(edges));
}

SignedGraph complete_graph(int n) {
  if (n < 1) throw Error(ErrorCode::NTooSmall, "complete graphs need n >= 1");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Sign::positive});
  }
  return SignedGraph(n, std::move(edges));
}

SignedGraph path_graph(int n) {
  if (n < 1) throw Error(ErrorCode::NTooSmall, "paths need n >= 1");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Sign::positive});
  return SignedGraph(n, std::move(edges));
}

SignedGraph star_graph(int leaves) {
  if (leaves < 1) throw Error(ErrorCode::NTooSmall, "stars need at least one leaf");
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, Sign::positive});
  return SignedGraph(leaves + 1, std::move(edges));
}

SignedGraph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5, Sign::positive});
    edges.push_back({5 + i, 5 + (i + 2) % 5, Sign::positive});
    edges.push_back({i, i + 5, Sign::positive});
  }
  return SignedGraph(10, std::move(edges));
}

SignedGraph family(Family f, int n) {
  switch (f) {
    case Family::cycle_one_negative:
    case Family::cycle_all_negative: {
      if (n < 3) throw Error(ErrorCode::NTooSmall, "cycles need n >= 3");
      const SignedGraph c = cycle_graph(n);
      return f == Family::cycle_one_negative ? with_signs(c, Sign::positive, Sign::negative)
                                             : with_signs(c, Sign::negative, Sign::negative);
    }
    case Family::complete_one_negative:
    case Family::complete_all_negative:
    case Family::complete_one_positive: {
      if (n < 2) throw Error(ErrorCode::NTooSmall, "complete graphs need n >= 2");
      const SignedGraph k = complete_graph(n);
      if (f == Family::complete_one_negative) return with_signs(k, Sign::positive, Sign::negative);
      if (f == Family::complete_all_negative) return with_signs(k, Sign::negative, Sign::negative);
      return with_signs(k, Sign::negative, Sign::positive);
    }
    case Family::petersen:
      if (n < 10) throw Error(ErrorCode::NTooSmall, "the Petersen graph has 10 vertices");
      if (n != 10) throw Error(ErrorCode::SizeMismatch, "the Petersen graph has 10 vertices");
      return petersen_graph();
  }
  throw Error(ErrorCode::UnknownFamily, "unhandled family");
}

SignedGraph family(std::string_view name, int n) {
  auto f = parse_family(name);
  if (!f) throw Error(ErrorCode::UnknownFamily, std::string(name));
  return family(*f, n);
}

SignedGraph apply_edge_mask(const SignedGraph& g, std::string_view bits) {
  if (static_cast<int>(bits.size()) != g.size()) {
    throw Error(ErrorCode::SizeMismatch, "mask has " + std::to_string(bits.size()) + " bits for " +
                                             std::to_string(g.size()) + " edges");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (std::size_t j = 0; j < edges.size(); ++j) {
    if (bits[j] == '1') {
      edges[j].sign = -edges[j].sign;
    } else if (bits[j] != '0') {
      throw Error(ErrorCode::MalformedInput, "mask characters must be 0 or 1");
    }
  }
  return SignedGraph(g.order(), std::move(edges));
}

namespace gallery {

SignedGraph k5_negative_path() {
  return from_list(5, {{1, 2, -1}, {1, 3, 1}, {1, 4, -1}, {1, 5, 1}, {2, 3, -1},
                       {2, 4, 1},  {2, 5, 1}, {3, 4, 1},  {3, 5, 1}, {4, 5, 1}});
}

SignedGraph k23_negative_chord() {
  return from_list(5, {{1, 3, 1}, {1, 4, 1}, {1, 5, 1}, {2, 3, 1}, {2, 4, 1}, {2, 5, 1}, {3, 4, -1}});
}

SignedGraph bird() {
  return from_list(8, {{1, 2, 1}, {1, 3, 1}, {1, 4, -1}, {2, 3, 1}, {2, 4, 1}, {3, 5, 1},
                       {3, 6, -1}, {4, 7, 1}, {4, 8, 1}, {5, 6, 1}, {7, 8, 1}});
}

SignedGraph balanced_paw() { return from_list(4, {{1, 2, 1}, {2, 3, -1}, {2, 4, -1}, {3, 4, 1}}); }

SignedGraph paw_one_negative() { return from_list(4, {{1, 2, 1}, {2, 3, -1}, {2, 4, 1}, {3, 4, 1}}); }

std::vector<Entry> all() {
  return {
      {"k5_negative_path", k5_negative_path()}, {"k23_negative_chord", k23_negative_chord()},
      {"bird", bird()},                         {"balanced_paw", balanced_paw()},
      {"paw_one_negative", paw_one_negative()},
  };
}

std::optional<SignedGraph> by_name(std::string_view name) {
  for (auto& e : all()) {
    if (e.name == name) return e.graph;
  }
  return std::nullopt;
}

}  // namespace gallery

}  // namespace tokensign
