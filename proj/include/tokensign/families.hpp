#pragma once

// Named signed-graph constructors.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tokensign/signed_graph.hpp"

namespace tokensign {

enum class Family {
  cycle_one_negative,     // Cn_minus: cycle, edge {1,2} negative
  cycle_all_negative,     // all_neg_Cn
  complete_one_negative,  // Kn_minus: complete, edge {1,2} negative
  complete_all_negative,  // all_neg_Kn
  complete_one_positive,  // neg_Kn_plus: all negative except edge {1,2}
  petersen,               // all-positive, n must be 10
};

std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family f);
std::vector<std::string> family_names();

SignedGraph family(Family f, int n);
/// Throws UnknownFamily for an unrecognized id.
SignedGraph family(std::string_view name, int n);

// All-positive building blocks.
SignedGraph cycle_graph(int n);
SignedGraph complete_graph(int n);
SignedGraph path_graph(int n);
SignedGraph star_graph(int leaves);
/// Outer 5-cycle 1..5, inner pentagram 6..10 (i+5 ~ i+7), spokes i -- i+5.
SignedGraph petersen_graph();

/// Flips the sign of edge j (in sorted edge order) wherever bits[j] == '1'.
/// `bits` must have exactly one character per edge.
SignedGraph apply_edge_mask(const SignedGraph& g, std::string_view bits);

// Small signed graphs with fixed signatures that the tables and tests refer to.
namespace gallery {

/// K_5 whose negative edges form the path 4-1-2-3.
SignedGraph k5_negative_path();
/// K_{2,3} on parts {1,2} and {3,4,5} plus the negative chord {3,4}.
SignedGraph k23_negative_chord();
/// Diamond 1-2-3-4 (edges 12,13,14,23,24) with triangular wings 3-5-6 and
/// 4-7-8; negative edges {1,4} and {3,6}. Sign-symmetric, adjacency spectrum
/// {0^2, +-1, (+-sqrt5)^2}.
SignedGraph bird();
/// Paw (triangle 2-3-4 with pendant 1) with negative edges {2,3},{2,4};
/// balanced, Laplacian [[1,-1,0,0],[-1,3,1,1],[0,1,2,-1],[0,1,-1,2]].
SignedGraph balanced_paw();
/// The same paw with only {2,3} negative.
SignedGraph paw_one_negative();

struct Entry {
  std::string name;
  SignedGraph graph;
};
std::vector<Entry> all();
std::optional<SignedGraph> by_name(std::string_view name);

}  // namespace gallery

}  // namespace tokensign
