#pragma once

#include <string>
#include <variant>
#include <vector>

#include "tokensign/rational.hpp"
#include "tokensign/serialization.hpp"

namespace tokensign {

using Cell = std::variant<std::string, long, Rational>;

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Unbalance level of the cycle with one negative edge and of the
/// all-negative cycle, n = n_min..n_max.
Table cycles_table(int n_min = 3, int n_max = 15);
/// Unbalance level of K_n with one negative edge, of -K_n with one positive
/// edge, and of -K_n.
Table completes_table(int n_min = 2, int n_max = 15);
/// Switching-isomorphism classes of the Petersen graph.
Table petersen_table();
/// Unbalance level of the gallery graphs and of their 2-token graphs.
Table tokens_table();

Table table_by_name(const std::string& name, int n_min, int n_max);

std::string render_text(const Table& t);
std::string render_csv(const Table& t);
Json to_json(const Table& t);

}  // namespace tokensign
