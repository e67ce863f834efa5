#include "tokensign/tables.hpp"

#include <algorithm>

#include "tokensign/equivalence.hpp"
#include "tokensign/error.hpp"
#include "tokensign/families.hpp"
#include "tokensign/measures.hpp"
#include "tokensign/token.hpp"

namespace tokensign {

Table cycles_table(int n_min, int n_max) {
  if (n_min < 3) throw Error(ErrorCode::NTooSmall, "cycles need n >= 3");
  Table t{"cycles", {"n", "one negative edge", "all negative"}, {}};
  for (int n = n_min; n <= n_max; ++n) {
    t.rows.push_back({static_cast<long>(n), unbalance_level(family(Family::cycle_one_negative, n)).ell,
                      unbalance_level(family(Family::cycle_all_negative, n)).ell});
  }
  return t;
}

Table completes_table(int n_min, int n_max) {
  if (n_min < 2) throw Error(ErrorCode::NTooSmall, "complete graphs need n >= 2");
  Table t{"completes", {"n", "one negative edge", "negated, one positive edge", "all negative"}, {}};
  for (int n = n_min; n <= n_max; ++n) {
    t.rows.push_back({static_cast<long>(n), unbalance_level(family(Family::complete_one_negative, n)).ell,
                      unbalance_level(family(Family::complete_one_positive, n)).ell,
                      unbalance_level(family(Family::complete_all_negative, n)).ell});
  }
  return t;
}

Table petersen_table() {
  Table t{"petersen", {"class", "negation", "switching classes", "frustration index", "unbalance level"}, {}};
  const auto classes = enumerate_switching_iso_classes(petersen_graph());
  for (const auto& c : classes) {
    const std::string neg =
        c.negation_class >= 0 ? "-" + classes[static_cast<std::size_t>(c.negation_class)].label : std::string("?");
    t.rows.push_back({c.label, neg, static_cast<long>(c.class_size), static_cast<long>(c.frustration), c.unbalance});
  }
  return t;
}

Table tokens_table() {
  Table t{"tokens", {"graph", "unbalance level", "2-token unbalance level"}, {}};
  std::vector<std::pair<std::string, SignedGraph>> rows{
      {"k5_negative_path", gallery::k5_negative_path()},
      {"k23_negative_chord", gallery::k23_negative_chord()},
      {"Cn_minus(5)", family(Family::cycle_one_negative, 5)},
      {"all_neg_Kn(5)", family(Family::complete_all_negative, 5)},
      {"bird", gallery::bird()},
      {"balanced_paw", gallery::balanced_paw()},
      {"paw_one_negative", gallery::paw_one_negative()},
  };
  for (const auto& [name, g] : rows) {
    t.rows.push_back({name, unbalance_level(g).ell, unbalance_level(token_graph(g, 2).graph).ell});
  }
  return t;
}

Table table_by_name(const std::string& name, int n_min, int n_max) {
  if (name == "cycles") return cycles_table(std::max(n_min, 3), n_max);
  if (name == "completes") return completes_table(std::max(n_min, 2), n_max);
  if (name == "petersen") return petersen_table();
  if (name == "tokens") return tokens_table();
  throw Error(ErrorCode::UnknownFamily, "unknown table '" + name + "'");
}

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<long>(&c)) return std::to_string(*i);
  const Rational& r = std::get<Rational>(c);
  return r.str() + " (" + approx4(r) + ")";
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string render_text(const Table& t) {
  std::vector<std::vector<std::string>> grid{t.header};
  for (const auto& row : t.rows) {
    std::vector<std::string> line;
    for (const auto& c : row) line.push_back(cell_text(c));
    grid.push_back(std::move(line));
  }
  std::vector<std::size_t> width(t.header.size(), 0);
  for (const auto& line : grid) {
    for (std::size_t i = 0; i < line.size(); ++i) width[i] = std::max(width[i], line[i].size());
  }
  std::string out;
  for (std::size_t r = 0; r < grid.size(); ++r) {
    std::string line;
    for (std::size_t i = 0; i < grid[r].size(); ++i) {
      if (i) line += "  ";
      line += grid[r][i];
      if (i + 1 < grid[r].size()) line += std::string(width[i] - grid[r][i].size(), ' ');
    }
    out += line + "\n";
    if (r == 0) {
      std::size_t total = 0;
      for (std::size_t i = 0; i < width.size(); ++i) total += width[i] + (i ? 2 : 0);
      out += std::string(total, '-') + "\n";
    }
  }
  return out;
}

std::string render_csv(const Table& t) {
  std::string out;
  for (std::size_t i = 0; i < t.header.size(); ++i) {
    const bool rational_column = !t.rows.empty() && std::holds_alternative<Rational>(t.rows.front()[i]);
    if (i) out += ",";
    out += csv_escape(t.header[i]);
    if (rational_column) out += "," + csv_escape(t.header[i] + " approx");
  }
  out += "\n";
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ",";
      if (const auto* r = std::get_if<Rational>(&row[i])) {
        out += r->str() + "," + approx4(*r);
      } else {
        out += csv_escape(cell_text(row[i]));
      }
    }
    out += "\n";
  }
  return out;
}

Json to_json(const Table& t) {
  Json rows = Json::array();
  for (const auto& row : t.rows) {
    Json obj = Json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string& key = t.header[i];
      if (const auto* s = std::get_if<std::string>(&row[i])) {
        obj[key] = *s;
      } else if (const auto* n = std::get_if<long>(&row[i])) {
        obj[key] = *n;
      } else {
        obj[key] = to_json(std::get<Rational>(row[i]));
      }
    }
    rows.push_back(std::move(obj));
  }
  return Json{{"table", t.name}, {"columns", t.header}, {"rows", rows}};
}

}  // namespace tokensign
