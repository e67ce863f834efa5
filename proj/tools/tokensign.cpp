#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
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

using namespace tokensign;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Input {
  std::string file;
  std::string family;
  int n = 0;
  std::string mask;
  std::string example;
};

struct Options {
  Input input;
  std::string format = "text";
  int k = 0;
  int k1 = 0;
  int k2 = 0;
  int m = -1;
  std::uint64_t seed = 0;
  int trials = 100;
  int max_vertices = 0;
  double tol = 1e-9;
  std::string set;
  std::string signs;
  std::string matrix = "adjacency";
  std::string table;
  std::string claim;
  int n_min = 0;
  int n_max = 0;
  bool balanced_only = false;
};

void add_input(CLI::App* cmd, Input& in) {
  auto* file = cmd->add_option("--file", in.file, "Edge-list file ('-' for stdin)");
  auto* fam = cmd->add_option("--family", in.family, "Named family: " + [] {
    std::string s;
    for (const auto& f : family_names()) s += (s.empty() ? "" : ", ") + f;
    return s;
  }());
  cmd->add_option("--n", in.n, "Order for --family");
  cmd->add_option("--mask", in.mask, "Bit string flipping the signs of the sorted edges");
  auto* ex = cmd->add_option("--example", in.example, "Gallery graph by name");
  file->excludes(fam)->excludes(ex);
  fam->excludes(ex);
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream f(path);
  if (!f) throw UsageError("--file: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

SignedGraph load(const Input& in) {
  std::optional<SignedGraph> g;
  if (!in.file.empty()) {
    g = parse_graph(read_source(in.file));
  } else if (!in.family.empty()) {
    if (in.n <= 0) throw UsageError("--n: required with --family");
    g = family(in.family, in.n);
  } else if (!in.example.empty()) {
    g = gallery::by_name(in.example);
    if (!g) {
      std::string names;
      for (const auto& e : gallery::all()) names += " " + e.name;
      throw UsageError("--example: unknown graph '" + in.example + "' (known:" + names + ")");
    }
  } else {
    throw UsageError("an input is required: --file, --family with --n, or --example");
  }
  if (!in.mask.empty()) g = apply_edge_mask(*g, in.mask);
  return *g;
}

std::vector<int> parse_int_list(const std::string& text, const std::string& flag) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError(flag + ": bad entry '" + item + "'");
    }
  }
  return out;
}

std::string rational_line(const Rational& r) { return r.str() + " ≈ " + approx4(r); }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.format == "json") {
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::string vertex_list(std::span<const Vertex> vs) {
  std::string out;
  for (Vertex v : vs) out += (out.empty() ? "" : " ") + std::to_string(v + 1);
  return out;
}

std::string signs_text(const SwitchingVector& s) {
  std::string out;
  for (Sign x : s.values()) out += (out.empty() ? "" : " ") + std::string(x == Sign::positive ? "+1" : "-1");
  return out;
}

SignedGraph maybe_token(const SignedGraph& g, const Options& o) {
  if (o.k <= 0) return g;
  return token_graph(g, o.k, o.max_vertices > 0 ? o.max_vertices : kDefaultTokenCap).graph;
}

int cmd_info(const Options& o) {
  const SignedGraph g = load(o.input);
  const bool bal = is_balanced(g);
  Json j{{"n", g.order()}, {"m", g.size()}, {"m_plus", g.positive_edges()}, {"m_minus", g.negative_edges()},
         {"balanced", bal}};
  std::ostringstream t;
  t << "n = " << g.order() << "\nm = " << g.size() << "\nm+ = " << g.positive_edges()
    << "\nm- = " << g.negative_edges() << "\nbalanced = " << (bal ? "yes" : "no") << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_balance(const Options& o) {
  const SignedGraph g = load(o.input);
  const BalanceCertificate c = balance_check(g);
  std::ostringstream t;
  if (c.balanced()) {
    t << "balanced\nswitching = " << signs_text(c.switching()) << "\nswitching set = {"
      << vertex_list(c.switching().plus_set()) << "}\n";
  } else {
    t << "unbalanced\nnegative cycle = " << vertex_list(c.witness().vertices) << "\n";
  }
  emit(o, to_json(c), t.str());
  return 0;
}

int cmd_graph_output(const Options& o, const SignedGraph& g) {
  emit(o, to_json(g), write_graph(g));
  return 0;
}

int cmd_switch(const Options& o) {
  const SignedGraph g = load(o.input);
  SwitchingVector s;
  if (!o.set.empty() && !o.signs.empty()) throw UsageError("--set and --signs are mutually exclusive");
  if (!o.signs.empty()) {
    s = SwitchingVector::from_ints(parse_int_list(o.signs, "--signs"));
    if (s.size() != g.order()) throw Error(ErrorCode::SizeMismatch, "--signs needs one entry per vertex");
  } else if (!o.set.empty()) {
    std::vector<Vertex> plus;
    for (int v : parse_int_list(o.set, "--set")) plus.push_back(v - 1);
    s = SwitchingVector::from_set(g.order(), plus);
  } else {
    throw UsageError("switch needs --set or --signs");
  }
  return cmd_graph_output(o, apply_switching(g, s));
}

int cmd_token(const Options& o) {
  const SignedGraph g = load(o.input);
  const TokenSignedGraph f = token_graph(g, o.k, o.max_vertices > 0 ? o.max_vertices : kDefaultTokenCap);
  Json j = to_json(f.graph);
  Json labels = Json::array();
  for (long r = 0; r < f.index.size(); ++r) labels.push_back(subset_label(f.index.unrank(r)));
  j["k"] = f.k;
  j["subsets"] = labels;
  emit(o, j, write_token_graph(f));
  return 0;
}

int cmd_spectrum(const Options& o) {
  const SignedGraph g = maybe_token(load(o.input), o);
  const ExactMatrix m = o.matrix == "laplacian" ? laplacian(g) : adjacency(g);
  const ExactPolynomial p = char_poly(m);
  const Spectrum s = eigenvalues_symmetric(m);
  Json j{{"matrix", o.matrix}, {"order", m.rows()}, {"char_poly", to_json(p)}, {"eigenvalues", s.eigenvalues}};
  std::ostringstream t;
  t << "matrix = " << o.matrix << "\nchar poly = " << p.str() << "\neigenvalues =";
  char buf[64];
  for (double x : s.eigenvalues) {
    std::snprintf(buf, sizeof buf, " %.10g", std::abs(x) < 1e-12 ? 0.0 : x);
    t << buf;
  }
  t << "\n";
  emit(o, j, t.str());
  return 0;
}

int cmd_frustration(const Options& o) {
  const SignedGraph g = maybe_token(load(o.input), o);
  const FrustrationResult f =
      frustration_index(g, o.max_vertices > 0 ? o.max_vertices : kDefaultFrustrationGuard);
  std::ostringstream t;
  t << "frustration index = " << f.index << "\nwitness switching = " << signs_text(f.witness) << "\nremoved edges =";
  for (const Edge& e : f.removed_edges) t << " " << e.u + 1 << "-" << e.v + 1;
  t << "\n";
  emit(o, to_json(f), t.str());
  return 0;
}

int cmd_unbalance(const Options& o) {
  const SignedGraph g = maybe_token(load(o.input), o);
  if (o.m >= 0) {
    const Rational r = unbalance_level_m(g, o.m);
    emit(o, Json{{"m", o.m}, {"ell_m", to_json(r)}}, rational_line(r) + "\n");
    return 0;
  }
  const UnbalanceResult u = unbalance_level(g);
  std::ostringstream t;
  t << rational_line(u.ell) << "\nell_{n-1} = " << rational_line(u.ell_n_minus_1)
    << "\nell_n = " << rational_line(u.ell_n) << "\n";
  emit(o, to_json(u), t.str());
  return 0;
}

int cmd_bounds(const Options& o) {
  const SignedGraph g = load(o.input);
  const FrustrationBounds b = check_frustration_bounds(g, o.k, o.max_vertices > 0 ? o.max_vertices : kDefaultBoundsGuard);
  std::ostringstream t;
  t << b.base << " <= " << b.token << " <= " << b.upper << "  (l, l of the " << b.k << "-token graph, bound)\n"
    << (b.holds() ? "bounds hold" : "BOUNDS VIOLATED") << "\n";
  emit(o, to_json(b), t.str());
  return b.holds() ? 0 : 1;
}

int cmd_classes(const Options& o) {
  const SignedGraph g = load(o.input);
  const auto classes = enumerate_switching_iso_classes(g);
  Table table{"classes", {"class", "negation", "switching classes", "frustration index", "unbalance level"}, {}};
  Json j = Json::array();
  for (const auto& c : classes) {
    const std::string neg =
        c.negation_class >= 0 ? classes[static_cast<std::size_t>(c.negation_class)].label : std::string("?");
    table.rows.push_back({c.label, neg, static_cast<long>(c.class_size), static_cast<long>(c.frustration), c.unbalance});
    j.push_back(to_json(c));
  }
  if (o.format == "csv") {
    std::cout << render_csv(table);
  } else {
    emit(o, j, render_text(table));
  }
  return 0;
}

int cmd_signsym(const Options& o) {
  const SignedGraph g = maybe_token(load(o.input), o);
  const SignSymmetry s = is_sign_symmetric(g);
  Json j{{"sign_symmetric", s.symmetric}};
  std::ostringstream t;
  t << "sign-symmetric = " << (s.symmetric ? "yes" : "no") << "\n";
  if (s.certificate) {
    j["certificate"] = to_json(*s.certificate);
    t << "permutation = " << vertex_list(s.certificate->permutation) << "\nswitching = " << signs_text(s.certificate->switching)
      << "\n";
  }
  emit(o, j, t.str());
  return 0;
}

int cmd_table(const Options& o) {
  const Table t = table_by_name(o.table, o.n_min, o.n_max > 0 ? o.n_max : 15);
  if (o.format == "json") {
    std::cout << to_json(t).dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << render_csv(t);
  } else {
    std::cout << render_text(t);
  }
  return 0;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> claims;
  if (o.claim == "all") {
    claims = claim_ids();
  } else {
    claims = {o.claim};
  }
  const bool has_input = !o.input.file.empty() || !o.input.family.empty() || !o.input.example.empty();
  if (has_input) {
    const SignedGraph g = load(o.input);
    const int k = o.k > 0 ? o.k : 2;
    Json reports = Json::array();
    std::ostringstream t;
    bool ok = true;
    for (const auto& c : claims) {
      VerificationReport r;
      if (c == "edge-counts") r = verify_edge_counts(g, k);
      if (c == "cycle-lift") r = verify_cycle_lift(g, k);
      if (c == "token-switch") {
        const std::vector<Vertex> plus = [&] {
          std::vector<Vertex> out;
          for (int v : parse_int_list(o.set, "--set")) out.push_back(v - 1);
          return out;
        }();
        r = verify_token_switch(g, SwitchingVector::from_set(g.order(), plus), k);
      }
      if (c == "intertwine") r = verify_intertwining(g, o.k1 > 0 ? o.k1 : 1, o.k2 > 0 ? o.k2 : 2);
      if (c == "containment") r = verify_spectrum_containment(g, k);
      if (c == "complement") r = verify_complement(g, o.tol);
      if (c == "token-complement") r = verify_token_complement(g, k, o.tol);
      ok = ok && r.passed;
      reports.push_back(to_json(r));
      t << (r.passed ? "PASS " : "FAIL ") << r.claim_id << "  " << r.instance << "\n";
    }
    emit(o, reports, t.str());
    return ok ? 0 : 1;
  }
  SweepOptions so;
  so.trials = o.trials;
  so.seed = o.seed;
  so.tol = o.tol;
  if (o.n_max > 0) so.n_max = o.n_max;
  if (o.k > 0) so.k_max = o.k;
  const auto summaries = run_sweep(claims, so);
  Json j = Json::array();
  std::ostringstream t;
  int failures = 0;
  t << "claim             passed  failed\n";
  for (const auto& s : summaries) {
    Json f = Json::array();
    for (const auto& r : s.failures) f.push_back(to_json(r));
    j.push_back(Json{{"claim", s.claim_id}, {"passed", s.passed}, {"failed", s.failed}, {"failures", f}});
    char buf[128];
    std::snprintf(buf, sizeof buf, "%-16s  %6d  %6d\n", s.claim_id.c_str(), s.passed, s.failed);
    t << buf;
    failures += s.failed;
  }
  t << "total failures: " << failures << "\n";
  emit(o, j, t.str());
  return failures == 0 ? 0 : 1;
}

int cmd_explore(const Options& o) {
  ExplorerOptions e;
  e.trials = o.trials;
  e.seed = o.seed;
  e.k = o.k > 0 ? o.k : 2;
  if (o.n_min > 0) e.n_min = o.n_min;
  if (o.n_max > 0) e.n_max = o.n_max;
  e.balanced_only = o.balanced_only;
  const ExplorerReport r = explore_monotonicity(e);
  std::ostringstream t;
  t << "trials = " << r.trials_run << " (seed " << e.seed << ", n in [" << e.n_min << "," << e.n_max << "], k = " << e.k
    << ")\n"
    << "statement 1 violations (ell <= ell of token graph) = " << r.statement1_violations << "\n"
    << "statement 2 violations (l order kept by token graphs) = " << r.statement2_violations << "\n"
    << "statement 3 violations (l order gives ell order of token graphs) = " << r.statement3_violations << "\n"
    << "max ell observed = " << rational_line(r.max_ell) << "\n";
  for (std::size_t i = 0; i < r.counterexamples.size(); ++i) {
    const auto& s = r.counterexamples[i];
    t << "\ncounterexample " << i + 1 << ":" << (s.statement1 ? "" : " [1]") << (s.statement2 ? "" : " [2]")
      << (s.statement3 ? "" : " [3]") << "\n"
      << "  l = " << s.first_frustration.index << ", " << s.second_frustration.index
      << "; token l = " << s.first_token_frustration.index << ", " << s.second_token_frustration.index << "\n"
      << "  ell = " << rational_line(s.first_ell) << ", " << rational_line(s.second_ell) << "\n"
      << "  token ell = " << rational_line(s.first_token_ell) << ", " << rational_line(s.second_token_ell) << "\n"
      << "  first graph:\n" << write_graph(s.first) << "  second graph:\n" << write_graph(s.second);
  }
  emit(o, to_json(r), t.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed graphs, their token graphs, and unbalance measures"};
  app.require_subcommand(1);
  Options o;

  struct Spec {
    const char* name;
    const char* help;
    bool input;
  };
  const std::vector<Spec> with_input{
      {"info", "Order, size, sign counts and balance", true},
      {"balance", "Balance certificate: switching or negative cycle", true},
      {"switch", "Switch at a vertex set", true},
      {"negate", "Flip every sign", true},
      {"complement", "Signed complement of a balanced graph", true},
      {"token", "k-token signed graph", true},
      {"spectrum", "Characteristic polynomial and eigenvalues", true},
      {"frustration", "Frustration index by exhaustive switching", true},
      {"unbalance", "Spectral unbalance level", true},
      {"bounds", "Frustration bounds for the k-token graph", true},
      {"classes", "Switching-isomorphism classes of signatures on the underlying graph", true},
      {"signsym", "Sign-symmetry test with certificate", true},
  };
  std::map<std::string, CLI::App*> cmds;
  for (const auto& s : with_input) {
    auto* c = app.add_subcommand(s.name, s.help);
    add_input(c, o.input);
    add_format(c, o);
    cmds[s.name] = c;
  }
  cmds["switch"]->add_option("--set", o.set, "Switching set U, comma separated (1-based)");
  cmds["switch"]->add_option("--signs", o.signs, "Switching vector, comma separated +1/-1");
  cmds["token"]->add_option("--k", o.k, "Number of tokens")->required();
  cmds["token"]->add_option("--max-vertices", o.max_vertices, "Token graph size cap");
  cmds["spectrum"]->add_option("--matrix", o.matrix, "adjacency or laplacian")
      ->check(CLI::IsMember({"adjacency", "laplacian"}));
  for (const char* name : {"spectrum", "frustration", "unbalance", "signsym"}) {
    cmds[name]->add_option("--k", o.k, "Use the k-token graph of the input");
  }
  cmds["frustration"]->add_option("--max-vertices", o.max_vertices, "Enumeration guard on the vertex count");
  cmds["unbalance"]->add_option("--m", o.m, "Single level ell_m instead of the maximum");
  cmds["bounds"]->add_option("--k", o.k, "Number of tokens")->required();
  cmds["bounds"]->add_option("--max-vertices", o.max_vertices, "Guard on the token graph order");

  auto* table = app.add_subcommand("table", "Recompute a table of unbalance levels");
  table->add_option("name", o.table, "cycles, completes, petersen or tokens")
      ->required()
      ->check(CLI::IsMember({"cycles", "completes", "petersen", "tokens"}));
  table->add_option("--n-min", o.n_min, "Smallest order");
  table->add_option("--n-max", o.n_max, "Largest order (default 15)");
  add_format(table, o);

  auto* verify = app.add_subcommand("verify", "Check a theorem on one graph or on a seeded random sweep");
  std::vector<std::string> claim_choices = claim_ids();
  claim_choices.push_back("all");
  verify->add_option("claim", o.claim, "Claim id or 'all'")->required()->check(CLI::IsMember(claim_choices));
  add_input(verify, o.input);
  add_format(verify, o);
  verify->add_option("--k", o.k, "Tokens (single graph) or largest k (sweep)");
  verify->add_option("--k1", o.k1, "Smaller token count for intertwine");
  verify->add_option("--k2", o.k2, "Larger token count for intertwine");
  verify->add_option("--set", o.set, "Switching set for token-switch");
  verify->add_option("--seed", o.seed, "Sweep seed");
  verify->add_option("--trials", o.trials, "Instances per claim");
  verify->add_option("--n-max", o.n_max, "Largest order in the sweep");
  verify->add_option("--tol", o.tol, "Eigenvalue tolerance");

  auto* explore = app.add_subcommand("explore-p45", "Search random pairs for violations of the monotonicity statements");
  explore->add_option("--trials", o.trials, "Number of sampled pairs");
  explore->add_option("--seed", o.seed, "Seed");
  explore->add_option("--k", o.k, "Number of tokens (default 2)");
  explore->add_option("--n-min", o.n_min, "Smallest order (default 3)");
  explore->add_option("--n-max", o.n_max, "Largest order (default 6)");
  explore->add_flag("--balanced-only", o.balanced_only, "Make the first graph of each pair balanced");
  add_format(explore, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    const std::string cmd = app.get_subcommands().front()->get_name();
    if (cmd == "info") return cmd_info(o);
    if (cmd == "balance") return cmd_balance(o);
    if (cmd == "switch") return cmd_switch(o);
    if (cmd == "negate") return cmd_graph_output(o, negate(load(o.input)));
    if (cmd == "complement") return cmd_graph_output(o, signed_complement(load(o.input)));
    if (cmd == "token") return cmd_token(o);
    if (cmd == "spectrum") return cmd_spectrum(o);
    if (cmd == "frustration") return cmd_frustration(o);
    if (cmd == "unbalance") return cmd_unbalance(o);
    if (cmd == "bounds") return cmd_bounds(o);
    if (cmd == "classes") return cmd_classes(o);
    if (cmd == "signsym") return cmd_signsym(o);
    if (cmd == "table") return cmd_table(o);
    if (cmd == "verify") return cmd_verify(o);
    if (cmd == "explore-p45") return cmd_explore(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
