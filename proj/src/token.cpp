#include "tokensign/token.hpp"

#include <bit>
#include <limits>

#include "tokensign/error.hpp"

namespace tokensign {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c * (n - k + i) / i;
    if (c > std::numeric_limits<std::int64_t>::max()) return std::numeric_limits<std::int64_t>::max();
  }
  return static_cast<std::int64_t>(c);
}

SubsetIndex::SubsetIndex(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > 64) throw Error(ErrorCode::SizeCapExceeded, "subset index supports at most 64 elements");
  if (k < 0 || k > n) throw Error(ErrorCode::KOutOfRange, "k must lie in 0..n");
  masks_.reserve(static_cast<std::size_t>(binomial(n, k)));
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  while (true) {
    std::uint64_t m = 0;
    for (int x : c) m |= std::uint64_t{1} << x;
    masks_.push_back(m);
    int i = k - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

std::vector<Vertex> SubsetIndex::unrank(long rank) const {
  std::vector<Vertex> out;
  std::uint64_t m = mask(rank);
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

long SubsetIndex::rank(std::uint64_t mask) const {
  if (std::popcount(mask) != k_ || (n_ < 64 && (mask >> n_) != 0)) {
    throw Error(ErrorCode::VertexOutOfRange, "not a k-subset of the index range");
  }
  long r = 0;
  int prev = -1;
  int i = 0;
  while (mask != 0) {
    const int a = std::countr_zero(mask);
    mask &= mask - 1;
    for (int v = prev + 1; v < a; ++v) r += static_cast<long>(binomial(n_ - 1 - v, k_ - 1 - i));
    prev = a;
    ++i;
  }
  return r;
}

long SubsetIndex::rank(std::span<const Vertex> subset) const {
  std::uint64_t m = 0;
  for (Vertex v : subset) {
    if (v < 0 || v >= n_) throw Error(ErrorCode::VertexOutOfRange, "subset element out of range");
    const std::uint64_t bit = std::uint64_t{1} << v;
    if (m & bit) throw Error(ErrorCode::MalformedInput, "repeated subset element");
    m |= bit;
  }
  return rank(m);
}

std::string subset_label(std::span<const Vertex> subset) {
  std::string out = "{";
  for (std::size_t i = 0; i < subset.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(subset[i] + 1);
  }
  return out + "}";
}

namespace {

void check_size(int n, int k, long cap) {
  if (n > 64) throw Error(ErrorCode::SizeCapExceeded, "token graphs support at most 64 base vertices");
  if (binomial(n, k) > cap) {
    throw Error(ErrorCode::SizeCapExceeded, "C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds the cap of " +
                                                std::to_string(cap) + " vertices");
  }
}

}  // namespace

TokenSignedGraph token_graph(const SignedGraph& g, int k, long cap) {
  const int n = g.order();
  if (k < 1 || k > n - 1) throw Error(ErrorCode::KOutOfRange, "k must satisfy 1 <= k <= n-1");
  check_size(n, k, cap);
  TokenSignedGraph f{g, k, SubsetIndex(n, k), SignedGraph()};
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(binomial(n - 2, k - 1) * g.size()));
  for (long r = 0; r < f.index.size(); ++r) {
    const std::uint64_t a = f.index.mask(r);
    std::uint64_t rest = a;
    while (rest != 0) {
      const int u = std::countr_zero(rest);
      rest &= rest - 1;
      for (const Neighbor& nb : g.neighbors(u)) {
        const std::uint64_t bit = std::uint64_t{1} << nb.vertex;
        if (a & bit) continue;
        const long s = f.index.rank((a & ~(std::uint64_t{1} << u)) | bit);
        if (s > r) edges.push_back({static_cast<Vertex>(r), static_cast<Vertex>(s), nb.sign});
      }
    }
  }
  f.graph = SignedGraph(static_cast<int>(f.index.size()), std::move(edges));
  return f;
}

SwitchingVector lift_switching(const SwitchingVector& s, int k, long cap) {
  const int n = s.size();
  if (k < 1 || k > n) throw Error(ErrorCode::KOutOfRange, "k must satisfy 1 <= k <= n");
  check_size(n, k, cap);
  std::uint64_t plus = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (s[v] == Sign::positive) plus |= std::uint64_t{1} << v;
  }
  const SubsetIndex index(n, k);
  std::vector<Sign> out;
  out.reserve(static_cast<std::size_t>(index.size()));
  for (long r = 0; r < index.size(); ++r) {
    out.push_back(std::popcount(index.mask(r) & plus) % 2 == 0 ? Sign::positive : Sign::negative);
  }
  return SwitchingVector(std::move(out));
}

SwitchingVector product_switching(const SwitchingVector& s, int k, long cap) {
  SwitchingVector lifted = lift_switching(s, k, cap);
  return k % 2 == 0 ? lifted : -lifted;
}

BinomialMatrix binomial_matrix(int n, int k1, int k2) {
  if (!(1 <= k1 && k1 < k2 && k2 < n)) throw Error(ErrorCode::KOutOfRange, "need 1 <= k1 < k2 < n");
  check_size(n, k2, kDefaultTokenCap);
  const SubsetIndex rows(n, k2);
  const SubsetIndex cols(n, k1);
  BinomialMatrix b{n, k1, k2, false, ExactMatrix(static_cast<int>(rows.size()), static_cast<int>(cols.size()))};
  for (long i = 0; i < rows.size(); ++i) {
    for (long j = 0; j < cols.size(); ++j) {
      if ((cols.mask(j) & ~rows.mask(i)) == 0) b.entries(static_cast<int>(i), static_cast<int>(j)) = 1;
    }
  }
  return b;
}

BinomialMatrix signed_binomial_matrix(const SignedGraph& g, int k1, int k2) {
  const BalanceCertificate cert = balance_check(g);
  if (!cert.balanced()) throw Error(ErrorCode::NotBalanced, "signed binomial matrices need a balanced graph");
  BinomialMatrix b = binomial_matrix(g.order(), k1, k2);
  const SwitchingVector s1 = product_switching(cert.switching(), k1);
  const SwitchingVector s2 = product_switching(cert.switching(), k2);
  for (int i = 0; i < b.entries.rows(); ++i) {
    for (int j = 0; j < b.entries.cols(); ++j) {
      if (b.entries(i, j) != 0) b.entries(i, j) = to_int(s2[i]) * to_int(s1[j]);
    }
  }
  b.is_signed = true;
  return b;
}

std::vector<long> lift_cycle(const TokenSignedGraph& f, std::span<const Vertex> cycle,
                             std::span<const int> positions, std::span<const Vertex> off_cycle) {
  const int p = static_cast<int>(cycle.size());
  const int kp = static_cast<int>(positions.size());
  if (kp < 1 || kp >= p) throw Error(ErrorCode::KOutOfRange, "need 1 <= tokens on the cycle < cycle length");
  if (kp + static_cast<int>(off_cycle.size()) != f.k) throw Error(ErrorCode::SizeMismatch, "token count differs from k");
  for (int j = 0; j < kp; ++j) {
    if (positions[static_cast<std::size_t>(j)] < 0 || positions[static_cast<std::size_t>(j)] >= p ||
        (j > 0 && positions[static_cast<std::size_t>(j)] <= positions[static_cast<std::size_t>(j - 1)])) {
      throw Error(ErrorCode::MalformedInput, "cycle positions must be strictly increasing in 0..p-1");
    }
  }
  std::uint64_t state = 0;
  for (Vertex v : off_cycle) state |= std::uint64_t{1} << v;
  for (int i : positions) state |= std::uint64_t{1} << cycle[static_cast<std::size_t>(i)];

  // Rotate cycle indices so the top token has an empty successor and the
  // first token sits at index 0.
  std::vector<bool> occupied(static_cast<std::size_t>(p), false);
  for (int i : positions) occupied[static_cast<std::size_t>(i)] = true;
  int top = kp - 1;
  while (occupied[static_cast<std::size_t>((positions[static_cast<std::size_t>(top)] + 1) % p)]) --top;
  const int origin = positions[static_cast<std::size_t>((top + 1) % kp)];
  std::vector<int> at;
  for (int j = 1; j <= kp; ++j) {
    at.push_back((positions[static_cast<std::size_t>((top + j) % kp)] - origin + p) % p);
  }

  std::vector<long> walk{f.index.rank(state)};
  auto step = [&](int from) {
    const Vertex a = cycle[static_cast<std::size_t>((origin + from) % p)];
    const Vertex b = cycle[static_cast<std::size_t>((origin + from + 1) % p)];
    state = (state & ~(std::uint64_t{1} << a)) | (std::uint64_t{1} << b);
    walk.push_back(f.index.rank(state));
  };

  // Top token runs forward to just before the first token.
  for (int x = at[static_cast<std::size_t>(kp - 1)]; x < p - 1; ++x) step(x);
  // Each remaining token takes the slot its successor vacated.
  for (int j = kp - 2; j >= 0; --j) {
    for (int x = at[static_cast<std::size_t>(j)]; x < at[static_cast<std::size_t>(j + 1)]; ++x) step(x);
  }
  // Top token closes the rotation.
  step(p - 1);
  walk.pop_back();
  return walk;
}

std::string write_token_graph(const TokenSignedGraph& f) {
  std::vector<std::string> comments;
  comments.reserve(static_cast<std::size_t>(f.index.size()) + 1);
  comments.push_back("token graph F_" + std::to_string(f.k) + " of a signed graph on " +
                     std::to_string(f.base.order()) + " vertices");
  for (long r = 0; r < f.index.size(); ++r) {
    comments.push_back(std::to_string(r + 1) + " = " + subset_label(f.index.unrank(r)));
  }
  return write_graph(f.graph, comments);
}

}  // namespace tokensign
