#include "tokensign/matrix.hpp"

#include "tokensign/error.hpp"

namespace tokensign {

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
  if (rows < 0 || cols < 0) throw Error(ErrorCode::SizeMismatch, "negative matrix dimension");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(std::span<const long> entries) {
  const int n = static_cast<int>(entries.size());
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = entries[static_cast<std::size_t>(i)];
  return m;
}

ExactMatrix ExactMatrix::diagonal(const SwitchingVector& s) {
  ExactMatrix m(s.size(), s.size());
  for (int i = 0; i < s.size(); ++i) m(i, i) = to_int(s[i]);
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r == 0 ? 0 : static_cast<int>(rows.front().size());
  ExactMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) {
      throw Error(ErrorCode::SizeMismatch, "ragged rows");
    }
    for (int j = 0; j < c; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

bool ExactMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    for (int j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : data_) {
    if (x != 0) return false;
  }
  return true;
}

BigInt ExactMatrix::trace() const {
  if (!is_square()) throw Error(ErrorCode::SizeMismatch, "trace of a non-square matrix");
  BigInt t = 0;
  for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

std::vector<double> ExactMatrix::to_double() const {
  std::vector<double> out;
  out.reserve(data_.size());
  for (const auto& x : data_) out.push_back(x.get_d());
  return out;
}

// Skips zero entries of the left factor; graph matrices are sparse.
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorCode::SizeMismatch, "matrix product dimensions");
  ExactMatrix c(a.rows_, b.cols_);
  if (b.cols_ == 0) return c;
  for (int i = 0; i < a.rows_; ++i) {
    BigInt* out = &c.data_[c.index(i, 0)];
    for (int k = 0; k < a.cols_; ++k) {
      const BigInt& x = a(i, k);
      if (x == 0) continue;
      const BigInt* row = &b.data_[b.index(k, 0)];
      if (x == 1) {
        for (int j = 0; j < b.cols_; ++j) out[j] += row[j];
      } else if (x == -1) {
        for (int j = 0; j < b.cols_; ++j) out[j] -= row[j];
      } else {
        for (int j = 0; j < b.cols_; ++j) mpz_addmul(out[j].get_mpz_t(), x.get_mpz_t(), row[j].get_mpz_t());
      }
    }
  }
  return c;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::SizeMismatch, "matrix sum dimensions");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::SizeMismatch, "matrix difference dimensions");
  ExactMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
  return c;
}

ExactMatrix adjacency(const SignedGraph& g) {
  ExactMatrix a(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    a(e.u, e.v) = to_int(e.sign);
    a(e.v, e.u) = to_int(e.sign);
  }
  return a;
}

ExactMatrix unsigned_adjacency(const SignedGraph& g) { return adjacency(g.underlying()); }

ExactMatrix laplacian(const SignedGraph& g) {
  ExactMatrix l(g.order(), g.order());
  for (const Edge& e : g.edges()) {
    l(e.u, e.v) = -to_int(e.sign);
    l(e.v, e.u) = -to_int(e.sign);
  }
  for (int v = 0; v < g.order(); ++v) l(v, v) = g.degree(v);
  return l;
}

std::vector<BigInt> power_traces(const ExactMatrix& m, int max_power) {
  if (!m.is_square()) throw Error(ErrorCode::SizeMismatch, "power traces of a non-square matrix");
  std::vector<BigInt> out;
  out.reserve(static_cast<std::size_t>(max_power) + 1);
  ExactMatrix p = ExactMatrix::identity(m.rows());
  for (int r = 0; r <= max_power; ++r) {
    out.push_back(p.trace());
    if (r < max_power) p = m * p;
  }
  return out;
}

bool commute(const ExactMatrix& a, const ExactMatrix& b) { return a * b == b * a; }

}  // namespace tokensign
