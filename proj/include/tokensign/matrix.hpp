#pragma once

#include <span>
#include <vector>

#include "tokensign/rational.hpp"
#include "tokensign/signed_graph.hpp"

namespace tokensign {

/// Dense integer matrix, row-major, arbitrary precision. May be rectangular.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);

  static ExactMatrix identity(int n);
  static ExactMatrix diagonal(std::span<const long> entries);
  static ExactMatrix diagonal(const SwitchingVector& s);
  static ExactMatrix from_rows(const std::vector<std::vector<long>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_zero() const;

  BigInt& operator()(int i, int j) { return data_[index(i, j)]; }
  const BigInt& operator()(int i, int j) const { return data_[index(i, j)]; }

  BigInt trace() const;
  ExactMatrix transpose() const;
  /// Row-major copy as doubles.
  std::vector<double> to_double() const;

  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator-(const ExactMatrix& a, const ExactMatrix& b);
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigInt> data_;
};

/// Signed adjacency matrix.
ExactMatrix adjacency(const SignedGraph& g);
/// Adjacency matrix of the underlying unsigned graph.
ExactMatrix unsigned_adjacency(const SignedGraph& g);
/// D - A with D the degree matrix.
ExactMatrix laplacian(const SignedGraph& g);

/// tr(M^0), ..., tr(M^m).
std::vector<BigInt> power_traces(const ExactMatrix& m, int max_power);

bool commute(const ExactMatrix& a, const ExactMatrix& b);

}  // namespace tokensign
