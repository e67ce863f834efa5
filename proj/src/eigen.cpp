#include "tokensign/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tokensign/error.hpp"

namespace tokensign {

namespace {

double off_norm(const std::vector<double>& a, int n) {
  double s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i != j) s += a[static_cast<std::size_t>(i * n + j)] * a[static_cast<std::size_t>(i * n + j)];
    }
  }
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition jacobi_eigen(std::span<const double> symmetric, int order, double tol, int max_sweeps) {
  const int n = order;
  if (static_cast<long>(symmetric.size()) != static_cast<long>(n) * n) {
    throw Error(ErrorCode::SizeMismatch, "matrix data does not match the order");
  }
  std::vector<double> a(symmetric.begin(), symmetric.end());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double x = a[static_cast<std::size_t>(i * n + j)];
      const double y = a[static_cast<std::size_t>(j * n + i)];
      if (std::abs(x - y) > 1e-12 * (1 + std::abs(x))) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
    }
  }
  std::vector<double> v(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i * n + i)] = 1.0;

  auto at = [&](std::vector<double>& m, int i, int j) -> double& { return m[static_cast<std::size_t>(i * n + j)]; };

  double total = 0;
  for (double x : a) total += x * x;
  const double target = tol * std::sqrt(total);

  EigenDecomposition out;
  out.order = n;
  int sweep = 0;
  while (off_norm(a, n) > target) {
    if (sweep == max_sweeps) throw Error(ErrorCode::NoConvergence, "Jacobi iteration cap reached");
    ++sweep;
    const double thresh = sweep <= 3 ? 0.2 * off_norm(a, n) / (static_cast<double>(n) * n) : 0.0;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = at(a, p, q);
        if (std::abs(apq) <= thresh || apq == 0.0) continue;
        const double theta = (at(a, q, q) - at(a, p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = at(a, k, p);
          const double akq = at(a, k, q);
          at(a, k, p) = c * akp - s * akq;
          at(a, k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = at(a, p, k);
          const double aqk = at(a, q, k);
          at(a, p, k) = c * apk - s * aqk;
          at(a, q, k) = s * apk + c * aqk;
        }
        at(a, p, q) = 0.0;
        at(a, q, p) = 0.0;
        for (int k = 0; k < n; ++k) {
          const double vkp = at(v, k, p);
          const double vkq = at(v, k, q);
          at(v, k, p) = c * vkp - s * vkq;
          at(v, k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  out.sweeps = sweep;

  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int x, int y) { return at(a, x, x) < at(a, y, y); });
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.assign(v.size(), 0.0);
  for (int j = 0; j < n; ++j) {
    const int src = idx[static_cast<std::size_t>(j)];
    out.values[static_cast<std::size_t>(j)] = at(a, src, src);
    for (int k = 0; k < n; ++k) out.vectors[static_cast<std::size_t>(k * n + j)] = at(v, k, src);
  }
  return out;
}

Spectrum eigenvalues_symmetric(const ExactMatrix& m, double tol) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "matrix is not symmetric");
  const std::vector<double> data = m.to_double();
  Spectrum s;
  s.eigenvalues = jacobi_eigen(data, m.rows(), tol).values;
  s.tolerance = tol;
  return s;
}

bool spectra_match(std::span<const double> a, std::span<const double> b, double tol) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > tol) return false;
  }
  return true;
}

}  // namespace tokensign
