#pragma once

#include <optional>
#include <vector>

#include <Eigen/Core>

#include "folzar/rational.hpp"

namespace folzar {

template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Mat = MatX<Rat>;
using Vec = VecX<Rat>;

// Determinant by fraction-free (Bareiss) elimination with row pivoting.
// Exact for any ordered field scalar.
template <typename Derived>
typename Derived::Scalar determinant_exact(const Eigen::MatrixBase<Derived>& a_in) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a_in.rows();
  if (n != a_in.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return Scalar(1);
  MatX<Scalar> a = a_in;
  Scalar prev(1);
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Scalar(0)) {
      Eigen::Index p = k + 1;
      while (p < n && a(p, k) == Scalar(0)) ++p;
      if (p == n) return Scalar(0);
      a.row(k).swap(a.row(p));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  Scalar det = a(n - 1, n - 1);
  return sign < 0 ? Scalar(0) - det : det;
}

// Determinants of the leading principal k-by-k blocks, k = 1..n.
template <typename Derived>
std::vector<typename Derived::Scalar> leading_principal_minors(
    const Eigen::MatrixBase<Derived>& a) {
  std::vector<typename Derived::Scalar> out;
  const Eigen::Index n = a.rows();
  out.reserve(static_cast<std::size_t>(n));
  for (Eigen::Index k = 1; k <= n; ++k)
    out.push_back(determinant_exact(a.topLeftCorner(k, k)));
  return out;
}

// Sylvester test on a symmetric matrix: (-1)^k det_k > 0 for all k.
template <typename Derived>
bool is_negative_definite(const Eigen::MatrixBase<Derived>& a) {
  using Scalar = typename Derived::Scalar;
  const auto minors = leading_principal_minors(a);
  for (std::size_t k = 0; k < minors.size(); ++k) {
    const Scalar signed_minor =
        (k % 2 == 0) ? Scalar(0) - minors[k] : minors[k];
    if (!(signed_minor > Scalar(0))) return false;
  }
  return true;
}

// Exact solution of A x = b for square nonsingular A (Gauss-Jordan with
// first-nonzero pivoting). Returns nullopt when A is singular.
template <typename DA, typename DB>
std::optional<VecX<typename DA::Scalar>> solve_exact(const Eigen::MatrixBase<DA>& a_in,
                                                     const Eigen::MatrixBase<DB>& b_in) {
  using Scalar = typename DA::Scalar;
  const Eigen::Index n = a_in.rows();
  if (a_in.cols() != n || b_in.rows() != n)
    throw std::invalid_argument("solve_exact dimension mismatch");
  MatX<Scalar> m(n, n + 1);
  m.leftCols(n) = a_in;
  m.col(n) = b_in;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index p = k;
    while (p < n && m(p, k) == Scalar(0)) ++p;
    if (p == n) return std::nullopt;
    if (p != k) m.row(k).swap(m.row(p));
    const Scalar pivot = m(k, k);
    for (Eigen::Index j = k; j <= n; ++j) m(k, j) = m(k, j) / pivot;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k || m(i, k) == Scalar(0)) continue;
      const Scalar f = m(i, k);
      for (Eigen::Index j = k; j <= n; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return VecX<Scalar>(m.col(n));
}

}  // namespace folzar
