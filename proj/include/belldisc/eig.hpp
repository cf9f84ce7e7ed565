#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "belldisc/complex_matrix.hpp"

namespace belldisc {

struct EigDecomposition {
  std::vector<double> eigenvalues;  // ascending
  ComplexMatrix eigenvectors;       // orthonormal columns, V diag(l) V^dagger = input
};

namespace detail {

// Cyclic Jacobi for complex Hermitian matrices. A pivot (p,q) with
// A(p,q) = b e^{i phi} is annihilated by the unitary
//   U = [[c, -conj(s)], [s, c]],  s = sin(theta) e^{-i phi},
// where tan(theta) solves t^2 - 2 tau t - 1 = 0, tau = (A_qq - A_pp)/(2b),
// taking the smaller root for stability. Deterministic: fixed sweep order,
// no randomization, convergence by off-diagonal Frobenius norm.
inline void jacobi_hermitian(std::vector<complex>& a, std::size_t n,
                             std::vector<complex>& v) {
  v.assign(n * n, complex{});
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  if (n < 2) return;

  double scale = 0.0;
  for (const auto& x : a) scale += std::norm(x);
  scale = std::sqrt(scale);
  if (scale == 0.0) return;
  const double tol = 1e-14 * scale;
  const double skip = tol / (8.0 * static_cast<double>(n));

  const int max_sweeps = 100;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += 2.0 * std::norm(a[p * n + q]);
    if (std::sqrt(off) <= tol) break;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const complex apq = a[p * n + q];
        const double b = std::abs(apq);
        if (b <= skip) continue;

        const double alpha = a[p * n + p].real();
        const double gamma = a[q * n + q].real();
        const double tau = (gamma - alpha) / (2.0 * b);
        const double t = tau >= 0.0
                             ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const complex s = (t * c) * std::conj(apq / b);
        const complex sc = std::conj(s);

        for (std::size_t k = 0; k < n; ++k) {  // columns p, q
          const complex ap = a[k * n + p], aq = a[k * n + q];
          a[k * n + p] = c * ap + s * aq;
          a[k * n + q] = -sc * ap + c * aq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // rows p, q
          const complex ap = a[p * n + k], aq = a[q * n + k];
          a[p * n + k] = c * ap + sc * aq;
          a[q * n + k] = -s * ap + c * aq;
        }
        a[p * n + q] = 0.0;
        a[q * n + p] = 0.0;
        a[p * n + p] = a[p * n + p].real();
        a[q * n + q] = a[q * n + q].real();

        for (std::size_t k = 0; k < n; ++k) {  // accumulate V <- V U
          const complex vp = v[k * n + p], vq = v[k * n + q];
          v[k * n + p] = c * vp + s * vq;
          v[k * n + q] = -sc * vp + c * vq;
        }
      }
    }
  }
}

inline void require_hermitian(const ComplexMatrix& m, const char* what) {
  if (!m.is_square())
    throw std::invalid_argument(std::string(what) + ": non-square input");
  if (m.hermiticity_error() > 1e-12)
    throw std::invalid_argument(std::string(what) + ": input not Hermitian");
}

// Eigenvalues ascending with eigenvector columns permuted alongside; the
// sort is stable so Jacobi output order decides ties.
inline EigDecomposition eig_symmetrized(const ComplexMatrix& sym) {
  const std::size_t n = sym.rows();
  std::vector<complex> a = sym.data();
  std::vector<complex> v;
  jacobi_hermitian(a, n, v);

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a[x * n + x].real() < a[y * n + y].real();
  });

  EigDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = ComplexMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a[order[j] * n + order[j]].real();
    for (std::size_t i = 0; i < n; ++i)
      out.eigenvectors(i, j) = v[i * n + order[j]];
  }
  return out;
}

}  // namespace detail

/// Full eigendecomposition of a Hermitian matrix (Hermiticity checked to
/// 1e-12, then the input is symmetrized before the solve).
inline EigDecomposition hermitian_eig(const ComplexMatrix& m) {
  detail::require_hermitian(m, "hermitian_eig");
  return detail::eig_symmetrized(m.symmetrized());
}

inline double min_eigenvalue(const ComplexMatrix& m) {
  detail::require_hermitian(m, "min_eigenvalue");
  const auto eig = detail::eig_symmetrized(m.symmetrized());
  return eig.eigenvalues.front();
}

namespace detail {

inline ComplexMatrix reconstruct_clipped(const EigDecomposition& eig) {
  const std::size_t n = eig.eigenvalues.size();
  ComplexMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lk = eig.eigenvalues[k];
    if (lk <= 0.0) continue;
    for (std::size_t i = 0; i < n; ++i) {
      const complex w = lk * eig.eigenvectors(i, k);
      for (std::size_t j = 0; j < n; ++j)
        out(i, j) += w * std::conj(eig.eigenvectors(j, k));
    }
  }
  return out.symmetrized();
}

// Same as psd_project but without the Hermiticity gate; solver internals
// keep their iterates Hermitian by construction.
inline ComplexMatrix psd_clip(const ComplexMatrix& m) {
  return reconstruct_clipped(eig_symmetrized(m.symmetrized()));
}

}  // namespace detail

/// Nearest positive semidefinite matrix in Frobenius norm (negative
/// eigenvalues clipped at zero).
inline ComplexMatrix psd_project(const ComplexMatrix& m) {
  detail::require_hermitian(m, "psd_project");
  return detail::psd_clip(m);
}

}  // namespace belldisc
