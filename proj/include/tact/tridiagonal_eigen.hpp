#pragma once

// Implicit QL with Wilkinson shifts for real symmetric tridiagonal matrices.
// Templated on the scalar so the same code runs in double and in MPFR.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tact/errors.hpp"
#include "tact/precision.hpp"

namespace tact {

template <class Real>
struct TridiagonalEigenResult {
  std::vector<Real> values;
  // vectors[i] is the unit eigenvector belonging to values[i].
  std::vector<std::vector<Real>> vectors;
};

namespace detail {

template <class Real>
Real pythag(const Real& a, const Real& b) {
  using std::abs;
  using std::sqrt;
  const Real aa = abs(a);
  const Real bb = abs(b);
  if (aa > bb) {
    const Real r = bb / aa;
    return aa * sqrt(Real(1) + r * r);
  }
  if (bb == Real(0)) return Real(0);
  const Real r = aa / bb;
  return bb * sqrt(Real(1) + r * r);
}

template <class Real>
Real copy_sign(const Real& magnitude, const Real& sign) {
  using std::abs;
  return sign >= Real(0) ? abs(magnitude) : -abs(magnitude);
}

}  // namespace detail

/// Eigen-decomposition of the symmetric tridiagonal matrix with diagonal `diag`
/// and off-diagonal `off` (off[i] couples rows i and i+1, off.size() ==
/// diag.size() - 1). Eigenvalues come back ascending.
template <class Real>
TridiagonalEigenResult<Real> symmetric_tridiagonal_eigen(std::vector<Real> diag,
                                                         const std::vector<Real>& off,
                                                         int max_sweeps_per_value = 60) {
  using std::abs;
  const std::size_t n = diag.size();
  if (n == 0) return {};
  if (off.size() + 1 != n) throw DomainError("tridiagonal: off-diagonal length must be n-1");

  std::vector<Real> e(n, Real(0));
  for (std::size_t i = 0; i + 1 < n; ++i) e[i] = off[i];

  // z[row][col], columns are eigenvectors.
  std::vector<std::vector<Real>> z(n, std::vector<Real>(n, Real(0)));
  for (std::size_t i = 0; i < n; ++i) z[i][i] = Real(1);

  const Real eps = RealTraits<Real>::epsilon();

  for (std::size_t l = 0; l < n; ++l) {
    int sweeps = 0;
    for (;;) {
      std::size_t m = l;
      for (; m + 1 < n; ++m) {
        const Real dd = abs(diag[m]) + abs(diag[m + 1]);
        if (abs(e[m]) <= eps * dd) break;
      }
      if (m == l) break;
      if (++sweeps > max_sweeps_per_value) {
        throw NumericalError("tridiagonal QL failed to converge at index " + std::to_string(l));
      }

      Real g = (diag[l + 1] - diag[l]) / (Real(2) * e[l]);
      Real r = detail::pythag(g, Real(1));
      g = diag[m] - diag[l] + e[l] / (g + detail::copy_sign(r, g));
      Real s(1), c(1), p(0);
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        const Real f = s * e[ii];
        const Real b = c * e[ii];
        r = detail::pythag(f, g);
        e[ii + 1] = r;
        if (r == Real(0)) {
          diag[ii + 1] -= p;
          e[m] = Real(0);
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = diag[ii + 1] - p;
        r = (diag[ii] - g) * s + Real(2) * c * b;
        p = s * r;
        diag[ii + 1] = g + p;
        g = c * r - b;
        for (std::size_t row = 0; row < n; ++row) {
          const Real t = z[row][ii + 1];
          z[row][ii + 1] = s * z[row][ii] + c * t;
          z[row][ii] = c * z[row][ii] - s * t;
        }
      }
      if (underflow) continue;
      diag[l] -= p;
      e[l] = g;
      e[m] = Real(0);
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return diag[a] < diag[b]; });

  TridiagonalEigenResult<Real> out;
  out.values.reserve(n);
  out.vectors.reserve(n);
  for (std::size_t idx : order) {
    out.values.push_back(diag[idx]);
    std::vector<Real> v(n);
    for (std::size_t row = 0; row < n; ++row) v[row] = z[row][idx];
    out.vectors.push_back(std::move(v));
  }
  return out;
}

}  // namespace tact
