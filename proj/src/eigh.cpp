//
// Copyright 2026 The qdp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "qdp/eigh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "qdp/parallel.hpp"

namespace qdp {

namespace {

constexpr int kMaxJacobiSweeps = 100;
// Trailing blocks below this stay serial; fork-join costs more than the work.
constexpr std::size_t kParallelGrain = 192;
constexpr int kMaxQlIterations = 60;

void check_and_symmetrize(const Matrix& h, Matrix* out) {
  if (!h.square())
    throw Error(ErrorKind::kNonHermitian, "eigh: matrix is not square");
  const double resid = h.hermiticity_residual();
  if (!(resid <= kHermTol))
    throw Error(ErrorKind::kNonHermitian,
                "eigh: hermiticity residual " + std::to_string(resid) +
                    " exceeds tolerance");
  *out = h.symmetrized();
}

void sort_descending(std::vector<double>* evals, Matrix* evecs) {
  const std::size_t n = evals->size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return (*evals)[a] > (*evals)[b];
  });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = (*evals)[order[i]];
  *evals = std::move(sorted);
  if (evecs != nullptr && evecs->rows() == n) {
    Matrix permuted(n, n);
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t i = 0; i < n; ++i) permuted(i, j) = (*evecs)(i, order[j]);
    *evecs = std::move(permuted);
  }
}

// One cyclic sweep of complex Jacobi rotations. The 2x2 block at (p,q) is
// [[a, b], [conj(b), c]] with a, c real; the rotation that zeroes b is the
// real symmetric one for |b| carried on the phase omega = b/|b|.
void jacobi_in_place(Matrix& a, Matrix* v, std::size_t n) {
  const double scale = std::max(a.max_abs(), 1e-300);
  const double stop = 1e-15 * scale;
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    double off_max = 0.0;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        off_max = std::max(off_max, std::abs(a(p, q)));
    if (off_max <= stop) return;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cplx b = a(p, q);
        const double absb = std::abs(b);
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        // Rotations on entries this small no longer move the spectrum.
        if (absb <= 1e-18 * (std::abs(app) + std::abs(aqq)) || absb == 0.0) {
          a(p, q) = 0.0;
          a(q, p) = 0.0;
          continue;
        }
        const cplx omega = b / absb;
        const double tau = (aqq - app) / (2.0 * absb);
        double t;
        if (tau >= 0.0)
          t = 1.0 / (tau + std::sqrt(1.0 + tau * tau));
        else
          t = -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double cs = 1.0 / std::sqrt(1.0 + t * t);
        const double sn = t * cs;

        a(p, p) = app - t * absb;
        a(q, q) = aqq + t * absb;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const cplx aip = a(i, p);
          const cplx aiq = a(i, q);
          const cplx nip = cs * aip - sn * std::conj(omega) * aiq;
          const cplx niq = sn * omega * aip + cs * aiq;
          a(i, p) = nip;
          a(p, i) = std::conj(nip);
          a(i, q) = niq;
          a(q, i) = std::conj(niq);
        }
        if (v != nullptr) {
          for (std::size_t i = 0; i < n; ++i) {
            const cplx vip = (*v)(i, p);
            const cplx viq = (*v)(i, q);
            (*v)(i, p) = cs * vip - sn * std::conj(omega) * viq;
            (*v)(i, q) = sn * omega * vip + cs * viq;
          }
        }
      }
    }
  }
  throw Error(ErrorKind::kNoConvergence,
              "eigh: Jacobi sweep cap reached without convergence");
}

struct Householder {
  std::size_t k = 0;            // column being reduced
  double tau = 0.0;             // 2 / |v|^2
  std::vector<cplx> v;          // reflector, rows k+1..n-1
};

// Reduce to real symmetric tridiagonal (d, e). When `reflectors` is non-null
// the Householder data needed to rebuild the basis is saved. `phases` holds
// the diagonal unitary that rotates the complex subdiagonal onto the reals.
void tridiagonalize(Matrix& a, std::size_t n, std::vector<double>* d,
                    std::vector<double>* e, std::vector<cplx>* phases,
                    std::vector<Householder>* reflectors) {
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;  // rows below the diagonal
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(a(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;

    const cplx x0 = a(k + 1, k);
    const cplx phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : cplx(1.0);
    const cplx alpha = -phase * xnorm;

    std::vector<cplx> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = a(k + 1 + i, k);
    v[0] -= alpha;
    double vnorm2 = 0.0;
    for (const cplx& vi : v) vnorm2 += std::norm(vi);
    if (vnorm2 == 0.0) continue;
    const double tau = 2.0 / vnorm2;

    // p = tau * B v on the trailing block, then rank-2 update
    // B <- B - v w^dagger - w v^dagger with w = p - (tau/2)(v^dagger p) v.
    std::vector<cplx> p(m, cplx(0.0));
    par::parallel_for(
        m,
        [&](std::size_t i) {
          cplx acc = 0.0;
          const std::size_t row = k + 1 + i;
          for (std::size_t j = 0; j < m; ++j) acc += a(row, k + 1 + j) * v[j];
          p[i] = tau * acc;
        },
        kParallelGrain);
    cplx vp = 0.0;
    for (std::size_t i = 0; i < m; ++i) vp += std::conj(v[i]) * p[i];
    const double correction = 0.5 * tau * vp.real();
    std::vector<cplx> w(m);
    for (std::size_t i = 0; i < m; ++i) w[i] = p[i] - correction * v[i];
    par::parallel_for(
        m,
        [&](std::size_t i) {
          const std::size_t row = k + 1 + i;
          for (std::size_t j = 0; j < m; ++j)
            a(row, k + 1 + j) -=
                v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]);
        },
        kParallelGrain);

    a(k + 1, k) = alpha;
    a(k, k + 1) = std::conj(alpha);
    for (std::size_t i = k + 2; i < n; ++i) {
      a(i, k) = 0.0;
      a(k, i) = 0.0;
    }
    if (reflectors != nullptr)
      reflectors->push_back(Householder{k, tau, std::move(v)});
  }

  d->assign(n, 0.0);
  e->assign(n, 0.0);
  phases->assign(n, cplx(1.0));
  for (std::size_t i = 0; i < n; ++i) (*d)[i] = a(i, i).real();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const cplx sub = a(k + 1, k);
    const double m = std::abs(sub);
    (*e)[k] = m;
    (*phases)[k + 1] = m > 0.0 ? (*phases)[k] * (sub / m) : (*phases)[k];
  }
}

// Implicit-shift QL on a real symmetric tridiagonal; rotations are applied to
// the columns of `z` when present (complex, so the phase matrix can be folded
// in beforehand).
void tridiagonal_ql(std::vector<double>& d, std::vector<double>& e,
                    std::size_t n, Matrix* z) {
  if (n == 0) return;
  const double eps = std::numeric_limits<double>::epsilon();
  // shift e so that e[i] couples d[i] and d[i+1]
  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    while (true) {
      std::size_t m = l;
      while (m + 1 < n) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
        ++m;
      }
      if (m == l) break;
      if (iter++ == kMaxQlIterations)
        throw Error(ErrorKind::kNoConvergence,
                    "eigh: QL iteration cap reached");
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, p = 0.0;
      bool underflow = false;
      for (std::size_t ii = m; ii-- > l;) {
        const std::size_t i = ii;
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= p;
          e[m] = 0.0;
          underflow = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - p;
        r = (d[i] - g) * s + 2.0 * c * b;
        p = s * r;
        d[i + 1] = g + p;
        g = c * r - b;
        if (z != nullptr) {
          const std::size_t rows = z->rows();
          for (std::size_t kk = 0; kk < rows; ++kk) {
            const cplx f2 = (*z)(kk, i + 1);
            (*z)(kk, i + 1) = s * (*z)(kk, i) + c * f2;
            (*z)(kk, i) = c * (*z)(kk, i) - s * f2;
          }
        }
      }
      if (underflow) continue;
      d[l] -= p;
      e[l] = g;
      e[m] = 0.0;
    }
  }
}

}  // namespace

EigenDecomposition eigh_jacobi(const Matrix& h, bool want_vectors) {
  Matrix a;
  check_and_symmetrize(h, &a);
  const std::size_t n = a.rows();
  EigenDecomposition out;
  Matrix v;
  if (want_vectors) v = Matrix::identity(n);
  jacobi_in_place(a, want_vectors ? &v : nullptr, n);
  out.eigenvalues.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = a(i, i).real();
  if (want_vectors) out.eigenvectors = std::move(v);
  sort_descending(&out.eigenvalues, want_vectors ? &out.eigenvectors : nullptr);
  return out;
}

EigenDecomposition eigh_tridiagonal_ql(const Matrix& h, bool want_vectors) {
  Matrix a;
  check_and_symmetrize(h, &a);
  const std::size_t n = a.rows();
  std::vector<double> d, e;
  std::vector<cplx> phases;
  std::vector<Householder> reflectors;
  tridiagonalize(a, n, &d, &e, &phases,
                 want_vectors ? &reflectors : nullptr);

  EigenDecomposition out;
  if (!want_vectors) {
    tridiagonal_ql(d, e, n, nullptr);
    out.eigenvalues = std::move(d);
    sort_descending(&out.eigenvalues, nullptr);
    return out;
  }

  Matrix m = Matrix::diag_complex(phases);
  tridiagonal_ql(d, e, n, &m);
  // Back-transform: U = (H_0 H_1 ... ) * (phases * Z), applied in reverse.
  for (auto it = reflectors.rbegin(); it != reflectors.rend(); ++it) {
    const std::size_t k = it->k;
    const std::size_t len = it->v.size();
    par::parallel_for(
        n,
        [&](std::size_t col) {
          cplx acc = 0.0;
          for (std::size_t i = 0; i < len; ++i)
            acc += std::conj(it->v[i]) * m(k + 1 + i, col);
          acc *= it->tau;
          for (std::size_t i = 0; i < len; ++i)
            m(k + 1 + i, col) -= it->v[i] * acc;
        },
        kParallelGrain);
  }
  out.eigenvalues = std::move(d);
  out.eigenvectors = std::move(m);
  sort_descending(&out.eigenvalues, &out.eigenvectors);
  return out;
}

EigenDecomposition eigh(const Matrix& h) {
  if (h.rows() <= kJacobiMaxDim) return eigh_jacobi(h, true);
  return eigh_tridiagonal_ql(h, true);
}

std::vector<double> eigvalsh(const Matrix& h) {
  if (h.rows() <= kJacobiMaxDim) return eigh_jacobi(h, false).eigenvalues;
  return eigh_tridiagonal_ql(h, false).eigenvalues;
}

}  // namespace qdp
