// Copyright 2026 The adaptlab Authors
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

#include "adaptlab/core/linalg.hpp"

#include "adaptlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace adaptlab {
namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

}  // namespace

Eigensystem eigh(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("eigh: matrix must be square");
  if (m.size() > 0 && (m - m.adjoint()).cwiseAbs().maxCoeff() >= kHermitianTolerance) {
    throw ContractViolation("eigh: matrix is not Hermitian");
  }
  const Eigen::Index n = m.rows();
  Matrix a = 0.5 * (m + m.adjoint());
  Matrix v = Matrix::Identity(n, n);
  const double tol = std::max(1e-12, 1e-15 * a.norm());
  constexpr int kMaxSweeps = 100;

  int sweep = 0;
  for (; sweep < kMaxSweeps && off_diagonal_norm(a) >= tol; ++sweep) {
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag == 0.0) continue;
        // Phase-rotate q so the pivot is real, then a real Jacobi rotation.
        const Complex phase = a(p, q) / mag;  // e^{i phi}
        const Complex e = std::conj(phase);   // D_qq = e^{-i phi}
        const double theta = 0.5 * (a(q, q).real() - a(p, p).real()) / mag;
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = D R: G_pp = c, G_pq = s, G_qp = -s e, G_qq = c e.
        const Complex gpp = c;
        const Complex gpq = s;
        const Complex gqp = -s * e;
        const Complex gqq = c * e;
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * gpp + akq * gqp;
          a(k, q) = akp * gpq + akq * gqq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (Eigen::Index k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * gpp + vkq * gqp;
          v(k, q) = vkp * gpq + vkq * gqq;
        }
      }
    }
  }
  if (off_diagonal_norm(a) >= tol) {
    throw ContractViolation("eigh: Jacobi iteration did not converge");
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() < a(j, j).real();
  });
  Eigensystem out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const Eigen::Index src = order[static_cast<std::size_t>(k)];
    out.values[k] = a(src, src).real();
    out.vectors.col(k) = v.col(src);
  }
  out.sweeps = sweep;
  return out;
}

Eigensystem eigh(const DenseOperator& m) { return eigh(m.matrix()); }

Vector fix_global_phase(Vector v) {
  Eigen::Index best = 0;
  double best_mag = -1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    // Small slack so near-ties resolve to the lowest index reproducibly.
    if (std::abs(v[i]) > best_mag + 1e-12) {
      best_mag = std::abs(v[i]);
      best = i;
    }
  }
  if (best_mag > 0.0) v *= std::conj(v[best]) / std::abs(v[best]);
  return v;
}

GroundState ground_state(const DenseOperator& h) {
  const Eigensystem es = eigh(h);
  const Eigen::Index dim = es.values.size();
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if ((Eigen::Index{1} << n) != dim || n < 1) throw DimensionError("ground_state: dimension is not 2^n");

  GroundState g;
  g.energy = es.values[0];
  g.state = QuantumState(n, fix_global_phase(es.vectors.col(0)));
  g.multiplicity = 1;
  while (g.multiplicity < dim && es.values[g.multiplicity] - es.values[0] < kDegeneracyGap) {
    ++g.multiplicity;
  }
  g.degenerate = g.multiplicity > 1;
  g.gap = dim > 1 ? es.values[1] - es.values[0] : 0.0;
  return g;
}

Matrix matrix_function_psd(const Matrix& m, const std::function<double(double)>& f) {
  const Eigensystem es = eigh(m);
  Eigen::VectorXd fl(es.values.size());
  for (Eigen::Index i = 0; i < es.values.size(); ++i) {
    double x = es.values[i];
    if (x < -1e-10) {
      throw ContractViolation("matrix is not positive semidefinite (eigenvalue " +
                              std::to_string(x) + ")");
    }
    if (x < 0.0) x = 0.0;
    fl[i] = f(x);
  }
  return es.vectors * fl.asDiagonal() * es.vectors.adjoint();
}

DenseOperator matrix_function_psd(const DensityMatrix& rho, const std::function<double(double)>& f) {
  return DenseOperator(matrix_function_psd(rho.matrix(), f));
}

}  // namespace adaptlab
