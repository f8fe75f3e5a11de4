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

#include "adaptlab/optimizer.hpp"

#include <cmath>
#include <limits>

namespace adaptlab {
namespace {

struct Descent {
  Eigen::VectorXd x;
  double value;
  double grad_norm;
  int iterations;
  bool converged;
};

Descent descend(const Objective& f, Eigen::VectorXd x, const BfgsOptions& opt) {
  const Eigen::Index n = x.size();
  Eigen::VectorXd g(n);
  double fx = f(x, g);
  Descent out{x, fx, g.norm(), 0, false};
  if (n == 0 || g.norm() < opt.grad_tol) {
    out.converged = true;
    return out;
  }

  Eigen::MatrixXd hinv = Eigen::MatrixXd::Identity(n, n);
  Eigen::VectorXd x_new(n);
  Eigen::VectorXd g_new(n);
  constexpr double kArmijo = 1e-4;
  constexpr double kEps = std::numeric_limits<double>::epsilon();

  int it = 0;
  for (; it < opt.max_iterations; ++it) {
    Eigen::VectorXd d = -hinv * g;
    double slope = g.dot(d);
    if (!(slope < 0.0)) {
      hinv.setIdentity();
      d = -g;
      slope = -g.squaredNorm();
    }

    double alpha = 1.0;
    bool accepted = false;
    double f_new = fx;
    for (int k = 0; k < 60; ++k) {
      x_new = x + alpha * d;
      f_new = f(x_new, g_new);
      if (f_new <= fx + kArmijo * alpha * slope) {
        accepted = true;
        break;
      }
      // Near the minimum the decrease drowns in roundoff; take the step if
      // it does not raise f beyond noise and it improves the gradient.
      if (f_new <= fx + 8.0 * kEps * std::abs(fx) && g_new.norm() < g.norm()) {
        accepted = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!accepted) break;

    const Eigen::VectorXd s = x_new - x;
    const Eigen::VectorXd y = g_new - g;
    x = x_new;
    g = g_new;
    fx = f_new;

    if (g.norm() < opt.grad_tol) {
      ++it;
      out = {x, fx, g.norm(), it, true};
      return out;
    }

    const double sy = s.dot(y);
    if (sy > 1e-14 * s.norm() * y.norm()) {
      if (it == 0) hinv *= sy / y.squaredNorm();
      const double rho = 1.0 / sy;
      const Eigen::VectorXd hy = hinv * y;
      hinv += ((sy + y.dot(hy)) * rho * rho) * (s * s.transpose()) -
              rho * (hy * s.transpose() + s * hy.transpose());
    }
  }
  out = {x, fx, g.norm(), it, false};
  return out;
}

}  // namespace

BfgsResult minimize_bfgs(const Objective& f, const Eigen::VectorXd& x0, const BfgsOptions& options,
                         Rng& rng) {
  Descent best = descend(f, x0, options);
  BfgsResult r;
  r.iterations = best.iterations;
  while (!best.converged && best.grad_norm > options.restart_grad && r.restarts < options.max_restarts) {
    ++r.restarts;
    Eigen::VectorXd start = best.x;
    for (Eigen::Index i = 0; i < start.size(); ++i) {
      start[i] += rng.uniform(-options.perturbation, options.perturbation);
    }
    Descent trial = descend(f, start, options);
    r.iterations += trial.iterations;
    if (trial.value < best.value) best = std::move(trial);
  }
  r.x = std::move(best.x);
  r.value = best.value;
  r.grad_norm = best.grad_norm;
  r.converged = best.converged;
  return r;
}

}  // namespace adaptlab
