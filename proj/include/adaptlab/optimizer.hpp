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

#pragma once

#include "adaptlab/core/random.hpp"

#include <Eigen/Dense>

#include <functional>

namespace adaptlab {

struct BfgsOptions {
  double grad_tol = 1e-10;      // stop when ||grad||_2 falls below
  int max_iterations = 500;     // per descent, restarts not included
  int max_restarts = 3;
  double restart_grad = 1e-5;   // restart only if a descent ends above this
  double perturbation = 0.1;    // restarts draw x_best + U[-p, p]
};

struct BfgsResult {
  Eigen::VectorXd x;
  double value = 0.0;
  double grad_norm = 0.0;
  int iterations = 0;  // summed over all descents
  int restarts = 0;
  bool converged = false;
};

/// f(x, grad) returns the objective and writes the gradient into grad.
using Objective = std::function<double(const Eigen::VectorXd&, Eigen::VectorXd&)>;

/// BFGS on the inverse Hessian with Armijo backtracking. A step whose change
/// in f is at roundoff level is still taken if it shrinks the gradient. The
/// result is never worse than x0.
BfgsResult minimize_bfgs(const Objective& f, const Eigen::VectorXd& x0, const BfgsOptions& options,
                         Rng& rng);

}  // namespace adaptlab
