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

#include "qdp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "qdp/matrix.hpp"

namespace qdp {

namespace {

struct GaussRule {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};

// Gauss-Legendre nodes as roots of P_n found by Newton iteration from the
// Chebyshev initial guess; weights via w = 2 / ((1-x^2) P_n'(x)^2).
GaussRule make_rule(int n) {
  GaussRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) {
        // one polishing step after convergence
        p0 = 1.0;
        p1 = x;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (x * p1 - p0) / (x * x - 1.0);
        break;
      }
    }
    rule.nodes[i] = x;
    rule.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return rule;
}

const GaussRule& rule7() {
  static const GaussRule r = make_rule(7);
  return r;
}

const GaussRule& rule15() {
  static const GaussRule r = make_rule(15);
  return r;
}

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment evaluate_segment(const std::function<double(double)>& f, double a,
                         double b, long* evals) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double coarse = 0.0;
  for (std::size_t i = 0; i < rule7().nodes.size(); ++i)
    coarse += rule7().weights[i] * f(mid + half * rule7().nodes[i]);
  double fine = 0.0;
  for (std::size_t i = 0; i < rule15().nodes.size(); ++i)
    fine += rule15().weights[i] * f(mid + half * rule15().nodes[i]);
  *evals += 22;
  coarse *= half;
  fine *= half;
  return Segment{a, b, fine, std::abs(fine - coarse)};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a,
                           double b, const QuadratureConfig& cfg,
                           const std::vector<double>& breakpoints) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0) || cfg.max_subdivisions < 1)
    throw Error(ErrorKind::kRangeViolation,
                "quadrature config: tolerances must be positive and "
                "max_subdivisions >= 1");
  QuadratureResult result;
  if (!(b > a)) return result;

  std::vector<double> edges = {a};
  for (double x : breakpoints)
    if (x > a && x < b) edges.push_back(x);
  edges.push_back(b);
  std::sort(edges.begin(), edges.end());

  std::priority_queue<Segment> queue;
  double total = 0.0;
  double error = 0.0;
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    if (!(edges[i + 1] > edges[i])) continue;
    Segment s = evaluate_segment(f, edges[i], edges[i + 1], &result.evaluations);
    total += s.value;
    error += s.error;
    queue.push(s);
  }

  int subdivisions = 0;
  while (error > cfg.abs_tol && error > cfg.rel_tol * std::abs(total)) {
    if (subdivisions++ >= cfg.max_subdivisions) {
      result.converged = false;
      break;
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = evaluate_segment(f, worst.a, mid, &result.evaluations);
    const Segment right = evaluate_segment(f, mid, worst.b, &result.evaluations);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
  }

  // refresh the accumulated sums to kill cancellation drift
  total = 0.0;
  error = 0.0;
  while (!queue.empty()) {
    total += queue.top().value;
    error += queue.top().error;
    queue.pop();
  }
  result.value = total;
  result.abs_error = error;
  return result;
}

}  // namespace qdp
