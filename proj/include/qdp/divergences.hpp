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

#ifndef QDP_DIVERGENCES_HPP_
#define QDP_DIVERGENCES_HPP_

#include <functional>
#include <limits>

#include "qdp/quadrature.hpp"
#include "qdp/states.hpp"

namespace qdp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Method { kClosedForm, kQuadrature };

struct DivergenceValue {
  double value = 0.0;
  double abs_error_estimate = 0.0;
  Method method = Method::kClosedForm;
};

// E_gamma(rho || sigma) = tr(rho - gamma sigma)_+. At gamma = 1 this is the
// trace distance.
DivergenceValue hockey_stick(const DensityMatrix& rho, const DensityMatrix& sigma,
                             double gamma);
double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// || sqrt(rho) sqrt(sigma) ||_1, in [0, 1].
DivergenceValue fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);
// sqrt(1 - F)
double bures_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// log of the largest eigenvalue of sigma^{-1/2} rho sigma^{-1/2} on sigma's
// support; +inf when supp(rho) is not contained in supp(sigma).
DivergenceValue max_relative_entropy(const DensityMatrix& rho,
                                     const DensityMatrix& sigma);

// Q_alpha = tr(rho^alpha sigma^{1-alpha}) together with the derived Renyi and
// Hellinger forms. alpha in (0,1) u (1,2].
struct PetzQuantities {
  double q_bar = 0.0;
  double d_bar = 0.0;
  double h_bar = 0.0;
};
PetzQuantities petz_quantities(const DensityMatrix& rho,
                               const DensityMatrix& sigma, double alpha);

// Sandwiched Renyi divergence, alpha in [1/2, 1) u (1, inf); equals
// -2 log F at alpha = 1/2.
DivergenceValue sandwiched_renyi(const DensityMatrix& rho,
                                 const DensityMatrix& sigma, double alpha);

// Hellinger/Renyi pair from the hockey-stick integral representation. Each
// side of the integral is truncated at gamma = exp(D_inf) of its direction;
// an infinite D_inf with alpha < 1 is handled by an analytic tail bound that
// is folded into the error estimate, and yields +inf for alpha > 1.
struct HellingerRenyi {
  DivergenceValue hellinger;
  DivergenceValue renyi;
};
HellingerRenyi integral_hellinger(const DensityMatrix& rho,
                                  const DensityMatrix& sigma, double alpha,
                                  const QuadratureConfig& cfg = {});

// Integral f-divergence from the second derivative of f. fpp must be
// nonnegative and finite on (0, exp(D_inf)].
DivergenceValue f_divergence_integral(const std::function<double(double)>& fpp,
                                      const DensityMatrix& rho,
                                      const DensityMatrix& sigma,
                                      const QuadratureConfig& cfg = {});

// Closed form in sigma's eigenbasis with the inverse-log-mean kernel;
// +inf when supp(rho) is not contained in supp(sigma).
DivergenceValue chi_squared(const DensityMatrix& rho, const DensityMatrix& sigma);

// Umegaki relative entropy on supports; +inf on support violation.
DivergenceValue relative_entropy(const DensityMatrix& rho,
                                 const DensityMatrix& sigma);

// p D(rho || M) + (1-p) D(sigma || M) with M the prior mixture. Always finite
// and bounded by the binary entropy h(p).
DivergenceValue jensen_shannon(const DensityMatrix& rho,
                               const DensityMatrix& sigma, double p);

double binary_entropy(double p);

}  // namespace qdp

#endif  // QDP_DIVERGENCES_HPP_
