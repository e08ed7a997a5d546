// Copyright 2026 The csgeom Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "csgeom/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace csgeom {
namespace {

// (-1)^k (zeta(k) - 1) / k for k = 2..40, from 40-digit mpmath.
constexpr std::array<double, 39> kLogGammaSeries = {
    0.32246703342411321824,    -0.067352301053198095133,  0.020580808427784547879,
    -0.0073855510286739852663, 0.0028905103307415232858,  -0.0011927539117032609771,
    0.00050966952474304242234, -0.00022315475845357937976, 0.000099457512781808533715,
    -0.0000449262367381331417, 0.000020507212775670691553, -9.439488275268395904e-6,
    4.3748667899074878042e-6,  -2.0392157538013662368e-6, 9.5514121304074198329e-7,
    -4.4924691987645660433e-7, 2.1207184805554665869e-7,  -1.0043224823968099609e-7,
    4.7698101693639805658e-8,  -2.271109460894316491e-8,  1.0838659214896954091e-8,
    -5.1834750419700466551e-9, 2.4836745438024783172e-9,  -1.1921401405860912074e-9,
    5.7313672416788620133e-10, -2.7595228851242331452e-10, 1.3304764374244489481e-10,
    -6.4229645638381000221e-11, 3.1044247747322272762e-11, -1.5021384080754142171e-11,
    7.2759744802390796625e-12, -3.5277424765759150836e-12, 1.7119917905596179086e-12,
    -8.3153858414202848198e-13, 4.0422005252894400655e-13, -1.9664756310966164904e-13,
    9.5736303878385557638e-14, -4.6640760264283742246e-14, 2.2737369600659723206e-14,
};

// ln Gamma(1 + z) = -ln(1 + z) + z (1 - gamma) + sum_k c_k z^k, |z| <= 0.5.
// Keeps full relative accuracy through the zero at z = 0.
double log_gamma_1p_series(double z) {
  double sum = 0.0;
  for (auto it = kLogGammaSeries.rbegin(); it != kLogGammaSeries.rend(); ++it) sum = (sum + *it) * z;
  sum *= z;
  return -std::log1p(z) + z * (1.0 - std::numbers::egamma) + sum;
}

// Lanczos approximation, g = 7, nine coefficients.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};

double log_gamma_lanczos(double x) {
  const double xm1 = x - 1.0;
  double series = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) series += kLanczos[i] / (xm1 + static_cast<double>(i));
  const double t = xm1 + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (xm1 + 0.5) * std::log(t) - t + std::log(series);
}

}  // namespace

double log_gamma(double x) {
  if (!(std::isfinite(x) && x > 0.0)) throw std::invalid_argument("log_gamma requires a finite x > 0");
  if (x < 0.5) return log_gamma_1p_series(x) - std::log(x);
  if (x < 1.5) return log_gamma_1p_series(x - 1.0);
  if (x < 2.5) return std::log1p(x - 2.0) + log_gamma_1p_series(x - 2.0);
  return log_gamma_lanczos(x);
}

double log_beta(double a, double b) {
  if (!(std::isfinite(a) && a > 0.0 && std::isfinite(b) && b > 0.0)) {
    throw std::invalid_argument("log_beta requires finite a, b > 0");
  }
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

}  // namespace csgeom
