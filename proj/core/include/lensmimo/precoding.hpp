// SPDX-License-Identifier: Apache-2.0
//
// lensmimo - beam domain optical massive MIMO simulation toolkit
// Copyright (C) 2026 lensmimo developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
//
// Linear precoders (MRT, RZF), per-user SINR, the gamma-parameterized
// approximate sum rate with its uniform/Gaussian bounds, and the closed-form
// large-array rate expressions. Noise variance is fixed at 1; rates are
// reported in bits per channel use.

#ifndef LENSMIMO_PRECODING_HPP
#define LENSMIMO_PRECODING_HPP

#include <utility>

#include <armadillo>

#include "lensmimo/errors.hpp"

namespace lensmimo
{

// Lower end of the valid rate coefficient range, from the uniform input
// distribution; the upper end (Gaussian) is 1.
inline double gamma_lower_bound()
{
    return 6.0 / (arma::datum::pi * arma::datum::e);
}

inline void validate_gamma(double gamma)
{
    if (gamma < gamma_lower_bound() - 1e-12 || gamma > 1.0 + 1e-12)
        throw ConfigError("gamma must lie in [6/(pi e), 1]");
}

enum class PrecoderScheme
{
    Mrt,
    Rzf
};

struct PrecoderSet
{
    arma::mat W;   // M^2 x K, column k = w_k
    PrecoderScheme scheme = PrecoderScheme::Mrt;
    double alpha = 0.0; // RZF regularization (unused for MRT)
    double beta = 0.0;  // power normalization actually applied
};

// w_k = sqrt(beta) h_k with beta = P / sum_k ||h_k||^2.
PrecoderSet mrt(const arma::mat &H, double P);

// w_k = sqrt(beta) (H^T H + alpha I)^-1 h_k, total power normalized to P.
// Solved in the K x K dual form, so large arrays stay cheap.
PrecoderSet rzf(const arma::mat &H, double P, double alpha);

// SINR_k = (h_k^T w_k)^2 / (1 + sum_{k' != k} (h_k^T w_k')^2).
arma::vec sinr(const arma::mat &H, const arma::mat &W);

struct RateReport
{
    arma::vec sinr;
    double r_lb = 0.0;  // gamma = 6/(pi e)
    double r_ub = 0.0;  // gamma = 1
    double r_sum = 0.0; // at the requested gamma
};

RateReport rates(const arma::vec &sinr_values, double gamma);

// Large-array closed forms: (MRT, RZF) sum rates in bits per channel use.
std::pair<double, double> asymptotic_linear_rates(const arma::vec &g, int M, double P,
                                                  double gamma);

// Uniformly rescales W so that max_m sum_k [w_k w_k^T]_mm equals p.
PrecoderSet scale_to_per_led(PrecoderSet set, double p);

} // namespace lensmimo

#endif
