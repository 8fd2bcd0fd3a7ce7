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

#include "lensmimo/precoding.hpp"

#include <cmath>

namespace lensmimo
{

PrecoderSet mrt(const arma::mat &H, double P)
{
    const double denom = arma::accu(H % H);
    if (denom <= 0.0)
        throw DegenerateChannel("mrt: all channel rows are zero");
    PrecoderSet set;
    set.scheme = PrecoderScheme::Mrt;
    set.beta = P / denom;
    set.W = std::sqrt(set.beta) * H.t();
    return set;
}

PrecoderSet rzf(const arma::mat &H, double P, double alpha)
{
    if (alpha <= 0.0)
        throw ConfigError("rzf: alpha must be positive");
    if (arma::accu(H % H) <= 0.0)
        throw DegenerateChannel("rzf: all channel rows are zero");

    // (H^T H + alpha I)^-1 H^T = H^T (H H^T + alpha I)^-1
    const arma::uword K = H.n_rows;
    arma::mat G = H * H.t();
    G.diag() += alpha;
    arma::mat X;
    if (!arma::solve(X, G, arma::eye(K, K), arma::solve_opts::likely_sympd))
        throw SingularSystem("rzf: regularized Gram system is singular");

    PrecoderSet set;
    set.scheme = PrecoderScheme::Rzf;
    set.alpha = alpha;
    arma::mat W0 = H.t() * X;
    const double denom = arma::accu(W0 % W0);
    if (denom <= 0.0)
        throw DegenerateChannel("rzf: precoder collapsed to zero");
    set.beta = P / denom;
    set.W = std::sqrt(set.beta) * W0;
    return set;
}

arma::vec sinr(const arma::mat &H, const arma::mat &W)
{
    const arma::mat A = H * W; // A(k, k') = h_k^T w_k'
    const arma::uword K = H.n_rows;
    arma::vec out(K);
    for (arma::uword k = 0; k < K; ++k)
    {
        double interference = 0.0;
        for (arma::uword j = 0; j < K; ++j)
            if (j != k)
                interference += A(k, j) * A(k, j);
        out(k) = A(k, k) * A(k, k) / (1.0 + interference);
    }
    return out;
}

RateReport rates(const arma::vec &sinr_values, double gamma)
{
    validate_gamma(gamma);
    auto sum_at = [&](double g) {
        double acc = 0.0;
        for (const double s : sinr_values)
            acc += 0.5 * std::log2(1.0 + g * s);
        return acc;
    };
    RateReport rep;
    rep.sinr = sinr_values;
    rep.r_lb = sum_at(gamma_lower_bound());
    rep.r_ub = sum_at(1.0);
    rep.r_sum = sum_at(gamma);
    return rep;
}

std::pair<double, double> asymptotic_linear_rates(const arma::vec &g, int M, double P,
                                                  double gamma)
{
    if (g.min() <= 0.0)
        throw std::domain_error("asymptotic_linear_rates: gains must be positive");
    const double M4 = std::pow(static_cast<double>(M), 4);
    const double sum_g2 = arma::accu(g % g);
    const double sum_ginv2 = arma::accu(1.0 / (g % g));
    double mrt_rate = 0.0;
    double rzf_rate = 0.0;
    for (const double gk : g)
    {
        mrt_rate += 0.5 * std::log2(gamma * P * M4 * std::pow(gk, 4) / sum_g2);
        rzf_rate += 0.5 * std::log2(gamma * P * M4 / sum_ginv2);
    }
    return {mrt_rate, rzf_rate};
}

PrecoderSet scale_to_per_led(PrecoderSet set, double p)
{
    const arma::vec led_power = arma::sum(set.W % set.W, 1);
    const double worst = led_power.max();
    if (worst <= 0.0)
        throw DegenerateChannel("scale_to_per_led: zero precoder");
    const double s2 = p / worst;
    set.W *= std::sqrt(s2);
    set.beta *= s2;
    return set;
}

} // namespace lensmimo
