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
// Monte Carlo orchestration: per-realization channel builds, per-scheme
// sum-rate evaluation across the SNR sweep, array-size sweeps with the
// BDMA/no-lens rate ratios, and order-stable aggregation. Realizations fan
// out to a worker pool; results are merged by realization index, so reports
// are byte-identical for a fixed config and seed regardless of thread count.

#ifndef LENSMIMO_EXPERIMENTS_HPP
#define LENSMIMO_EXPERIMENTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lensmimo/scenario.hpp"

namespace lensmimo
{

struct RateRow
{
    Scheme scheme = Scheme::Mrt;
    PowerBudget::Kind constraint = PowerBudget::Kind::Total;
    double snr_db = 0.0;
    int M = 0;
    int K = 0;
    double mean_rate_bits = 0.0;
    double std_rate_bits = 0.0; // sample standard deviation
    int realizations = 0;
};

struct RatioRow
{
    PowerBudget::Kind constraint = PowerBudget::Kind::Total;
    double snr_db = 0.0;
    int M = 0;
    int K = 0;
    double ratio_mean = 0.0;
    double ratio_median = 0.0;
    int realizations = 0;
};

struct RunReport
{
    std::vector<RateRow> rates;
    std::vector<RatioRow> ratios; // filled by sweep_m
    std::uint64_t seed = 0;
    std::uint64_t cfg_hash = 0;
    std::string version;
};

// Sum rate of one scheme on one channel realization at total power P
// (PerLed uses p = P / M^2). An all-zero channel yields rate 0.
double evaluate_scheme(Scheme scheme, const ChannelMatrix &ch, const ChannelMatrix &ch_nolens,
                       const ScenarioConfig &cfg, PowerBudget::Kind kind, double P);

// Full sweep over realizations x SNR points for every configured scheme.
// Throws ScaleError when cccp is requested beyond the configured size cap.
RunReport run(const ScenarioConfig &cfg);

// Re-derives the array per M (omega fixed) and evaluates the beam-domain
// schemes, the no-lens baseline and the BDMA/no-lens ratio per budget.
RunReport sweep_m(const ScenarioConfig &cfg, const std::vector<int> &m_list);

} // namespace lensmimo

#endif
