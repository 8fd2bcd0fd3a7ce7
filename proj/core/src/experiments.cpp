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

#include "lensmimo/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "lensmimo/precoding.hpp"

namespace lensmimo
{

namespace
{

const char *kVersion = "lensmimo 0.1.0";

// Static-chunk worker pool; each index is processed exactly once and the
// caller owns per-index output slots, so scheduling cannot affect results.
void parallel_for(std::size_t n, const std::function<void(std::size_t)> &fn)
{
    const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    const std::size_t workers = std::min(hw, n);
    if (workers <= 1)
    {
        for (std::size_t i = 0; i < n; ++i)
            fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < n; i += workers)
                fn(i);
        });
    for (auto &t : pool)
        t.join();
}

struct MeanStd
{
    double mean = 0.0;
    double stdev = 0.0;
};

MeanStd mean_std(const std::vector<double> &xs)
{
    MeanStd out;
    if (xs.empty())
        return out;
    for (const double x : xs)
        out.mean += x;
    out.mean /= static_cast<double>(xs.size());
    if (xs.size() > 1)
    {
        double acc = 0.0;
        for (const double x : xs)
            acc += (x - out.mean) * (x - out.mean);
        out.stdev = std::sqrt(acc / static_cast<double>(xs.size() - 1));
    }
    return out;
}

double median(std::vector<double> xs)
{
    if (xs.empty())
        return 0.0;
    std::sort(xs.begin(), xs.end());
    const std::size_t n = xs.size();
    return n % 2 ? xs[n / 2] : 0.5 * (xs[n / 2 - 1] + xs[n / 2]);
}

double bdma_ad_rate(const ChannelMatrix &ch, const ScenarioConfig &cfg, PowerBudget::Kind kind,
                    double P)
{
    const int M = static_cast<int>(std::lround(std::sqrt(static_cast<double>(ch.beams()))));
    const std::vector<arma::uword> beams = assign_dominant_beams(ch);
    std::vector<arma::vec> diags(ch.users(), arma::zeros(ch.beams()));
    if (kind == PowerBudget::Kind::Total)
    {
        const WaterFillResult wf = waterfill_total(ch.g, M, P, cfg.gamma_value());
        for (arma::uword k = 0; k < ch.users(); ++k)
            diags[k](beams[k]) = wf.levels(k);
    }
    else
    {
        const double p = P / static_cast<double>(ch.beams());
        for (arma::uword k = 0; k < ch.users(); ++k)
            diags[k](beams[k]) = p;
    }
    return sum_rate_cov(ch.H, CovarianceSet::diagonal(ch.beams(), std::move(diags)),
                        cfg.gamma_value());
}

} // namespace

double evaluate_scheme(Scheme scheme, const ChannelMatrix &ch, const ChannelMatrix &ch_nolens,
                       const ScenarioConfig &cfg, PowerBudget::Kind kind, double P)
{
    const double gamma = cfg.gamma_value();
    const double M2 = static_cast<double>(ch.beams());
    const double p = P / M2;
    const int M = static_cast<int>(std::lround(std::sqrt(M2)));
    const PowerBudget budget =
        kind == PowerBudget::Kind::Total ? PowerBudget::total(P) : PowerBudget::per_led(p);

    try
    {
        switch (scheme)
        {
        case Scheme::Mrt:
        {
            PrecoderSet set = mrt(ch.H, P);
            if (kind == PowerBudget::Kind::PerLed)
                set = scale_to_per_led(std::move(set), p);
            return rates(sinr(ch.H, set.W), gamma).r_sum;
        }
        case Scheme::Rzf:
        {
            PrecoderSet set = rzf(ch.H, P, static_cast<double>(ch.users()) / P);
            if (kind == PowerBudget::Kind::PerLed)
                set = scale_to_per_led(std::move(set), p);
            return rates(sinr(ch.H, set.W), gamma).r_sum;
        }
        case Scheme::Cccp:
            return cccp(ch.H, budget, gamma, cfg.cccp).objective_trace.back();
        case Scheme::BdmaBa:
        {
            const BeamAllocation ba =
                beam_allocation_greedy(arma::square(ch.H), budget, cfg.B_max, gamma);
            return sum_rate_cov(ch.H, ba.to_covariance(), gamma);
        }
        case Scheme::BdmaAd:
            return bdma_ad_rate(ch, cfg, kind, P);
        case Scheme::NoLens:
            return no_lens_optimum(ch_nolens.g, M, budget, gamma).rate_bits;
        }
    }
    catch (const DegenerateChannel &)
    {
        return 0.0; // nobody gets served when every row is zero
    }
    return 0.0;
}

RunReport run(const ScenarioConfig &cfg)
{
    cfg.validate();
    const bool wants_cccp =
        std::find(cfg.schemes.begin(), cfg.schemes.end(), Scheme::Cccp) != cfg.schemes.end();
    if (wants_cccp && (cfg.M > cfg.cccp_max_m || cfg.K > cfg.cccp_max_k))
        throw ScaleError("run: cccp requested beyond its size cap (M <= " +
                         std::to_string(cfg.cccp_max_m) +
                         ", K <= " + std::to_string(cfg.cccp_max_k) + ")");

    const LedArraySpec array = cfg.array();
    const std::size_t R = static_cast<std::size_t>(cfg.realizations);
    const std::size_t S = cfg.snr_db.size();
    const std::size_t C = cfg.schemes.size();

    // rate[(r * S + s) * C + c]
    std::vector<double> rate(R * S * C, 0.0);
    parallel_for(R, [&](std::size_t r) {
        const std::vector<UserTerminal> uts = cfg.drop_users(r);
        const ChannelMatrix ch = channel_matrix(array, uts, cfg.bs_position());
        const ChannelMatrix ch_nolens = channel_no_lens(array, uts, cfg.bs_position());
        for (std::size_t s = 0; s < S; ++s)
        {
            const double P = cfg.sigma2 * std::pow(10.0, cfg.snr_db[s] / 10.0);
            for (std::size_t c = 0; c < C; ++c)
                rate[(r * S + s) * C + c] =
                    evaluate_scheme(cfg.schemes[c], ch, ch_nolens, cfg, cfg.budget, P);
        }
    });

    RunReport report;
    report.seed = cfg.seed;
    report.cfg_hash = config_hash(cfg);
    report.version = kVersion;
    for (std::size_t c = 0; c < C; ++c)
        for (std::size_t s = 0; s < S; ++s)
        {
            std::vector<double> xs(R);
            for (std::size_t r = 0; r < R; ++r)
                xs[r] = rate[(r * S + s) * C + c];
            const MeanStd ms = mean_std(xs);
            RateRow row;
            row.scheme = cfg.schemes[c];
            row.constraint = cfg.budget;
            row.snr_db = cfg.snr_db[s];
            row.M = cfg.M;
            row.K = cfg.K;
            row.mean_rate_bits = ms.mean;
            row.std_rate_bits = ms.stdev;
            row.realizations = static_cast<int>(R);
            report.rates.push_back(row);
        }
    return report;
}

RunReport sweep_m(const ScenarioConfig &cfg, const std::vector<int> &m_list)
{
    cfg.validate();
    if (m_list.empty())
        throw ConfigError("sweep_m: M list must not be empty");
    for (std::size_t i = 1; i < m_list.size(); ++i)
        if (m_list[i] <= m_list[i - 1])
            throw ConfigError("sweep_m: M list must ascend");

    const std::vector<Scheme> schemes = {Scheme::BdmaBa, Scheme::BdmaAd, Scheme::NoLens};
    const std::vector<PowerBudget::Kind> kinds = {PowerBudget::Kind::Total,
                                                  PowerBudget::Kind::PerLed};
    const std::size_t R = static_cast<std::size_t>(cfg.realizations);
    const std::size_t S = cfg.snr_db.size();

    RunReport report;
    report.seed = cfg.seed;
    report.cfg_hash = config_hash(cfg);
    report.version = kVersion;

    for (const int M : m_list)
    {
        const LedArraySpec array = cfg.array_for_m(M);
        // rate[((r * S + s) * kinds + b) * schemes + c]
        std::vector<double> rate(R * S * kinds.size() * schemes.size(), 0.0);
        parallel_for(R, [&](std::size_t r) {
            const std::vector<UserTerminal> uts = cfg.drop_users(r);
            const ChannelMatrix ch = channel_matrix(array, uts, cfg.bs_position());
            const ChannelMatrix ch_nolens = channel_no_lens(array, uts, cfg.bs_position());
            for (std::size_t s = 0; s < S; ++s)
            {
                const double P = cfg.sigma2 * std::pow(10.0, cfg.snr_db[s] / 10.0);
                for (std::size_t b = 0; b < kinds.size(); ++b)
                    for (std::size_t c = 0; c < schemes.size(); ++c)
                        rate[((r * S + s) * kinds.size() + b) * schemes.size() + c] =
                            evaluate_scheme(schemes[c], ch, ch_nolens, cfg, kinds[b], P);
            }
        });

        for (std::size_t b = 0; b < kinds.size(); ++b)
            for (std::size_t s = 0; s < S; ++s)
            {
                for (std::size_t c = 0; c < schemes.size(); ++c)
                {
                    std::vector<double> xs(R);
                    for (std::size_t r = 0; r < R; ++r)
                        xs[r] = rate[((r * S + s) * kinds.size() + b) * schemes.size() + c];
                    const MeanStd ms = mean_std(xs);
                    RateRow row;
                    row.scheme = schemes[c];
                    row.constraint = kinds[b];
                    row.snr_db = cfg.snr_db[s];
                    row.M = M;
                    row.K = cfg.K;
                    row.mean_rate_bits = ms.mean;
                    row.std_rate_bits = ms.stdev;
                    row.realizations = static_cast<int>(R);
                    report.rates.push_back(row);
                }
                std::vector<double> ratios(R);
                for (std::size_t r = 0; r < R; ++r)
                {
                    const double ba = rate[((r * S + s) * kinds.size() + b) * schemes.size() + 0];
                    const double nl = rate[((r * S + s) * kinds.size() + b) * schemes.size() + 2];
                    ratios[r] = nl > 0.0 ? ba / nl : 0.0;
                }
                RatioRow rr;
                rr.constraint = kinds[b];
                rr.snr_db = cfg.snr_db[s];
                rr.M = M;
                rr.K = cfg.K;
                rr.ratio_mean = mean_std(ratios).mean;
                rr.ratio_median = median(ratios);
                rr.realizations = static_cast<int>(R);
                report.ratios.push_back(rr);
            }
    }
    return report;
}

} // namespace lensmimo
