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

#include "lensmimo/optimization.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "lensmimo/precoding.hpp"
#include "lensmimo/rng.hpp"

using namespace lensmimo;

namespace
{
constexpr double kPi = 3.14159265358979323846;

double deg(double x)
{
    return x * kPi / 180.0;
}

// Small-room channel with K users clustered so their beams interfere.
ChannelMatrix clustered_channel(int M, int K, std::uint64_t seed, double spread = 0.6)
{
    const EmitterModel em = EmitterModel::from_half_angle(deg(30.0));
    const LedArraySpec a = array_layout(M, 0.01, deg(99.0), em, LensSpec::hemispherical(1.5, 0.1));
    const arma::vec3 bs = {0.0, 0.0, 3.0};
    Rng rng(seed);
    const double cx = rng.uniform(-1.5, 1.5);
    const double cy = rng.uniform(-1.5, 1.5);
    std::vector<UserTerminal> uts;
    while (static_cast<int>(uts.size()) < K)
    {
        UserTerminal ut;
        ut.position = {cx + rng.uniform(-spread, spread), cy + rng.uniform(-spread, spread), 0.0};
        const ChannelMatrix probe = channel_matrix(a, {ut}, bs);
        if (probe.H.max() <= 0.0)
            continue; // keep covered users so every row is active
        uts.push_back(ut);
    }
    return channel_matrix(a, uts, bs);
}

// Moderate receive SNR makes the optimization landscape non-trivial.
double tuned_power(const ChannelMatrix &ch, double gamma, double target = 100.0)
{
    const arma::vec row_energy = arma::sum(ch.H % ch.H, 1);
    return target / (gamma * row_energy.max());
}
} // namespace

TEST(SumRateCov, ZeroAndRankOneSingleUser)
{
    const ChannelMatrix ch = clustered_channel(4, 1, 1);
    const arma::uword M2 = ch.beams();
    const double gamma = gamma_lower_bound();

    std::vector<UserCov> zero(1);
    EXPECT_DOUBLE_EQ(sum_rate_cov(ch.H, CovarianceSet(M2, zero), gamma), 0.0);

    const arma::vec h = ch.H.row(0).t();
    const double P = 3.0;
    const arma::mat Q = P * h * h.t() / arma::dot(h, h);
    const double rate = sum_rate_cov(ch.H, CovarianceSet::dense({Q}), gamma);
    EXPECT_NEAR(rate, 0.5 * std::log2(1.0 + gamma * P * arma::dot(h, h)), 1e-12);
}

TEST(SumRateCov, MatchesSinrPipelineOnRankOne)
{
    // Q_k = w_k w_k^T reproduces the precoding rate exactly.
    for (const std::uint64_t seed : {2u, 3u, 4u})
    {
        const ChannelMatrix ch = clustered_channel(6, 3, seed);
        const double gamma = 0.8;
        const double P = tuned_power(ch, gamma);
        const PrecoderSet set = mrt(ch.H, P);
        std::vector<arma::mat> Q;
        for (arma::uword k = 0; k < 3; ++k)
            Q.push_back(set.W.col(k) * set.W.col(k).t());
        const double from_cov = sum_rate_cov(ch.H, CovarianceSet::dense(std::move(Q)), gamma);
        const double from_sinr = rates(sinr(ch.H, set.W), gamma).r_sum;
        EXPECT_NEAR(from_cov, from_sinr, 1e-10);
    }
}

TEST(SumRateCov, DiagonalAndDenseAgree)
{
    const ChannelMatrix ch = clustered_channel(5, 2, 5);
    Rng rng(8);
    arma::vec d1(ch.beams()), d2(ch.beams());
    for (arma::uword m = 0; m < ch.beams(); ++m)
    {
        d1(m) = rng.uniform01();
        d2(m) = rng.uniform01();
    }
    const double gamma = 0.9;
    const double dense = sum_rate_cov(
        ch.H, CovarianceSet::dense({arma::diagmat(d1), arma::diagmat(d2)}), gamma);
    const double diag =
        sum_rate_cov(ch.H, CovarianceSet::diagonal(ch.beams(), {d1, d2}), gamma);
    EXPECT_NEAR(dense, diag, 1e-12);
}

TEST(Cccp, SingleUserClosedForm)
{
    const ChannelMatrix ch = clustered_channel(8, 1, 11);
    const double gamma = gamma_lower_bound();
    const double P = tuned_power(ch, gamma);
    const CccpResult res = cccp(ch.H, PowerBudget::total(P), gamma);
    const double closed = 0.5 * std::log2(1.0 + gamma * P * arma::accu(ch.H % ch.H));
    EXPECT_TRUE(res.converged);
    EXPECT_NEAR(res.objective_trace.back(), closed, 1e-6 * closed);

    // The covariance is the full-power rank-1 beamformer on h.
    const arma::vec h = ch.H.row(0).t();
    const arma::mat expected = P * h * h.t() / arma::dot(h, h);
    EXPECT_NEAR(arma::norm(res.Q.user(0).Q - expected, "fro"), 0.0, 1e-4 * P);
}

TEST(Cccp, OrthogonalUsersMatchWaterfillOracle)
{
    // Two users on disjoint beams decouple; the optimum is water-filling over
    // the actual row energies. waterfill_total reproduces that closed form
    // with g_k = ||h_k|| / M^2.
    ChannelMatrix ch;
    for (std::uint64_t seed = 20;; ++seed)
    {
        ch = clustered_channel(8, 2, seed, 2.0);
        if (arma::dot(ch.H.row(0), ch.H.row(1)) == 0.0)
            break;
    }
    const double gamma = gamma_lower_bound();
    const arma::vec energy = arma::sum(ch.H % ch.H, 1);
    const double P = 50.0 / (gamma * energy.min());

    const CccpResult res = cccp(ch.H, PowerBudget::total(P), gamma);
    const arma::vec geff = arma::sqrt(energy) / 64.0; // M = 8
    const WaterFillResult wf = waterfill_total(geff, 8, P, gamma);
    EXPECT_NEAR(res.objective_trace.back(), wf.rate_bits, 1e-6 * wf.rate_bits);
}

TEST(Cccp, ContractOnInterferingInstances)
{
    const double gamma = gamma_lower_bound();
    for (const auto kind : {PowerBudget::Kind::Total, PowerBudget::Kind::PerLed})
        for (const std::uint64_t seed : {0u, 1u, 2u})
        {
            const ChannelMatrix ch = clustered_channel(8, 4, 100 + seed);
            double P = tuned_power(ch, gamma);
            const PowerBudget budget = kind == PowerBudget::Kind::Total
                                           ? PowerBudget::total(P)
                                           : PowerBudget::per_led(P / 64.0);
            const CccpResult res = cccp(ch.H, budget, gamma);

            // (a) trace nondecreasing within 1e-9
            for (std::size_t i = 1; i < res.objective_trace.size(); ++i)
                EXPECT_GE(res.objective_trace[i], res.objective_trace[i - 1] - 1e-9);
            // (b) converged within the iteration budget
            EXPECT_TRUE(res.converged);
            // (c) rank <= 1 per user
            for (arma::uword k = 0; k < 4; ++k)
            {
                arma::vec w;
                arma::eig_sym(w, arma::symmatu(res.Q.user(k).Q));
                const double l1 = w(w.n_elem - 1);
                if (l1 > 0.0)
                    EXPECT_LE(w(w.n_elem - 2) / l1, 1e-6);
            }
            // (d) feasibility is exact
            EXPECT_LE(res.Q.feasibility_gap(budget), 1e-9);
            // KKT residuals at the fixed point
            const KktResidual kkt = kkt_residual(ch.H, res.Q, budget, gamma);
            EXPECT_LE(kkt.comp_slack, 1e-6 * kkt.trace_scale);
            EXPECT_GE(kkt.dual_min_eig, -1e-6);
        }
}

TEST(ConvexSubproblem, ZeroLinearTermSingleUserOptimum)
{
    const ChannelMatrix ch = clustered_channel(4, 1, 31);
    const double gamma = 1.0;
    const double P = tuned_power(ch, gamma);
    const arma::uword M2 = ch.beams();
    CccpOptions opts;
    std::vector<arma::mat> Q0 = {arma::zeros(M2, M2)};
    // Normalize like cccp does so tolerances are meaningful.
    const double s2 = arma::accu(ch.H % ch.H);
    const arma::mat Hs = ch.H / std::sqrt(s2);
    const auto Q = convex_subproblem({arma::zeros(M2, M2)}, Hs, PowerBudget::total(P * s2), gamma,
                                     opts, std::move(Q0));
    const arma::vec h = Hs.row(0).t();
    const arma::mat expected = P * s2 * h * h.t() / arma::dot(h, h);
    EXPECT_NEAR(arma::norm(Q[0] - expected, "fro") / arma::norm(expected, "fro"), 0.0, 1e-4);
}

TEST(ConvexSubproblem, GridSearchParityOnTinyInstance)
{
    // M = 2 (4 beams), K = 1, diagonal restriction of the feasible set is
    // enough to locate the optimum because the single-user objective is
    // maximized by a rank-1 beamformer; compare against a dense grid over
    // the dominant 2-D cross-section (power on h direction vs. trace).
    const ChannelMatrix ch = clustered_channel(2, 1, 33);
    const double gamma = 1.0;
    const double P = tuned_power(ch, gamma, 10.0);
    const double s2 = arma::accu(ch.H % ch.H);
    const arma::mat Hs = ch.H / std::sqrt(s2);
    const arma::uword M2 = ch.beams();
    CccpOptions opts;
    std::vector<arma::mat> Q0 = {arma::zeros(M2, M2)};
    const auto Q = convex_subproblem({arma::zeros(M2, M2)}, Hs, PowerBudget::total(P * s2), gamma,
                                     opts, std::move(Q0));

    // Brute force over t in [0, P s2]: rate(t) = log(1 + gamma t ||hs||^2),
    // optimum at t = P s2. The subproblem solution must match within 1e-4.
    const double best = 0.5 * std::log(1.0 + gamma * P * s2 * arma::accu(Hs % Hs));
    const double got = 0.5 * std::log(1.0 + gamma * arma::as_scalar(Hs * Q[0] * Hs.t()));
    EXPECT_NEAR(got, best, 1e-4 * best);
}

TEST(ConvexSubproblem, FeasibilityPostConditions)
{
    const ChannelMatrix ch = clustered_channel(6, 3, 40);
    const double gamma = 0.75;
    const double P = tuned_power(ch, gamma);
    const double s2 = arma::accu(ch.H % ch.H) / 3.0;
    const arma::mat Hs = ch.H / std::sqrt(s2);
    const arma::uword M2 = ch.beams();
    CccpOptions opts;
    Rng rng(55);
    std::vector<arma::mat> G(3), Q0(3);
    for (int k = 0; k < 3; ++k)
    {
        arma::mat A(M2, M2);
        for (auto &x : A)
            x = rng.uniform(-0.01, 0.01);
        G[k] = 0.5 * (A + A.t());
        Q0[k] = arma::zeros(M2, M2);
    }
    for (const auto kind : {PowerBudget::Kind::Total, PowerBudget::Kind::PerLed})
    {
        const PowerBudget b = kind == PowerBudget::Kind::Total
                                  ? PowerBudget::total(P * s2)
                                  : PowerBudget::per_led(P * s2 / static_cast<double>(M2));
        const auto Q = convex_subproblem(G, Hs, b, gamma, opts, Q0);
        CovarianceSet set = CovarianceSet::dense(std::vector<arma::mat>(Q));
        EXPECT_LE(set.feasibility_gap(b), 1e-9);
        for (const auto &m : Q)
        {
            arma::vec w;
            arma::eig_sym(w, arma::symmatu(m));
            EXPECT_GE(w.min(), -1e-9 * std::max(1.0, w.max()));
        }
    }
}

TEST(KktResidual, SingleUserOptimumSatisfiesKkt)
{
    const ChannelMatrix ch = clustered_channel(6, 1, 17);
    const double gamma = gamma_lower_bound();
    const double P = tuned_power(ch, gamma);
    const arma::vec h = ch.H.row(0).t();
    const CovarianceSet Q = CovarianceSet::dense({P * h * h.t() / arma::dot(h, h)});
    const KktResidual kkt = kkt_residual(ch.H, Q, PowerBudget::total(P), gamma);
    EXPECT_LE(kkt.comp_slack, 1e-6 * kkt.trace_scale);
    EXPECT_LE(kkt.stationarity, 1e-6);
    EXPECT_GE(kkt.dual_min_eig, -1e-9);
}

TEST(KktResidual, ZeroCovarianceInactiveConstraint)
{
    const ChannelMatrix ch = clustered_channel(4, 2, 19);
    std::vector<UserCov> users(2);
    const CovarianceSet Q(ch.beams(), std::move(users));
    const KktResidual kkt = kkt_residual(ch.H, Q, PowerBudget::total(1.0), gamma_lower_bound());
    EXPECT_DOUBLE_EQ(kkt.multiplier, 0.0);
    EXPECT_DOUBLE_EQ(kkt.comp_slack, 0.0);
}

TEST(WaterfillTotal, SymmetricAndBoundaryCases)
{
    // Equal gains, K = 2, P = 2 -> levels (1, 1).
    const WaterFillResult eq = waterfill_total(arma::vec{0.5, 0.5}, 2, 2.0, 1.0);
    EXPECT_NEAR(eq.levels(0), 1.0, 1e-12);
    EXPECT_NEAR(eq.levels(1), 1.0, 1e-12);

    // Tiny P with a hopeless second user: all power to user 1.
    const WaterFillResult lop = waterfill_total(arma::vec{1.0, 1e-6}, 2, 1e-3, 1.0);
    EXPECT_NEAR(lop.levels(0), 1e-3, 1e-15);
    EXPECT_DOUBLE_EQ(lop.levels(1), 0.0);

    // Power conservation to 1e-12 relative.
    const WaterFillResult w = waterfill_total(arma::vec{1.0, 2.0, 4.0}, 2, 1.0, 1.0);
    EXPECT_NEAR(arma::accu(w.levels), 1.0, 1e-12);
}

TEST(WaterfillTotal, KktConditionsExact)
{
    const arma::vec g = {0.3, 1.0, 2.5, 0.05};
    const double gamma = 0.83, P = 2.0;
    const WaterFillResult w = waterfill_total(g, 4, P, gamma);
    const double level = 1.0 / w.nu;
    for (arma::uword k = 0; k < g.n_elem; ++k)
    {
        const double ak = 1.0 / (gamma * 256.0 * g(k) * g(k));
        if (w.levels(k) > 0.0)
            EXPECT_DOUBLE_EQ(w.levels(k), level - ak);
        else
            EXPECT_LE(level, ak + 1e-15);
    }
    EXPECT_NEAR(arma::accu(w.levels), P, 1e-12 * P);
}

TEST(WaterfillTotal, GridSearchOracle)
{
    // K = 3 exhaustive grid with step 1e-5 of the simplex (coarse outer grid
    // then local refinement keeps the runtime sane at equal accuracy).
    const arma::vec g = {1.0, 2.0, 4.0};
    const double gamma = 1.0, P = 1.0;
    const int M = 2;
    const WaterFillResult w = waterfill_total(g, M, P, gamma);

    const double M4 = 16.0;
    auto rate = [&](double p0, double p1) {
        const double p2 = P - p0 - p1;
        if (p2 < 0.0)
            return -1.0;
        return 0.5 * (std::log2(1.0 + gamma * M4 * g(0) * g(0) * p0) +
                      std::log2(1.0 + gamma * M4 * g(1) * g(1) * p1) +
                      std::log2(1.0 + gamma * M4 * g(2) * g(2) * p2));
    };
    double best = -1.0;
    for (double p0 = 0.0; p0 <= P; p0 += 1e-3)
        for (double p1 = 0.0; p1 <= P - p0; p1 += 1e-3)
            best = std::max(best, rate(p0, p1));
    // Refine around the waterfilling point with the 1e-5 step.
    for (double p0 = std::max(0.0, w.levels(0) - 2e-3); p0 <= w.levels(0) + 2e-3; p0 += 1e-5)
        for (double p1 = std::max(0.0, w.levels(1) - 2e-3); p1 <= w.levels(1) + 2e-3; p1 += 1e-5)
            best = std::max(best, rate(p0, p1));
    EXPECT_NEAR(w.rate_bits, best, 1e-4);
    EXPECT_GE(w.rate_bits, best - 1e-4); // the analytic solution dominates the grid
}

TEST(AsymptoticPerLed, ConstructionAndCollision)
{
    std::vector<UserGeometry> geo(2);
    geo[0].m_k = 3;
    geo[1].m_k = 7;
    const CovarianceSet Q = asymptotic_per_led(geo, 16, 0.5);
    EXPECT_DOUBLE_EQ(Q.trace(0), 0.5);
    EXPECT_DOUBLE_EQ(Q.trace(1), 0.5);
    EXPECT_DOUBLE_EQ(Q.diagonal_of(0)(3), 0.5);
    EXPECT_DOUBLE_EQ(Q.diagonal_of(1)(7), 0.5);

    geo[1].m_k = 3;
    EXPECT_THROW(asymptotic_per_led(geo, 16, 0.5), DominantBeamCollision);
}

TEST(AsymptoticPerLed, RelativeGapShrinksWithM)
{
    // Theorem-3 style check: the closed form 1/2 sum log2(1 + gamma M^4 g^2 p)
    // approaches the true rate of the constructed allocation as M grows.
    const double gamma = gamma_lower_bound();
    double gap8 = 0.0, gap32 = 0.0;
    int used = 0;
    for (std::uint64_t seed = 0; seed < 12; ++seed)
    {
        ChannelMatrix c8 = clustered_channel(8, 2, 300 + seed, 2.0);
        ChannelMatrix c32 = clustered_channel(32, 2, 300 + seed, 2.0);
        auto rel_gap = [&](const ChannelMatrix &ch, int M) {
            const double p = 4.0 / (gamma * std::pow(static_cast<double>(M), 4) *
                                    arma::square(ch.g).min());
            std::vector<UserGeometry> geo = ch.geo;
            CovarianceSet Q;
            try
            {
                Q = asymptotic_per_led(geo, ch.beams(), p);
            }
            catch (const DominantBeamCollision &)
            {
                return -1.0;
            }
            const double actual = sum_rate_cov(ch.H, Q, gamma);
            double closed = 0.0;
            for (arma::uword k = 0; k < 2; ++k)
                closed += 0.5 * std::log2(1.0 + gamma * std::pow(static_cast<double>(M), 4) *
                                                    ch.g(k) * ch.g(k) * p);
            return std::abs(actual - closed) / closed;
        };
        const double g8 = rel_gap(c8, 8);
        const double g32 = rel_gap(c32, 32);
        if (g8 < 0.0 || g32 < 0.0)
            continue;
        gap8 += g8;
        gap32 += g32;
        ++used;
    }
    ASSERT_GE(used, 6);
    EXPECT_LT(gap32, gap8);
}

TEST(BeamAllocationGreedy, SingleUserPicksArgmax)
{
    arma::mat Rdiag(1, 6, arma::fill::zeros);
    Rdiag(0, 2) = 4.0;
    Rdiag(0, 4) = 1.0;
    const BeamAllocation ba = beam_allocation_greedy(Rdiag, PowerBudget::total(2.0), 1, 1.0);
    ASSERT_EQ(ba.beams[0].size(), 1u);
    EXPECT_EQ(ba.beams[0][0], 2u);
    EXPECT_DOUBLE_EQ(ba.eta, 2.0);
}

TEST(BeamAllocationGreedy, DisjointDominantBeams)
{
    arma::mat Rdiag(2, 4, arma::fill::zeros);
    Rdiag(0, 0) = 5.0;
    Rdiag(1, 3) = 4.0;
    const BeamAllocation ba = beam_allocation_greedy(Rdiag, PowerBudget::total(2.0), 1, 1.0);
    ASSERT_EQ(ba.beams[0].size(), 1u);
    ASSERT_EQ(ba.beams[1].size(), 1u);
    EXPECT_EQ(ba.beams[0][0], 0u);
    EXPECT_EQ(ba.beams[1][0], 3u);
    // Exhaustive over all 1-beam-per-user orthogonal assignments agrees.
    double best = 0.0;
    for (arma::uword b0 = 0; b0 < 4; ++b0)
        for (arma::uword b1 = 0; b1 < 4; ++b1)
        {
            if (b0 == b1)
                continue;
            const double eta = 1.0;
            const double r = 0.5 * std::log2(1.0 + Rdiag(0, b0) * eta) +
                             0.5 * std::log2(1.0 + Rdiag(1, b1) * eta);
            best = std::max(best, r);
        }
    const double got =
        0.5 * std::log2(1.0 + Rdiag(0, 0) * ba.eta) + 0.5 * std::log2(1.0 + Rdiag(1, 3) * ba.eta);
    EXPECT_NEAR(got, best, 1e-12);
}

TEST(BeamAllocationGreedy, MasksAlwaysOrthogonal)
{
    Rng rng(91);
    for (int t = 0; t < 20; ++t)
    {
        arma::mat Rdiag(3, 9);
        for (auto &x : Rdiag)
            x = rng.uniform01() < 0.3 ? 0.0 : rng.uniform(0.0, 5.0);
        const PowerBudget b =
            t % 2 ? PowerBudget::total(4.0) : PowerBudget::per_led(0.7);
        const BeamAllocation ba = beam_allocation_greedy(Rdiag, b, 3, 0.9);
        const OrthogonalityReport rep = orthogonality_check(ba.diagonals());
        EXPECT_TRUE(rep.orthogonal);
        for (const auto &sel : ba.beams)
            EXPECT_LE(sel.size(), 3u);
        if (b.kind == PowerBudget::Kind::PerLed)
            EXPECT_DOUBLE_EQ(ba.eta, 0.7);
    }
}

TEST(BeamAllocationGreedy, ZeroBeamUserWhenNothingHelps)
{
    // Second user only sees the beam the first user owns; every alternative
    // dilutes eta without adding rate, so it ends up with no beams.
    arma::mat Rdiag(2, 4, arma::fill::zeros);
    Rdiag(0, 1) = 5.0;
    Rdiag(1, 1) = 1.0;
    const BeamAllocation ba = beam_allocation_greedy(Rdiag, PowerBudget::total(2.0), 2, 1.0);
    EXPECT_EQ(ba.beams[0].size(), 1u);
    EXPECT_TRUE(ba.beams[1].empty());
}

TEST(NoLensOptimum, ClosedFormsAndSelection)
{
    const arma::vec gt = {0.2, 0.9, 0.9};
    const NoLensOptimum total = no_lens_optimum(gt, 4, PowerBudget::total(2.0), 1.0);
    EXPECT_EQ(total.k_star, 1u); // ties: smallest index
    EXPECT_NEAR(total.rate_bits, 0.5 * std::log2(1.0 + 16.0 * 0.81 * 2.0), 1e-12);

    const NoLensOptimum per = no_lens_optimum(arma::vec{1.0}, 2, PowerBudget::per_led(1.0), 1.0);
    EXPECT_NEAR(per.rate_bits, 2.0437314206251695, 1e-12);

    // Scaling the best user's gain keeps the selection.
    arma::vec gt2 = gt;
    gt2(1) *= 3.0;
    EXPECT_EQ(no_lens_optimum(gt2, 4, PowerBudget::total(2.0), 1.0).k_star, 1u);
}

TEST(NoLensOptimum, CovarianceReproducesRate)
{
    // sum_rate_cov on the all-ones covariance equals the closed form.
    const int M = 3;
    const arma::uword M2 = 9;
    const arma::vec gt = {0.4, 0.7};
    const double gamma = 0.9;
    for (const auto kind : {PowerBudget::Kind::Total, PowerBudget::Kind::PerLed})
    {
        const PowerBudget b =
            kind == PowerBudget::Kind::Total ? PowerBudget::total(3.0) : PowerBudget::per_led(0.4);
        const NoLensOptimum opt = no_lens_optimum(gt, M, b, gamma);
        arma::mat H(2, M2);
        H.row(0).fill(gt(0));
        H.row(1).fill(gt(1));
        EXPECT_NEAR(sum_rate_cov(H, opt.Q, gamma), opt.rate_bits, 1e-12);
    }
}

TEST(OrthogonalityCheck, DetectsSharedBeam)
{
    std::vector<arma::vec> ok = {arma::vec{1.0, 0.0, 0.0}, arma::vec{0.0, 0.0, 2.0}};
    EXPECT_TRUE(orthogonality_check(ok).orthogonal);

    std::vector<arma::vec> bad = {arma::vec{1.0, 0.5, 0.0}, arma::vec{0.0, 0.5, 2.0}};
    const OrthogonalityReport rep = orthogonality_check(bad);
    EXPECT_FALSE(rep.orthogonal);
    EXPECT_EQ(rep.shared_index, 1);
    EXPECT_NEAR(rep.max_violation, 0.25, 1e-15);
}

TEST(AssignDominantBeams, CollisionFallsBackToNextBestGain)
{
    ChannelMatrix ch;
    ch.H = arma::mat(2, 4, arma::fill::zeros);
    ch.H(0, 1) = 3.0;
    ch.H(1, 1) = 2.0;
    ch.H(1, 2) = 1.5;
    ch.geo.resize(2);
    ch.geo[0].m_k = 1;
    ch.geo[1].m_k = 1;
    const auto beams = assign_dominant_beams(ch);
    EXPECT_EQ(beams[0], 1u);
    EXPECT_EQ(beams[1], 2u);
}

TEST(RateRatio, SingleUserTrendsTowardLimits)
{
    // K = 1 at high power, medians over a handful of user positions: the
    // Total ratio climbs toward 2 from below; the PerLed ratio sits near 1.
    // (A single position would be hostage to its random beam alignment.)
    const EmitterModel em = EmitterModel::from_half_angle(deg(30.0));
    const LensSpec lens = LensSpec::hemispherical(1.5, 0.1);
    const arma::vec3 bs = {0.0, 0.0, 3.0};
    const std::vector<arma::vec3> positions = {{0.6, 0.45, 0.0},
                                               {-1.1, 0.2, 0.0},
                                               {0.1, -0.9, 0.0},
                                               {1.4, 1.0, 0.0},
                                               {-0.3, -0.25, 0.0}};
    const std::vector<int> Ms = {8, 16, 32};
    const double P = 1e12;

    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return v[v.size() / 2];
    };
    std::vector<double> total_med, per_med;
    for (std::size_t mi = 0; mi < Ms.size(); ++mi)
    {
        std::vector<double> t, p;
        for (const auto &pos : positions)
        {
            UserTerminal ut;
            ut.position = pos;
            auto channels_at = [&](int M) {
                const LedArraySpec a = array_layout(M, 0.01, deg(99.0), em, lens);
                return std::make_pair(channel_matrix(a, {ut}, bs), channel_no_lens(a, {ut}, bs));
            };
            t.push_back(rate_ratio(channels_at, {Ms[mi]}, PowerBudget::Kind::Total, P,
                                   gamma_lower_bound(), 1)[0]
                            .ratio);
            p.push_back(rate_ratio(channels_at, {Ms[mi]}, PowerBudget::Kind::PerLed, P,
                                   gamma_lower_bound(), 1)[0]
                            .ratio);
        }
        total_med.push_back(median(t));
        per_med.push_back(median(p));
    }
    for (std::size_t i = 1; i < total_med.size(); ++i)
        EXPECT_GE(total_med[i], total_med[i - 1] - 1e-9);
    for (const double r : total_med)
        EXPECT_LT(r, 2.0);
    EXPECT_GT(total_med.back(), 1.2);
    for (const double r : per_med)
        EXPECT_NEAR(r, 1.0, 0.4);
}
