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
// Sum-rate maximization engines. The d.c. objective is split as f - g with
//   f(Q) = 1/2 sum_k log(1 + h_k^T(sum_{k' != k} Q_k')h_k + gamma h_k^T Q_k h_k)
//   g(Q) = 1/2 sum_k log(1 + h_k^T(sum_{k' != k} Q_k')h_k)
// and solved by CCCP: linearize g at the current iterate, maximize the
// concave remainder over the feasible set by projected gradient ascent.
// Beam-domain designs (water-filling, per-LED saturation, greedy beam
// allocation) and the no-lens baseline live here as well.

#ifndef LENSMIMO_OPTIMIZATION_HPP
#define LENSMIMO_OPTIMIZATION_HPP

#include <functional>
#include <vector>

#include <armadillo>

#include "lensmimo/channel_model.hpp"
#include "lensmimo/covariance.hpp"

namespace lensmimo
{

// 1/2 sum_k log2(1 + gamma tr(R_k Q_k) / (1 + tr(R_k sum_{k' != k} Q_k'))).
double sum_rate_cov(const arma::mat &H, const CovarianceSet &Q, double gamma);

struct CccpOptions
{
    int max_outer = 100;
    double outer_tol = 1e-6; // relative objective improvement
    int max_inner = 500;
    double inner_tol = 1e-8; // projected-gradient norm, relative
    int dykstra_iters = 50;
    double dykstra_tol = 1e-9;
    double armijo_shrink = 0.5;
    double armijo_slope = 1e-4;
    bool rank1_polish = true; // truncate converged iterates to rank 1 when lossless
    bool track_kkt = false;   // record KKT residuals per outer iterate (for CSV export)
};

struct KktResidual
{
    double stationarity = 0.0; // max_k ||A_k Q_k||_F / trace scale
    double comp_slack = 0.0;   // max_k |tr(A_k Q_k)|
    double dual_min_eig = 0.0; // min_k lambda_min(A_k)
    double multiplier = 0.0;   // eta (Total) or max_m mu_m (PerLed)
    double trace_scale = 0.0;  // sum_k tr(Q_k)
};

struct CccpResult
{
    CovarianceSet Q;
    std::vector<double> objective_trace; // bits; entry 0 is the initial point
    std::vector<KktResidual> kkt_trace;  // parallel to objective_trace when tracked
    bool converged = false;
    int iterations = 0;
};

// Concave-convex procedure for the d.c. program under either budget.
// Initialization: scaled rank-1 MRT covariances. The channel is internally
// rescaled to unit mean row energy (with the budget scaled inversely), which
// leaves every rate unchanged but makes the solver tolerances meaningful.
CccpResult cccp(const arma::mat &H, const PowerBudget &budget, double gamma,
                const CccpOptions &opts = {});

// One convex subproblem: maximize f(Q) - sum_k tr(G_k Q_k) over the budget
// set, by projected gradient ascent with Armijo backtracking. Feasibility:
// Total - PSD eigenvalue clipping then trace rescale; PerLed - Dykstra
// between the PSD product cone and the per-diagonal halfspaces. Exposed for
// tests.
std::vector<arma::mat> convex_subproblem(const std::vector<arma::mat> &G_lin, const arma::mat &H,
                                         const PowerBudget &budget, double gamma,
                                         const CccpOptions &opts, std::vector<arma::mat> Q0,
                                         int *inner_iterations = nullptr);

// Reconstructs the multipliers from the stationarity system and reports the
// residuals; the caller decides what counts as converged.
KktResidual kkt_residual(const arma::mat &H, const CovarianceSet &Q, const PowerBudget &budget,
                         double gamma);

struct WaterFillResult
{
    arma::vec levels;      // power on each user's dominant beam
    double nu = 0.0;       // Lagrange multiplier
    double rate_bits = 0.0; // 1/2 sum_k log2(1 + gamma M^4 g_k^2 level_k)
};

// Water-filling over the per-user effective gains gamma M^4 g_k^2; nu found
// by bisection until sum(levels) matches P to 1e-12 relative.
WaterFillResult waterfill_total(const arma::vec &g, int M, double P, double gamma);

// Asymptotically optimal per-LED design: [Q_k]_{m_k m_k} = p. Throws
// DominantBeamCollision when two users share a dominant beam.
CovarianceSet asymptotic_per_led(const std::vector<UserGeometry> &geo, arma::uword dim, double p);

struct BeamAllocation
{
    std::vector<std::vector<arma::uword>> beams; // per user, selected beam indices
    double eta = 0.0;                            // common power per selected beam
    int b_max = 1;
    arma::uword dim = 0;

    CovarianceSet to_covariance() const;
    std::vector<arma::vec> diagonals() const;
};

// Greedy beam allocation: users in order, beams by descending diag(R_k),
// keep a beam only when the sum rate improves, skip beams owned by earlier
// users, at most b_max beams per user. Total budget: eta = P / #beams;
// PerLed: eta = p. O(b_max K) objective evaluations.
BeamAllocation beam_allocation_greedy(const arma::mat &Rdiag, const PowerBudget &budget, int b_max,
                                      double gamma);

struct NoLensOptimum
{
    CovarianceSet Q;
    double rate_bits = 0.0;
    arma::uword k_star = 0;
};

// Closed-form optimum without the lens: serve the best user only.
// Total: Q = (P/M^2) 1_{M^2 x M^2}, rate 1/2 log2(1 + gamma M^2 gt^2 P).
// PerLed: Q = p 1_{M^2 x M^2},     rate 1/2 log2(1 + gamma M^4 gt^2 p).
NoLensOptimum no_lens_optimum(const arma::vec &tilde_g, int M, const PowerBudget &budget,
                              double gamma);

struct OrthogonalityReport
{
    bool orthogonal = true;
    double max_violation = 0.0;
    arma::sword shared_index = -1; // first offending beam, -1 if none
};

// Checks pairwise [Lambda_k1]_mm [Lambda_k2]_mm = 0 up to 1e-12 * scale^2.
OrthogonalityReport orthogonality_check(const std::vector<arma::vec> &diag_allocs);

// Dominant beams with deterministic collision fallback: each user takes its
// minimum-psi beam; if owned, the next-best unclaimed beam by actual gain.
std::vector<arma::uword> assign_dominant_beams(const ChannelMatrix &ch);

struct RatioPoint
{
    int M = 0;
    double r_bdma = 0.0;
    double r_nolens = 0.0;
    double ratio = 0.0;
};

// BDMA (greedy allocation, rate via sum_rate_cov) over the no-lens optimum,
// per array size. `budget_kind` with total power P; PerLed uses p = P/M^2.
std::vector<RatioPoint> rate_ratio(
    const std::function<std::pair<ChannelMatrix, ChannelMatrix>(int)> &channels_at,
    const std::vector<int> &m_list, PowerBudget::Kind budget_kind, double P, double gamma,
    int b_max);

} // namespace lensmimo

#endif
