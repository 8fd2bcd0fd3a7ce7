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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lensmimo/precoding.hpp"

namespace lensmimo
{

namespace
{

constexpr double kLn2 = 0.69314718055994530942;

// ---------- d.c. objective pieces on dense covariance lists ----------

// u(i, k) = h_i^T Q_k h_i for all pairs.
arma::mat quad_table(const arma::mat &H, const std::vector<arma::mat> &Q)
{
    const arma::uword K = H.n_rows;
    arma::mat u(K, K);
    for (arma::uword k = 0; k < K; ++k)
    {
        const arma::mat HQ = H * Q[k]; // K x M^2
        for (arma::uword i = 0; i < K; ++i)
            u(i, k) = arma::dot(HQ.row(i), H.row(i));
    }
    return u;
}

double f_of(const arma::mat &u, double gamma)
{
    const arma::uword K = u.n_rows;
    double acc = 0.0;
    for (arma::uword i = 0; i < K; ++i)
    {
        const double all = arma::accu(u.row(i));
        acc += 0.5 * std::log(1.0 + all - (1.0 - gamma) * u(i, i));
    }
    return acc;
}

double g_of(const arma::mat &u)
{
    const arma::uword K = u.n_rows;
    double acc = 0.0;
    for (arma::uword i = 0; i < K; ++i)
        acc += 0.5 * std::log(1.0 + arma::accu(u.row(i)) - u(i, i));
    return acc;
}

// dF/dQ_k and dG/dQ_k as rank-K combinations of R_i = h_i h_i^T.
// coeff_f(i, k): weight of R_i in dF/dQ_k.
void grad_coeffs(const arma::mat &u, double gamma, arma::mat &coeff_f, arma::mat &coeff_g)
{
    const arma::uword K = u.n_rows;
    coeff_f.set_size(K, K);
    coeff_g.set_size(K, K);
    for (arma::uword i = 0; i < K; ++i)
    {
        const double all = arma::accu(u.row(i));
        const double F = 1.0 + all - (1.0 - gamma) * u(i, i);
        const double G = 1.0 + all - u(i, i);
        for (arma::uword k = 0; k < K; ++k)
        {
            coeff_f(i, k) = (i == k) ? 0.5 * gamma / F : 0.5 / F;
            coeff_g(i, k) = (i == k) ? 0.0 : 0.5 / G;
        }
    }
}

std::vector<arma::mat> assemble_grad(const arma::mat &H, const arma::mat &coeff)
{
    const arma::uword K = H.n_rows;
    std::vector<arma::mat> out(K);
    for (arma::uword k = 0; k < K; ++k)
    {
        // sum_i coeff(i, k) h_i h_i^T = H^T diag(coeff(:,k)) H
        out[k] = H.t() * (H.each_col() % coeff.col(k));
        out[k] = 0.5 * (out[k] + out[k].t());
    }
    return out;
}

arma::mat psd_clip(const arma::mat &Q)
{
    arma::vec w;
    arma::mat V;
    if (!arma::eig_sym(w, V, arma::symmatu(Q)))
        throw SingularSystem("psd projection: eigendecomposition failed");
    const double floor = 1e-12 * std::max(w.max(), 0.0);
    for (auto &x : w)
        if (x < floor)
            x = 0.0;
    return V * arma::diagmat(w) * V.t();
}

std::vector<arma::mat> project_total(std::vector<arma::mat> Q, double P)
{
    double tr = 0.0;
    for (auto &m : Q)
    {
        m = psd_clip(m);
        tr += arma::trace(m);
    }
    if (tr > P)
        for (auto &m : Q)
            m *= P / tr;
    return Q;
}

std::vector<arma::mat> project_per_led(std::vector<arma::mat> Q, double p, int cycles, double tol)
{
    const arma::uword K = Q.size();
    const arma::uword M2 = Q[0].n_rows;
    std::vector<arma::mat> inc_psd(K, arma::zeros(M2, M2));
    std::vector<arma::mat> inc_half(K, arma::zeros(M2, M2));

    for (int c = 0; c < cycles; ++c)
    {
        double psd_shift = 0.0;
        std::vector<arma::mat> Y(K);
        for (arma::uword k = 0; k < K; ++k)
        {
            const arma::mat Z = Q[k] + inc_psd[k];
            Y[k] = psd_clip(Z);
            inc_psd[k] = Z - Y[k];
            psd_shift = std::max(psd_shift, arma::norm(Y[k] - Q[k], "fro"));
        }
        arma::vec s = arma::zeros(M2);
        for (arma::uword k = 0; k < K; ++k)
            s += Y[k].diag() + inc_half[k].diag();
        const arma::vec excess = arma::clamp((s - p) / static_cast<double>(K), 0.0, arma::datum::inf);
        double viol = 0.0;
        for (arma::uword k = 0; k < K; ++k)
        {
            arma::mat Z = Y[k] + inc_half[k];
            arma::mat X = Z;
            X.diag() -= excess;
            inc_half[k] = Z - X;
            viol = std::max(viol, arma::norm(X - Y[k], "fro"));
            Q[k] = std::move(X);
        }
        if (std::max(psd_shift, viol) <= tol * std::max(1.0, p) && c > 0)
            break;
    }

    // Exactness pass: finish PSD, then uniform shrink onto the halfspaces.
    arma::vec s = arma::zeros(M2);
    for (auto &m : Q)
    {
        m = psd_clip(m);
        s += m.diag();
    }
    const double worst = s.max();
    if (worst > p)
        for (auto &m : Q)
            m *= p / worst;
    return Q;
}

std::vector<arma::mat> project(std::vector<arma::mat> Q, const PowerBudget &budget,
                               const CccpOptions &opts)
{
    if (budget.kind == PowerBudget::Kind::Total)
        return project_total(std::move(Q), budget.value);
    return project_per_led(std::move(Q), budget.value, opts.dykstra_iters, opts.dykstra_tol);
}

double frob_total(const std::vector<arma::mat> &A)
{
    double acc = 0.0;
    for (const auto &m : A)
        acc += arma::dot(m, m);
    return std::sqrt(acc);
}

} // namespace

double sum_rate_cov(const arma::mat &H, const CovarianceSet &Q, double gamma)
{
    const arma::uword K = H.n_rows;
    double acc = 0.0;
    for (arma::uword i = 0; i < K; ++i)
    {
        const arma::vec hi = H.row(i).t();
        double own = 0.0, inter = 0.0;
        for (arma::uword k = 0; k < Q.users(); ++k)
        {
            const double q = Q.quad(hi, k);
            if (k == i)
                own = q;
            else
                inter += q;
        }
        acc += 0.5 * std::log2(1.0 + gamma * own / (1.0 + inter));
    }
    return acc;
}

std::vector<arma::mat> convex_subproblem(const std::vector<arma::mat> &G_lin, const arma::mat &H,
                                         const PowerBudget &budget, double gamma,
                                         const CccpOptions &opts, std::vector<arma::mat> Q0,
                                         int *inner_iterations)
{
    const arma::uword K = H.n_rows;
    for (const auto &G : G_lin)
        if (arma::norm(G - G.t(), "fro") > 1e-8 * (1.0 + arma::norm(G, "fro")))
            throw ConfigError("convex_subproblem: linear terms must be symmetric");

    auto phi = [&](const std::vector<arma::mat> &Q) {
        double lin = 0.0;
        for (arma::uword k = 0; k < K; ++k)
            lin += arma::dot(G_lin[k], Q[k]);
        return f_of(quad_table(H, Q), gamma) - lin;
    };

    std::vector<arma::mat> Q = std::move(Q0);
    double cur = phi(Q);
    double step = 1.0 / std::max(arma::accu(H % H), 1e-30);
    double grad0 = -1.0;
    int it = 0;
    for (; it < opts.max_inner; ++it)
    {
        arma::mat cf, cg;
        grad_coeffs(quad_table(H, Q), gamma, cf, cg);
        std::vector<arma::mat> grad = assemble_grad(H, cf);
        for (arma::uword k = 0; k < K; ++k)
            grad[k] -= G_lin[k];
        if (grad0 < 0.0)
            grad0 = frob_total(grad);

        // Projected-gradient magnitude at a unit probe step.
        std::vector<arma::mat> probe(K);
        for (arma::uword k = 0; k < K; ++k)
            probe[k] = Q[k] + step * grad[k];
        probe = project(std::move(probe), budget, opts);
        double pg = 0.0;
        for (arma::uword k = 0; k < K; ++k)
            pg += std::pow(arma::norm(probe[k] - Q[k], "fro"), 2);
        pg = std::sqrt(pg) / step;
        if (pg <= opts.inner_tol * (1.0 + grad0))
            break;

        // Armijo backtracking along the projection arc.
        double t = step * 4.0;
        bool accepted = false;
        for (int ls = 0; ls < 40; ++ls)
        {
            std::vector<arma::mat> cand(K);
            for (arma::uword k = 0; k < K; ++k)
                cand[k] = Q[k] + t * grad[k];
            cand = project(std::move(cand), budget, opts);
            double lin = 0.0;
            for (arma::uword k = 0; k < K; ++k)
                lin += arma::dot(grad[k], cand[k] - Q[k]);
            const double val = phi(cand);
            if (val >= cur + opts.armijo_slope * lin && val >= cur - 1e-15 * std::abs(cur))
            {
                Q = std::move(cand);
                cur = val;
                step = t;
                accepted = true;
                break;
            }
            t *= opts.armijo_shrink;
        }
        if (!accepted)
            break;
    }
    if (inner_iterations)
        *inner_iterations = it;
    return Q;
}

CccpResult cccp(const arma::mat &H, const PowerBudget &budget, double gamma,
                const CccpOptions &opts)
{
    validate_gamma(gamma);
    const arma::uword K = H.n_rows;
    const arma::uword M2 = H.n_cols;
    const double energy = arma::accu(H % H);
    if (energy <= 0.0)
        throw DegenerateChannel("cccp: all channel rows are zero");

    // Rate-preserving rescale: h -> h/s, budget -> budget * s^2.
    const double s2 = energy / static_cast<double>(K);
    const arma::mat Hs = H / std::sqrt(s2);
    PowerBudget b = budget;
    b.value *= s2;

    // Scaled MRT rank-1 start.
    std::vector<arma::mat> Q(K);
    {
        const double beta = b.value / arma::accu(Hs % Hs);
        for (arma::uword k = 0; k < K; ++k)
            Q[k] = beta * Hs.row(k).t() * Hs.row(k);
        if (b.kind == PowerBudget::Kind::PerLed)
        {
            arma::vec s = arma::zeros(M2);
            for (const auto &m : Q)
                s += m.diag();
            const double worst = s.max();
            if (worst > 0.0)
                for (auto &m : Q)
                    m *= b.value / worst;
        }
    }

    CccpResult res;
    auto objective = [&](const std::vector<arma::mat> &Qs) {
        const arma::mat u = quad_table(Hs, Qs);
        return (f_of(u, gamma) - g_of(u)) / kLn2;
    };
    auto record_kkt = [&](const std::vector<arma::mat> &Qs) {
        if (!opts.track_kkt)
            return;
        std::vector<arma::mat> unscaled(Qs);
        for (auto &m : unscaled)
            m /= s2;
        res.kkt_trace.push_back(
            kkt_residual(H, CovarianceSet::dense(std::move(unscaled)), budget, gamma));
    };
    res.objective_trace.push_back(objective(Q));
    record_kkt(Q);

    for (int outer = 0; outer < opts.max_outer; ++outer)
    {
        arma::mat cf, cg;
        grad_coeffs(quad_table(Hs, Q), gamma, cf, cg);
        const std::vector<arma::mat> G_lin = assemble_grad(Hs, cg);
        Q = convex_subproblem(G_lin, Hs, b, gamma, opts, std::move(Q));
        res.objective_trace.push_back(objective(Q));
        record_kkt(Q);
        res.iterations = outer + 1;
        const double prev = res.objective_trace[res.objective_trace.size() - 2];
        const double now = res.objective_trace.back();
        if (std::abs(now - prev) < opts.outer_tol * std::max(1.0, std::abs(prev)))
        {
            res.converged = true;
            break;
        }
    }

    // Fixed points have rank <= 1; truncation is lossless at convergence and
    // keeps both budgets feasible (discarded eigenparts carry nonnegative
    // diagonals). Kept only when it does not dent the objective trace.
    if (opts.rank1_polish)
    {
        std::vector<arma::mat> Qp(K);
        for (arma::uword k = 0; k < K; ++k)
        {
            arma::vec w;
            arma::mat V;
            arma::eig_sym(w, V, arma::symmatu(Q[k]));
            const double lead = w(w.n_elem - 1);
            Qp[k] = lead > 0.0 ? arma::mat(lead * V.col(w.n_elem - 1) * V.col(w.n_elem - 1).t())
                               : arma::zeros(M2, M2);
        }
        if (objective(Qp) >= res.objective_trace.back() - 1e-10)
        {
            Q = std::move(Qp);
            res.objective_trace.back() = objective(Q);
        }
    }

    for (auto &m : Q)
        m /= s2; // undo the channel rescale
    res.Q = CovarianceSet::dense(std::move(Q));
    return res;
}

KktResidual kkt_residual(const arma::mat &H, const CovarianceSet &Q, const PowerBudget &budget,
                         double gamma)
{
    const arma::uword K = H.n_rows;
    const arma::uword M2 = H.n_cols;
    std::vector<arma::mat> Qd(K);
    for (arma::uword k = 0; k < K; ++k)
    {
        switch (Q.user(k).form)
        {
        case UserCov::Form::Dense:
            Qd[k] = Q.user(k).Q;
            break;
        case UserCov::Form::Diagonal:
            Qd[k] = arma::diagmat(Q.user(k).d);
            break;
        case UserCov::Form::Zero:
            Qd[k] = arma::zeros(M2, M2);
            break;
        case UserCov::Form::ScaledOnes:
            Qd[k] = Q.user(k).ones * arma::ones(M2, M2);
            break;
        }
    }

    arma::mat cf, cg;
    grad_coeffs(quad_table(H, Qd), gamma, cf, cg);
    const std::vector<arma::mat> D = assemble_grad(H, arma::mat(cf - cg));

    KktResidual out;
    out.trace_scale = Q.total_trace();

    std::vector<arma::mat> A(K);
    if (budget.kind == PowerBudget::Kind::Total)
    {
        double num = 0.0;
        for (arma::uword k = 0; k < K; ++k)
            num += arma::dot(D[k], Qd[k]);
        const double eta = out.trace_scale > 0.0 ? std::max(0.0, num / out.trace_scale) : 0.0;
        out.multiplier = eta;
        for (arma::uword k = 0; k < K; ++k)
        {
            A[k] = -D[k];
            A[k].diag() += eta;
        }
    }
    else
    {
        const arma::vec s = Q.diag_sum();
        arma::vec mu = arma::zeros(M2);
        for (arma::uword k = 0; k < K; ++k)
            mu += arma::diagvec(D[k] * Qd[k]);
        for (arma::uword m = 0; m < M2; ++m)
            mu(m) = s(m) > 1e-14 * budget.value ? std::max(0.0, mu(m) / s(m)) : 0.0;
        out.multiplier = mu.max();
        for (arma::uword k = 0; k < K; ++k)
            A[k] = arma::diagmat(mu) - D[k];
    }

    for (arma::uword k = 0; k < K; ++k)
    {
        out.comp_slack = std::max(out.comp_slack, std::abs(arma::dot(A[k], Qd[k])));
        out.stationarity = std::max(out.stationarity, arma::norm(A[k] * Qd[k], "fro"));
        arma::vec w;
        arma::eig_sym(w, arma::symmatu(A[k]));
        const double mn = w.min();
        if (k == 0 || mn < out.dual_min_eig)
            out.dual_min_eig = mn;
    }
    if (out.trace_scale > 0.0)
        out.stationarity /= out.trace_scale;
    return out;
}

WaterFillResult waterfill_total(const arma::vec &g, int M, double P, double gamma)
{
    if (g.min() <= 0.0)
        throw std::domain_error("waterfill_total: gains must be positive");
    if (P <= 0.0)
        throw ConfigError("waterfill_total: P must be positive");
    const double M4 = std::pow(static_cast<double>(M), 4);
    const arma::vec a = 1.0 / (gamma * M4 * arma::square(g)); // inverse effective gains

    auto poured = [&](double level) {
        double acc = 0.0;
        for (const double ak : a)
            acc += std::max(level - ak, 0.0);
        return acc;
    };
    double lo = a.min();
    double hi = a.min() + P;
    for (int i = 0; i < 200; ++i)
    {
        const double mid = 0.5 * (lo + hi);
        (poured(mid) > P ? hi : lo) = mid;
    }
    const double level = 0.5 * (lo + hi);

    WaterFillResult res;
    res.nu = 1.0 / level;
    res.levels = arma::clamp(level - a, 0.0, arma::datum::inf);
    for (arma::uword k = 0; k < g.n_elem; ++k)
        res.rate_bits += 0.5 * std::log2(1.0 + gamma * M4 * g(k) * g(k) * res.levels(k));
    return res;
}

CovarianceSet asymptotic_per_led(const std::vector<UserGeometry> &geo, arma::uword dim, double p)
{
    std::vector<arma::vec> diags;
    diags.reserve(geo.size());
    std::vector<bool> used(dim, false);
    for (const auto &gk : geo)
    {
        if (used[gk.m_k])
            throw DominantBeamCollision("asymptotic_per_led: two users share dominant beam " +
                                        std::to_string(gk.m_k));
        used[gk.m_k] = true;
        arma::vec d = arma::zeros(dim);
        d(gk.m_k) = p;
        diags.push_back(std::move(d));
    }
    return CovarianceSet::diagonal(dim, std::move(diags));
}

CovarianceSet BeamAllocation::to_covariance() const
{
    return CovarianceSet::diagonal(dim, diagonals());
}

std::vector<arma::vec> BeamAllocation::diagonals() const
{
    std::vector<arma::vec> out;
    out.reserve(beams.size());
    for (const auto &sel : beams)
    {
        arma::vec d = arma::zeros(dim);
        for (const arma::uword m : sel)
            d(m) = eta;
        out.push_back(std::move(d));
    }
    return out;
}

namespace
{
// Beam-domain sum rate for masks at common power eta, using diag(R_k) only.
double masked_rate(const arma::mat &Rdiag, const std::vector<std::vector<arma::uword>> &beams,
                   double eta, double gamma)
{
    const arma::uword K = Rdiag.n_rows;
    double acc = 0.0;
    for (arma::uword i = 0; i < K; ++i)
    {
        double own = 0.0, inter = 0.0;
        for (arma::uword k = 0; k < K; ++k)
        {
            double s = 0.0;
            for (const arma::uword m : beams[k])
                s += Rdiag(i, m);
            (k == i ? own : inter) += s;
        }
        acc += 0.5 * std::log2(1.0 + gamma * eta * own / (1.0 + eta * inter));
    }
    return acc;
}
} // namespace

BeamAllocation beam_allocation_greedy(const arma::mat &Rdiag, const PowerBudget &budget, int b_max,
                                      double gamma)
{
    if (b_max < 1)
        throw ConfigError("beam_allocation_greedy: b_max must be at least 1");
    const arma::uword K = Rdiag.n_rows;
    const arma::uword M2 = Rdiag.n_cols;

    BeamAllocation alloc;
    alloc.b_max = b_max;
    alloc.dim = M2;
    alloc.beams.assign(K, {});

    std::vector<bool> owned(M2, false);
    auto eta_of = [&](arma::uword n_beams) {
        if (budget.kind == PowerBudget::Kind::PerLed)
            return budget.value;
        return n_beams == 0 ? 0.0 : budget.value / static_cast<double>(n_beams);
    };

    arma::uword n_beams = 0;
    double best = 0.0;
    for (arma::uword i = 0; i < K; ++i)
    {
        const arma::uvec order = arma::stable_sort_index(Rdiag.row(i).t(), "descend");
        int kept = 0;
        for (const arma::uword idx : order)
        {
            if (owned[idx])
                continue;
            alloc.beams[i].push_back(idx);
            const double candidate = masked_rate(Rdiag, alloc.beams, eta_of(n_beams + 1), gamma);
            if (candidate > best)
            {
                best = candidate;
                owned[idx] = true;
                ++n_beams;
                if (++kept >= b_max)
                    break;
            }
            else
            {
                alloc.beams[i].pop_back(); // reject and move to the next user
                break;
            }
        }
    }
    alloc.eta = eta_of(n_beams);
    return alloc;
}

NoLensOptimum no_lens_optimum(const arma::vec &tilde_g, int M, const PowerBudget &budget,
                              double gamma)
{
    if (tilde_g.n_elem == 0)
        throw ConfigError("no_lens_optimum: empty gain vector");
    NoLensOptimum out;
    out.k_star = tilde_g.index_max(); // smallest index on ties
    const double gt = tilde_g(out.k_star);
    const arma::uword M2 = static_cast<arma::uword>(M) * static_cast<arma::uword>(M);
    const double M2d = static_cast<double>(M2);

    std::vector<UserCov> users(tilde_g.n_elem);
    if (budget.kind == PowerBudget::Kind::Total)
    {
        users[out.k_star] = UserCov::scaled_ones(budget.value / M2d);
        out.rate_bits = 0.5 * std::log2(1.0 + gamma * M2d * gt * gt * budget.value);
    }
    else
    {
        users[out.k_star] = UserCov::scaled_ones(budget.value);
        out.rate_bits = 0.5 * std::log2(1.0 + gamma * M2d * M2d * gt * gt * budget.value);
    }
    out.Q = CovarianceSet(M2, std::move(users));
    return out;
}

OrthogonalityReport orthogonality_check(const std::vector<arma::vec> &diag_allocs)
{
    OrthogonalityReport rep;
    if (diag_allocs.size() < 2)
        return rep;
    double scale = 0.0;
    for (const auto &d : diag_allocs)
        scale = std::max(scale, d.max());
    const double tol = 1e-12 * scale * scale;
    for (std::size_t k1 = 0; k1 < diag_allocs.size(); ++k1)
        for (std::size_t k2 = k1 + 1; k2 < diag_allocs.size(); ++k2)
        {
            const arma::vec prod = diag_allocs[k1] % diag_allocs[k2];
            const arma::uword worst = prod.index_max();
            if (prod(worst) > rep.max_violation)
                rep.max_violation = prod(worst);
            if (prod(worst) > tol)
            {
                rep.orthogonal = false;
                if (rep.shared_index < 0)
                    rep.shared_index = static_cast<arma::sword>(worst);
            }
        }
    return rep;
}

std::vector<arma::uword> assign_dominant_beams(const ChannelMatrix &ch)
{
    const arma::uword K = ch.users();
    std::vector<arma::uword> beams(K);
    std::vector<bool> taken(ch.beams(), false);
    for (arma::uword k = 0; k < K; ++k)
    {
        arma::uword b = ch.geo[k].m_k;
        if (taken[b])
        {
            const arma::vec gains = ch.H.row(k).t();
            const arma::uvec order = arma::stable_sort_index(gains, "descend");
            for (const arma::uword idx : order)
                if (!taken[idx])
                {
                    b = idx;
                    break;
                }
            // If every beam is taken (K > M^2), keep the collision visible.
            if (taken[b])
                throw DominantBeamCollision("assign_dominant_beams: more users than beams");
        }
        taken[b] = true;
        beams[k] = b;
    }
    return beams;
}

std::vector<RatioPoint> rate_ratio(
    const std::function<std::pair<ChannelMatrix, ChannelMatrix>(int)> &channels_at,
    const std::vector<int> &m_list, PowerBudget::Kind budget_kind, double P, double gamma,
    int b_max)
{
    std::vector<RatioPoint> out;
    out.reserve(m_list.size());
    for (const int M : m_list)
    {
        const auto [ch, ch_nolens] = channels_at(M);
        const double M2 = static_cast<double>(M) * M;
        const PowerBudget budget = budget_kind == PowerBudget::Kind::Total
                                       ? PowerBudget::total(P)
                                       : PowerBudget::per_led(P / M2);
        const BeamAllocation ba = beam_allocation_greedy(arma::square(ch.H), budget, b_max, gamma);
        RatioPoint pt;
        pt.M = M;
        pt.r_bdma = sum_rate_cov(ch.H, ba.to_covariance(), gamma);
        pt.r_nolens = no_lens_optimum(ch_nolens.g, M, budget, gamma).rate_bits;
        pt.ratio = pt.r_nolens > 0.0 ? pt.r_bdma / pt.r_nolens : arma::datum::inf;
        out.push_back(pt);
    }
    return out;
}

} // namespace lensmimo
