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

#include "lensmimo/covariance.hpp"

namespace lensmimo
{

CovarianceSet CovarianceSet::dense(std::vector<arma::mat> mats)
{
    if (mats.empty())
        throw ConfigError("CovarianceSet: need at least one user");
    const arma::uword dim = mats.front().n_rows;
    std::vector<UserCov> users;
    users.reserve(mats.size());
    for (auto &m : mats)
    {
        if (m.n_rows != dim || m.n_cols != dim)
            throw ConfigError("CovarianceSet: inconsistent matrix dimensions");
        users.push_back(UserCov::dense(std::move(m)));
    }
    return CovarianceSet(dim, std::move(users));
}

CovarianceSet CovarianceSet::diagonal(arma::uword dim, std::vector<arma::vec> diags)
{
    std::vector<UserCov> users;
    users.reserve(diags.size());
    for (auto &d : diags)
    {
        if (d.n_elem != dim)
            throw ConfigError("CovarianceSet: inconsistent diagonal length");
        users.push_back(UserCov::diagonal(std::move(d)));
    }
    return CovarianceSet(dim, std::move(users));
}

double CovarianceSet::quad(const arma::vec &h, arma::uword k) const
{
    const UserCov &u = users_[k];
    switch (u.form)
    {
    case UserCov::Form::Zero:
        return 0.0;
    case UserCov::Form::Diagonal:
        return arma::dot(h % h, u.d);
    case UserCov::Form::Dense:
        return arma::as_scalar(h.t() * u.Q * h);
    case UserCov::Form::ScaledOnes:
    {
        const double s = arma::accu(h);
        return u.ones * s * s;
    }
    }
    return 0.0;
}

double CovarianceSet::trace(arma::uword k) const
{
    const UserCov &u = users_[k];
    switch (u.form)
    {
    case UserCov::Form::Zero:
        return 0.0;
    case UserCov::Form::Diagonal:
        return arma::accu(u.d);
    case UserCov::Form::Dense:
        return arma::trace(u.Q);
    case UserCov::Form::ScaledOnes:
        return u.ones * static_cast<double>(dim_);
    }
    return 0.0;
}

double CovarianceSet::total_trace() const
{
    double acc = 0.0;
    for (arma::uword k = 0; k < users(); ++k)
        acc += trace(k);
    return acc;
}

arma::vec CovarianceSet::diagonal_of(arma::uword k) const
{
    const UserCov &u = users_[k];
    switch (u.form)
    {
    case UserCov::Form::Zero:
        return arma::zeros(dim_);
    case UserCov::Form::Diagonal:
        return u.d;
    case UserCov::Form::Dense:
        return u.Q.diag();
    case UserCov::Form::ScaledOnes:
        return arma::vec(dim_, arma::fill::value(u.ones));
    }
    return arma::zeros(dim_);
}

arma::vec CovarianceSet::diag_sum() const
{
    arma::vec acc = arma::zeros(dim_);
    for (arma::uword k = 0; k < users(); ++k)
        acc += diagonal_of(k);
    return acc;
}

bool CovarianceSet::all_diagonal() const
{
    for (const auto &u : users_)
        if (u.form == UserCov::Form::Dense || u.form == UserCov::Form::ScaledOnes)
            return false;
    return true;
}

double CovarianceSet::feasibility_gap(const PowerBudget &budget) const
{
    if (budget.kind == PowerBudget::Kind::Total)
        return std::max(0.0, (total_trace() - budget.value) / budget.value);
    const arma::vec s = diag_sum();
    return std::max(0.0, (s.max() - budget.value) / budget.value);
}

} // namespace lensmimo
