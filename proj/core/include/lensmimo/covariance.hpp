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
// Transmit covariance containers. Per-user matrices are stored in the
// cheapest faithful form: dense (optimized transmission), diagonal (beam
// domain), a scaled all-ones matrix (no-lens baseline) or a structural
// zero. At M = 80 a dense M^2 x M^2 matrix alone would be ~330 MB, so the
// structured forms are not an optimization nicety but a requirement.

#ifndef LENSMIMO_COVARIANCE_HPP
#define LENSMIMO_COVARIANCE_HPP

#include <vector>

#include <armadillo>

#include "lensmimo/errors.hpp"

namespace lensmimo
{

struct PowerBudget
{
    enum class Kind
    {
        Total, // sum_k tr(Q_k) <= P
        PerLed // sum_k [Q_k]_mm <= p for every LED m
    };

    Kind kind = Kind::Total;
    double value = 0.0; // P or p

    static PowerBudget total(double P)
    {
        if (P <= 0.0)
            throw ConfigError("power budget must be positive");
        return {Kind::Total, P};
    }
    static PowerBudget per_led(double p)
    {
        if (p <= 0.0)
            throw ConfigError("power budget must be positive");
        return {Kind::PerLed, p};
    }

    // Bias current b with p = b^2 / K.
    double bias(arma::uword K) const
    {
        if (kind != Kind::PerLed)
            throw ConfigError("bias is defined for the per-LED budget only");
        return std::sqrt(value * static_cast<double>(K));
    }
};

struct UserCov
{
    enum class Form
    {
        Zero,
        Diagonal,
        Dense,
        ScaledOnes
    };

    Form form = Form::Zero;
    arma::vec d;       // Diagonal entries
    arma::mat Q;       // Dense matrix
    double ones = 0.0; // ScaledOnes: ones * 1_{M^2 x M^2}

    static UserCov zero() { return {}; }
    static UserCov diagonal(arma::vec diag_entries)
    {
        UserCov u;
        u.form = Form::Diagonal;
        u.d = std::move(diag_entries);
        return u;
    }
    static UserCov dense(arma::mat Q)
    {
        UserCov u;
        u.form = Form::Dense;
        u.Q = std::move(Q);
        return u;
    }
    static UserCov scaled_ones(double c)
    {
        UserCov u;
        u.form = Form::ScaledOnes;
        u.ones = c;
        return u;
    }
};

class CovarianceSet
{
  public:
    CovarianceSet() = default;
    CovarianceSet(arma::uword dim, std::vector<UserCov> users)
        : dim_(dim), users_(std::move(users))
    {
    }

    static CovarianceSet dense(std::vector<arma::mat> mats);
    static CovarianceSet diagonal(arma::uword dim, std::vector<arma::vec> diags);

    arma::uword dim() const { return dim_; }
    arma::uword users() const { return users_.size(); }
    const UserCov &user(arma::uword k) const { return users_[k]; }

    // h^T Q_k h
    double quad(const arma::vec &h, arma::uword k) const;
    double trace(arma::uword k) const;
    double total_trace() const;
    arma::vec diagonal_of(arma::uword k) const;
    arma::vec diag_sum() const; // sum_k diag(Q_k)
    bool all_diagonal() const;  // every user Zero or Diagonal

    // Largest budget overshoot relative to the budget value (0 if feasible).
    double feasibility_gap(const PowerBudget &budget) const;

  private:
    arma::uword dim_ = 0;
    std::vector<UserCov> users_;
};

} // namespace lensmimo

#endif
