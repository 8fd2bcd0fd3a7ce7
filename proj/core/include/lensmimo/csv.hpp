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
// Flat-file emission. All CSVs are UTF-8 with LF line endings; real values
// are printed in scientific notation with 9 significant digits so a parse
// round-trips the report exactly at that precision.

#ifndef LENSMIMO_CSV_HPP
#define LENSMIMO_CSV_HPP

#include <string>
#include <vector>

#include "lensmimo/channel_model.hpp"
#include "lensmimo/experiments.hpp"
#include "lensmimo/optimization.hpp"

namespace lensmimo
{

// 9 significant digits, scientific.
std::string format_real(double x);

// Header: scheme,constraint,snr_db,m,k,mean_rate_bits,std_rate_bits,realizations
void emit_csv(const RunReport &report, const std::string &path);

// Header: constraint,snr_db,m,k,ratio_mean,ratio_median,realizations
void emit_ratios(const RunReport &report, const std::string &path);

// Header: x,y,intensity (row-major over the grid)
void emit_intensity(const IntensityMap &map, const std::string &path);

// Header: iteration,objective,stationarity,comp_slack
void emit_trace(const std::vector<double> &objective_bits,
                const std::vector<KktResidual> &kkt, const std::string &path);

} // namespace lensmimo

#endif
