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

#include "lensmimo/csv.hpp"

#include <cstdio>
#include <fstream>

namespace lensmimo
{

namespace
{
std::ofstream open_lf(const std::string &path)
{
    std::ofstream out(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!out)
        throw std::runtime_error("csv: cannot open '" + path + "' for writing");
    return out;
}

const char *kind_name(PowerBudget::Kind k)
{
    return k == PowerBudget::Kind::Total ? "total" : "per-led";
}
} // namespace

std::string format_real(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.8e", x);
    return buf;
}

void emit_csv(const RunReport &report, const std::string &path)
{
    std::ofstream out = open_lf(path);
    out << "scheme,constraint,snr_db,m,k,mean_rate_bits,std_rate_bits,realizations\n";
    for (const RateRow &r : report.rates)
        out << scheme_name(r.scheme) << ',' << kind_name(r.constraint) << ','
            << format_real(r.snr_db) << ',' << r.M << ',' << r.K << ','
            << format_real(r.mean_rate_bits) << ',' << format_real(r.std_rate_bits) << ','
            << r.realizations << '\n';
    if (!out)
        throw std::runtime_error("csv: write failed for '" + path + "'");
}

void emit_ratios(const RunReport &report, const std::string &path)
{
    std::ofstream out = open_lf(path);
    out << "constraint,snr_db,m,k,ratio_mean,ratio_median,realizations\n";
    for (const RatioRow &r : report.ratios)
        out << kind_name(r.constraint) << ',' << format_real(r.snr_db) << ',' << r.M << ','
            << r.K << ',' << format_real(r.ratio_mean) << ',' << format_real(r.ratio_median)
            << ',' << r.realizations << '\n';
    if (!out)
        throw std::runtime_error("csv: write failed for '" + path + "'");
}

void emit_intensity(const IntensityMap &map, const std::string &path)
{
    std::ofstream out = open_lf(path);
    out << "x,y,intensity\n";
    for (arma::uword i = 0; i < map.x.n_elem; ++i)
        for (arma::uword j = 0; j < map.y.n_elem; ++j)
            out << format_real(map.x(i)) << ',' << format_real(map.y(j)) << ','
                << format_real(map.value(i, j)) << '\n';
    if (!out)
        throw std::runtime_error("csv: write failed for '" + path + "'");
}

void emit_trace(const std::vector<double> &objective_bits, const std::vector<KktResidual> &kkt,
                const std::string &path)
{
    std::ofstream out = open_lf(path);
    out << "iteration,objective,stationarity,comp_slack\n";
    for (std::size_t i = 0; i < objective_bits.size(); ++i)
    {
        const double stat = i < kkt.size() ? kkt[i].stationarity : 0.0;
        const double slack = i < kkt.size() ? kkt[i].comp_slack : 0.0;
        out << i << ',' << format_real(objective_bits[i]) << ',' << format_real(stat) << ','
            << format_real(slack) << '\n';
    }
    if (!out)
        throw std::runtime_error("csv: write failed for '" + path + "'");
}

} // namespace lensmimo
