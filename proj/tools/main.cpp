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
// Command line front end. Subcommands: channel, intensity-map, precode,
// optimize, run, sweep-m. Exit codes: 0 success, 2 config error, 3 scale
// error, 1 anything else.

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lensmimo/csv.hpp"
#include "lensmimo/experiments.hpp"
#include "lensmimo/precoding.hpp"

using namespace lensmimo;

namespace
{

struct CommonArgs
{
    std::string config;
    std::string out = ".";
    std::string scheme_list;
    std::string constraint;
    std::string gamma;
    std::uint64_t seed = 0;
    bool seed_set = false;
    int realizations = 0;
};

void add_common(CLI::App *cmd, CommonArgs &args)
{
    cmd->add_option("--config", args.config, "Scenario config file (key = value lines)");
    cmd->add_option("--out", args.out, "Output directory")->capture_default_str();
    cmd->add_option("--seed", args.seed, "Master PRNG seed")->each([&](const std::string &) {
        args.seed_set = true;
    });
    cmd->add_option("--scheme", args.scheme_list,
                    "Comma/space separated schemes (mrt rzf cccp bdma-ba bdma-ad no-lens)");
    cmd->add_option("--constraint", args.constraint, "total | per-led");
    cmd->add_option("--gamma", args.gamma, "lb | ub | value in [6/(pi e), 1]");
    cmd->add_option("--realizations", args.realizations, "Monte Carlo realization count");
}

ScenarioConfig load_config(const CommonArgs &args)
{
    ScenarioConfig cfg =
        args.config.empty() ? builtin_scenarios().small_area : parse_config_file(args.config);
    if (args.seed_set)
        cfg.seed = args.seed;
    if (args.realizations > 0)
        cfg.realizations = args.realizations;
    if (!args.constraint.empty())
    {
        if (args.constraint == "total")
            cfg.budget = PowerBudget::Kind::Total;
        else if (args.constraint == "per-led")
            cfg.budget = PowerBudget::Kind::PerLed;
        else
            throw ConfigError("--constraint must be total or per-led");
    }
    if (!args.gamma.empty())
    {
        if (args.gamma == "lb")
            cfg.gamma = gamma_lower_bound();
        else if (args.gamma == "ub")
            cfg.gamma = 1.0;
        else
            cfg.gamma = std::stod(args.gamma);
        validate_gamma(cfg.gamma);
    }
    if (!args.scheme_list.empty())
    {
        cfg.schemes.clear();
        std::string tok;
        for (const char c : args.scheme_list + ",")
        {
            if (c == ',' || c == ' ')
            {
                if (!tok.empty())
                    cfg.schemes.push_back(parse_scheme(tok));
                tok.clear();
            }
            else
                tok += c;
        }
    }
    cfg.validate();
    return cfg;
}

std::string out_path(const CommonArgs &args, const std::string &name)
{
    std::filesystem::create_directories(args.out);
    return (std::filesystem::path(args.out) / name).string();
}

int cmd_channel(const CommonArgs &args)
{
    const ScenarioConfig cfg = load_config(args);
    const LedArraySpec array = cfg.array();
    const auto uts = cfg.drop_users(0);
    const ChannelMatrix ch = channel_matrix(array, uts, cfg.bs_position());

    const std::string path = out_path(args, "channel.csv");
    std::ofstream out(path, std::ios::binary);
    out << "user,d_k,phi_k,m_k,g_k";
    for (arma::uword m = 0; m < ch.beams(); ++m)
        out << ",h" << m;
    out << "\n";
    for (arma::uword k = 0; k < ch.users(); ++k)
    {
        out << k << ',' << format_real(ch.geo[k].d_k) << ',' << format_real(ch.geo[k].phi_k) << ','
            << ch.geo[k].m_k << ',' << format_real(ch.g(k));
        for (arma::uword m = 0; m < ch.beams(); ++m)
            out << ',' << format_real(ch.H(k, m));
        out << '\n';
    }
    std::cout << "wrote " << path << " (" << ch.users() << " users x " << ch.beams()
              << " beams)\n";
    return 0;
}

int cmd_intensity_map(const CommonArgs &args, int grid, bool no_lens)
{
    const ScenarioConfig cfg = load_config(args);
    const LedArraySpec array = cfg.array();
    const arma::vec xs = arma::linspace(-cfg.room_w / 2.0, cfg.room_w / 2.0, grid);
    const arma::vec ys = arma::linspace(-cfg.room_d / 2.0, cfg.room_d / 2.0, grid);
    const IntensityMap map = intensity_map(array, cfg.bs_position(), xs, ys, cfg.A, !no_lens);
    const std::string path = out_path(args, no_lens ? "intensity_no_lens.csv" : "intensity.csv");
    emit_intensity(map, path);
    std::cout << "wrote " << path << " (" << grid << "x" << grid << " samples)\n";
    return 0;
}

int cmd_precode(const CommonArgs &args)
{
    ScenarioConfig cfg = load_config(args);
    if (cfg.schemes.empty())
        cfg.schemes = {Scheme::Mrt, Scheme::Rzf};
    const LedArraySpec array = cfg.array();
    const auto uts = cfg.drop_users(0);
    const ChannelMatrix ch = channel_matrix(array, uts, cfg.bs_position());

    const std::string path = out_path(args, "precode.csv");
    std::ofstream out(path, std::ios::binary);
    out << "scheme,constraint,snr_db,user,sinr,rate_bits\n";
    for (const Scheme s : cfg.schemes)
    {
        if (s != Scheme::Mrt && s != Scheme::Rzf)
            continue;
        for (const double snr : cfg.snr_db)
        {
            const double P = cfg.sigma2 * std::pow(10.0, snr / 10.0);
            PrecoderSet set = s == Scheme::Mrt
                                  ? mrt(ch.H, P)
                                  : rzf(ch.H, P, static_cast<double>(cfg.K) / P);
            if (cfg.budget == PowerBudget::Kind::PerLed)
                set = scale_to_per_led(std::move(set), P / static_cast<double>(ch.beams()));
            const arma::vec s_vec = sinr(ch.H, set.W);
            const RateReport rep = rates(s_vec, cfg.gamma_value());
            for (arma::uword k = 0; k < s_vec.n_elem; ++k)
                out << scheme_name(s) << ','
                    << (cfg.budget == PowerBudget::Kind::Total ? "total" : "per-led") << ','
                    << format_real(snr) << ',' << k << ',' << format_real(s_vec(k)) << ','
                    << format_real(0.5 * std::log2(1.0 + cfg.gamma_value() * s_vec(k))) << '\n';
            (void)rep;
        }
    }
    std::cout << "wrote " << path << "\n";
    return 0;
}

int cmd_optimize(const CommonArgs &args, double snr_db)
{
    ScenarioConfig cfg = load_config(args);
    if (cfg.M > cfg.cccp_max_m || cfg.K > cfg.cccp_max_k)
        throw ScaleError("optimize: cccp beyond its size cap (M <= " +
                         std::to_string(cfg.cccp_max_m) + ", K <= " +
                         std::to_string(cfg.cccp_max_k) + ")");
    const LedArraySpec array = cfg.array();
    const auto uts = cfg.drop_users(0);
    const ChannelMatrix ch = channel_matrix(array, uts, cfg.bs_position());
    const double P = cfg.sigma2 * std::pow(10.0, snr_db / 10.0);
    const PowerBudget budget = cfg.budget == PowerBudget::Kind::Total
                                   ? PowerBudget::total(P)
                                   : PowerBudget::per_led(P / static_cast<double>(ch.beams()));

    CccpOptions opts = cfg.cccp;
    opts.track_kkt = true;
    const CccpResult res = cccp(ch.H, budget, cfg.gamma_value(), opts);

    const std::string path = out_path(args, "cccp_trace.csv");
    emit_trace(res.objective_trace, res.kkt_trace, path);
    std::cout << "cccp " << (res.converged ? "converged" : "NOT converged") << " in "
              << res.iterations << " iterations, objective "
              << format_real(res.objective_trace.back()) << " bits; wrote " << path << "\n";
    return res.converged ? 0 : 1;
}

int cmd_run(const CommonArgs &args)
{
    const ScenarioConfig cfg = load_config(args);
    const RunReport report = run(cfg);
    const std::string path = out_path(args, "rates.csv");
    emit_csv(report, path);
    std::cout << "wrote " << path << " (" << report.rates.size() << " rows, seed " << cfg.seed
              << ", config hash " << report.cfg_hash << ")\n";
    return 0;
}

int cmd_sweep_m(const CommonArgs &args, const std::vector<int> &m_list)
{
    const ScenarioConfig cfg = load_config(args);
    const RunReport report = sweep_m(cfg, m_list);
    const std::string rates_path = out_path(args, "sweep_rates.csv");
    const std::string ratios_path = out_path(args, "sweep_ratios.csv");
    emit_csv(report, rates_path);
    emit_ratios(report, ratios_path);
    std::cout << "wrote " << rates_path << " and " << ratios_path << "\n";
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"lensmimo: beam domain optical massive MIMO simulator"};
    app.require_subcommand(1);

    CommonArgs ch_args, im_args, pc_args, opt_args, run_args, sweep_args;

    CLI::App *c_channel = app.add_subcommand("channel", "Build one channel realization as CSV");
    add_common(c_channel, ch_args);

    CLI::App *c_imap = app.add_subcommand("intensity-map", "Receiver-plane intensity map CSV");
    add_common(c_imap, im_args);
    int grid = 61;
    bool no_lens = false;
    c_imap->add_option("--grid", grid, "Samples per axis")->capture_default_str();
    c_imap->add_flag("--no-lens", no_lens, "Map the conventional array instead");

    CLI::App *c_precode = app.add_subcommand("precode", "MRT/RZF SINR and per-user rates");
    add_common(c_precode, pc_args);

    CLI::App *c_opt = app.add_subcommand("optimize", "CCCP on one realization, trace CSV");
    add_common(c_opt, opt_args);
    double snr_db = 30.0;
    c_opt->add_option("--snr", snr_db, "Transmit SNR in dB")->capture_default_str();

    CLI::App *c_run = app.add_subcommand("run", "Monte Carlo rate sweep");
    add_common(c_run, run_args);

    CLI::App *c_sweep = app.add_subcommand("sweep-m", "Array-size sweep with rate ratios");
    add_common(c_sweep, sweep_args);
    std::vector<int> m_list = {8, 16, 32};
    c_sweep->add_option("--m-list", m_list, "Ascending LED grid sides")->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (c_channel->parsed())
            return cmd_channel(ch_args);
        if (c_imap->parsed())
            return cmd_intensity_map(im_args, grid, no_lens);
        if (c_precode->parsed())
            return cmd_precode(pc_args);
        if (c_opt->parsed())
            return cmd_optimize(opt_args, snr_db);
        if (c_run->parsed())
            return cmd_run(run_args);
        if (c_sweep->parsed())
            return cmd_sweep_m(sweep_args, m_list);
    }
    catch (const ConfigError &e)
    {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
    catch (const ScaleError &e)
    {
        std::cerr << "scale error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
