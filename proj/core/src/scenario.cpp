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

#include "lensmimo/scenario.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "lensmimo/precoding.hpp"

namespace lensmimo
{

namespace
{
constexpr double kPi = 3.14159265358979323846;

double deg2rad(double d)
{
    return d * kPi / 180.0;
}

std::string trim(const std::string &s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string &s)
{
    std::vector<std::string> out;
    std::istringstream iss(s);
    std::string tok;
    while (iss >> tok)
    {
        if (!tok.empty() && tok.back() == ',')
            tok.pop_back();
        if (!tok.empty())
            out.push_back(tok);
    }
    return out;
}

double parse_double(const std::string &key, const std::string &v)
{
    try
    {
        std::size_t pos = 0;
        const double x = std::stod(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return x;
    }
    catch (const std::exception &)
    {
        throw ConfigError("config: invalid number for '" + key + "': " + v);
    }
}

long parse_long(const std::string &key, const std::string &v)
{
    try
    {
        std::size_t pos = 0;
        const long x = std::stol(v, &pos);
        if (pos != v.size())
            throw std::invalid_argument(v);
        return x;
    }
    catch (const std::exception &)
    {
        throw ConfigError("config: invalid integer for '" + key + "': " + v);
    }
}

// "lo:hi:step" range or a whitespace/comma separated list.
std::vector<double> parse_snr_list(const std::string &v)
{
    std::vector<double> out;
    if (v.find(':') != std::string::npos)
    {
        std::vector<std::string> parts;
        std::stringstream ss(v);
        std::string tok;
        while (std::getline(ss, tok, ':'))
            parts.push_back(tok);
        if (parts.size() != 3)
            throw ConfigError("config: snr_db range must be lo:hi:step");
        const double lo = parse_double("snr_db", trim(parts[0]));
        const double hi = parse_double("snr_db", trim(parts[1]));
        const double step = parse_double("snr_db", trim(parts[2]));
        if (step <= 0.0 || hi < lo)
            throw ConfigError("config: snr_db range must ascend with positive step");
        for (double x = lo; x <= hi + 1e-9; x += step)
            out.push_back(x);
        return out;
    }
    for (const auto &tok : split_ws(v))
        out.push_back(parse_double("snr_db", tok));
    return out;
}
} // namespace

std::string scheme_name(Scheme s)
{
    switch (s)
    {
    case Scheme::Mrt:
        return "mrt";
    case Scheme::Rzf:
        return "rzf";
    case Scheme::Cccp:
        return "cccp";
    case Scheme::BdmaBa:
        return "bdma-ba";
    case Scheme::BdmaAd:
        return "bdma-ad";
    case Scheme::NoLens:
        return "no-lens";
    }
    return "?";
}

Scheme parse_scheme(const std::string &name)
{
    if (name == "mrt")
        return Scheme::Mrt;
    if (name == "rzf")
        return Scheme::Rzf;
    if (name == "cccp")
        return Scheme::Cccp;
    if (name == "bdma-ba")
        return Scheme::BdmaBa;
    if (name == "bdma-ad")
        return Scheme::BdmaAd;
    if (name == "no-lens")
        return Scheme::NoLens;
    throw ConfigError("config: unknown scheme '" + name + "'");
}

double ScenarioConfig::omega() const
{
    if (omega_deg > 0.0)
        return deg2rad(omega_deg);
    // Cover the room diagonal from the ceiling.
    const double diag = std::hypot(room_w, room_d);
    return 2.0 * std::atan2(diag / 2.0, room_h);
}

double ScenarioConfig::gamma_value() const
{
    return gamma > 0.0 ? gamma : gamma_lower_bound();
}

EmitterModel ScenarioConfig::emitter() const
{
    const double Phi = Phi_deg > 0.0 ? deg2rad(Phi_deg) : -1.0;
    return EmitterModel::from_half_angle(deg2rad(phi_C_deg), Phi, T_lens);
}

LensSpec ScenarioConfig::lens_template() const
{
    return LensSpec::general(n, R, z_p);
}

LedArraySpec ScenarioConfig::array_for_m(int m) const
{
    return array_layout(m, d, omega(), emitter(), lens_template());
}

std::vector<UserTerminal> ScenarioConfig::drop_users(std::uint64_t realization) const
{
    std::vector<UserTerminal> uts;
    uts.reserve(K);
    if (placement == Placement::Uniform)
    {
        const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(K))));
        if (side * side != K)
            throw ConfigError("config: uniform placement needs a square user count");
        for (int i = 0; i < side; ++i)
            for (int j = 0; j < side; ++j)
            {
                UserTerminal ut;
                ut.position = {uniform_origin + uniform_step * i,
                               uniform_origin + uniform_step * j, 0.0};
                ut.A = A;
                uts.push_back(ut);
            }
        return uts;
    }
    Rng rng = Rng::substream(seed, realization);
    for (int k = 0; k < K; ++k)
    {
        UserTerminal ut;
        ut.position = {rng.uniform(-room_w / 2.0, room_w / 2.0),
                       rng.uniform(-room_d / 2.0, room_d / 2.0), 0.0};
        ut.A = A;
        uts.push_back(ut);
    }
    return uts;
}

void ScenarioConfig::validate() const
{
    if (room_w <= 0.0 || room_d <= 0.0 || room_h <= 0.0)
        throw ConfigError("config: room dimensions must be positive");
    if (M < 1)
        throw ConfigError("config: M must be at least 1");
    if (K < 1)
        throw ConfigError("config: K must be at least 1");
    if (realizations < 1)
        throw ConfigError("config: realizations must be at least 1");
    if (snr_db.empty())
        throw ConfigError("config: SNR list must not be empty");
    if (A <= 0.0 || sigma2 <= 0.0)
        throw ConfigError("config: A and sigma2 must be positive");
    if (gamma > 0.0)
        validate_gamma(gamma);
    if (placement == Placement::Uniform)
    {
        const int side = static_cast<int>(std::lround(std::sqrt(static_cast<double>(K))));
        if (side * side != K)
            throw ConfigError("config: uniform placement needs a square user count");
    }
    emitter();        // validates phi_C / Phi / T_lens
    lens_template();  // validates n / R / z_p
    (void)array();    // validates the implied layout
}

ScenarioConfig parse_config(std::istream &in)
{
    ScenarioConfig cfg;
    cfg.snr_db.clear();
    cfg.schemes.clear();

    std::string line;
    int lineno = 0;
    while (std::getline(in, line))
    {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (val.empty())
            throw ConfigError("config: empty value for '" + key + "'");

        if (key == "room")
        {
            const auto parts = split_ws(val);
            if (parts.size() != 3)
                throw ConfigError("config: room needs width depth height");
            cfg.room_w = parse_double(key, parts[0]);
            cfg.room_d = parse_double(key, parts[1]);
            cfg.room_h = parse_double(key, parts[2]);
        }
        else if (key == "M")
            cfg.M = static_cast<int>(parse_long(key, val));
        else if (key == "d")
            cfg.d = parse_double(key, val);
        else if (key == "phi_C")
            cfg.phi_C_deg = parse_double(key, val);
        else if (key == "Phi")
            cfg.Phi_deg = parse_double(key, val);
        else if (key == "n")
            cfg.n = parse_double(key, val);
        else if (key == "R")
            cfg.R = parse_double(key, val);
        else if (key == "z_p")
            cfg.z_p = parse_double(key, val);
        else if (key == "omega")
            cfg.omega_deg = (val == "auto") ? -1.0 : parse_double(key, val);
        else if (key == "K")
            cfg.K = static_cast<int>(parse_long(key, val));
        else if (key == "placement")
        {
            if (val == "random")
                cfg.placement = ScenarioConfig::Placement::Random;
            else if (val == "uniform")
                cfg.placement = ScenarioConfig::Placement::Uniform;
            else
                throw ConfigError("config: placement must be random or uniform");
        }
        else if (key == "seed")
            cfg.seed = static_cast<std::uint64_t>(parse_long(key, val));
        else if (key == "realizations")
            cfg.realizations = static_cast<int>(parse_long(key, val));
        else if (key == "origin")
            cfg.uniform_origin = parse_double(key, val);
        else if (key == "step")
            cfg.uniform_step = parse_double(key, val);
        else if (key == "A")
            cfg.A = parse_double(key, val);
        else if (key == "T_lens")
            cfg.T_lens = parse_double(key, val);
        else if (key == "sigma2")
            cfg.sigma2 = parse_double(key, val);
        else if (key == "budget")
        {
            if (val == "total")
                cfg.budget = PowerBudget::Kind::Total;
            else if (val == "per-led")
                cfg.budget = PowerBudget::Kind::PerLed;
            else
                throw ConfigError("config: budget must be total or per-led");
        }
        else if (key == "snr_db")
            cfg.snr_db = parse_snr_list(val);
        else if (key == "gamma")
        {
            if (val == "lb")
                cfg.gamma = gamma_lower_bound();
            else if (val == "ub")
                cfg.gamma = 1.0;
            else
                cfg.gamma = parse_double(key, val);
        }
        else if (key == "schemes")
        {
            for (const auto &tok : split_ws(val))
                cfg.schemes.push_back(parse_scheme(tok));
        }
        else if (key == "B_max")
            cfg.B_max = static_cast<int>(parse_long(key, val));
        else if (key == "cccp_max_m")
            cfg.cccp_max_m = static_cast<int>(parse_long(key, val));
        else if (key == "cccp_max_k")
            cfg.cccp_max_k = static_cast<int>(parse_long(key, val));
        else
            throw ConfigError("config: unknown key '" + key + "'");
    }

    if (cfg.snr_db.empty())
        for (double x = -10.0; x <= 60.0 + 1e-9; x += 5.0)
            cfg.snr_db.push_back(x);
    if (cfg.schemes.empty())
        cfg.schemes = {Scheme::Mrt, Scheme::Rzf, Scheme::BdmaBa, Scheme::BdmaAd, Scheme::NoLens};
    cfg.validate();
    return cfg;
}

ScenarioConfig parse_config_file(const std::string &path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("config: cannot open '" + path + "'");
    return parse_config(in);
}

std::string serialize_config(const ScenarioConfig &cfg)
{
    std::ostringstream os;
    os.precision(17);
    os << "room = " << cfg.room_w << ' ' << cfg.room_d << ' ' << cfg.room_h << '\n'
       << "M = " << cfg.M << '\n'
       << "d = " << cfg.d << '\n'
       << "phi_C = " << cfg.phi_C_deg << '\n'
       << "Phi = " << cfg.Phi_deg << '\n'
       << "n = " << cfg.n << '\n'
       << "R = " << cfg.R << '\n'
       << "z_p = " << cfg.z_p << '\n'
       << "omega = " << cfg.omega_deg << '\n'
       << "K = " << cfg.K << '\n'
       << "placement = "
       << (cfg.placement == ScenarioConfig::Placement::Random ? "random" : "uniform") << '\n'
       << "seed = " << cfg.seed << '\n'
       << "realizations = " << cfg.realizations << '\n'
       << "origin = " << cfg.uniform_origin << '\n'
       << "step = " << cfg.uniform_step << '\n'
       << "A = " << cfg.A << '\n'
       << "T_lens = " << cfg.T_lens << '\n'
       << "sigma2 = " << cfg.sigma2 << '\n'
       << "budget = " << (cfg.budget == PowerBudget::Kind::Total ? "total" : "per-led") << '\n';
    os << "snr_db =";
    for (const double x : cfg.snr_db)
        os << ' ' << x;
    os << '\n';
    os << "gamma = " << cfg.gamma_value() << '\n';
    os << "schemes =";
    for (const Scheme s : cfg.schemes)
        os << ' ' << scheme_name(s);
    os << '\n';
    os << "B_max = " << cfg.B_max << '\n';
    return os.str();
}

std::uint64_t config_hash(const ScenarioConfig &cfg)
{
    // FNV-1a over the canonical serialization.
    const std::string s = serialize_config(cfg);
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (const unsigned char c : s)
    {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

BuiltinScenarios builtin_scenarios()
{
    BuiltinScenarios b;

    b.small_area.room_w = 5.0;
    b.small_area.room_d = 5.0;
    b.small_area.room_h = 3.0;
    b.small_area.M = 12;
    b.small_area.K = 20;
    b.small_area.placement = ScenarioConfig::Placement::Random;
    for (double x = -10.0; x <= 60.0 + 1e-9; x += 5.0)
        b.small_area.snr_db.push_back(x);
    b.small_area.schemes = {Scheme::Mrt,    Scheme::Rzf,    Scheme::Cccp,
                            Scheme::BdmaBa, Scheme::BdmaAd, Scheme::NoLens};

    b.wide_area.room_w = 16.0;
    b.wide_area.room_d = 16.0;
    b.wide_area.room_h = 8.0;
    b.wide_area.M = 80;
    b.wide_area.K = 484;
    b.wide_area.placement = ScenarioConfig::Placement::Uniform;
    b.wide_area.uniform_origin = -7.6;
    b.wide_area.uniform_step = 0.69;
    b.wide_area.realizations = 1;
    for (double x = -10.0; x <= 60.0 + 1e-9; x += 5.0)
        b.wide_area.snr_db.push_back(x);
    b.wide_area.schemes = {Scheme::Mrt, Scheme::BdmaBa, Scheme::BdmaAd, Scheme::NoLens};

    return b;
}

} // namespace lensmimo
