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
// Scenario definitions: room geometry, array/lens parameters, user
// placement, budgets, SNR sweeps and scheme lists, plus the `key = value`
// config-file parser. Degrees are accepted here and converted to radians
// at the boundary.

#ifndef LENSMIMO_SCENARIO_HPP
#define LENSMIMO_SCENARIO_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lensmimo/channel_model.hpp"
#include "lensmimo/covariance.hpp"
#include "lensmimo/optimization.hpp"
#include "lensmimo/rng.hpp"

namespace lensmimo
{

enum class Scheme
{
    Mrt,
    Rzf,
    Cccp,
    BdmaBa,
    BdmaAd,
    NoLens
};

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string &name);

struct ScenarioConfig
{
    // room (width, depth, height) in meters; floor at z = 0, BS at the
    // ceiling center (0, 0, height) broadcasting straight down
    double room_w = 5.0, room_d = 5.0, room_h = 3.0;

    int M = 12;       // grid side, M^2 LEDs
    double d = 0.01;  // LED spacing [m]
    double phi_C_deg = 30.0;
    double Phi_deg = -1.0;   // < 0: default min(2 phi_C, 90)
    double n = 1.5;
    double R = 0.1;          // advisory; the layout refits it to f = Md/omega
    double z_p = 0.0;
    double omega_deg = -1.0; // < 0: auto, covers the room diagonal

    int K = 20;
    enum class Placement
    {
        Random,
        Uniform
    } placement = Placement::Random;
    std::uint64_t seed = 1;
    int realizations = 100;
    double uniform_origin = -7.6;
    double uniform_step = 0.69;

    double A = 1e-4;
    double T_lens = 1.0;
    double sigma2 = 1.0;

    PowerBudget::Kind budget = PowerBudget::Kind::Total;
    std::vector<double> snr_db; // default -10..60 step 5
    double gamma = 0.0;         // 0: default lower bound
    std::vector<Scheme> schemes;
    int B_max = 4;

    // CCCP is refused beyond these sizes (ScaleError).
    int cccp_max_m = 16;
    int cccp_max_k = 32;
    CccpOptions cccp;

    double omega() const;           // radians
    double gamma_value() const;     // resolved coefficient
    EmitterModel emitter() const;
    LensSpec lens_template() const;
    LedArraySpec array() const { return array_for_m(M); }
    LedArraySpec array_for_m(int m) const;
    arma::vec3 bs_position() const { return {0.0, 0.0, room_h}; }

    // Users for one Monte Carlo realization; deterministic in (seed, index).
    std::vector<UserTerminal> drop_users(std::uint64_t realization) const;

    void validate() const; // throws ConfigError
};

// Parses `key = value` lines with '#' comments; unknown keys are errors.
ScenarioConfig parse_config(std::istream &in);
ScenarioConfig parse_config_file(const std::string &path);

// Canonical serialization (also the determinism/report hash input).
std::string serialize_config(const ScenarioConfig &cfg);
std::uint64_t config_hash(const ScenarioConfig &cfg);

struct BuiltinScenarios
{
    ScenarioConfig small_area; // 12x12 LEDs, 20 UTs, 5 m x 5 m x 3 m
    ScenarioConfig wide_area;  // 80x80 LEDs, 484 UTs, 16 m x 16 m x 8 m
};
BuiltinScenarios builtin_scenarios();

} // namespace lensmimo

#endif
