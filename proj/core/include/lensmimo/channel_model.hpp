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
// Downlink channel construction for the lensed LED array: grid layout,
// per-user angles, energy-conserving channel gains, the no-lens baseline
// and receiver-plane intensity maps.
//
// Room frame: the base station (lens center) sits at bs_position with the
// broadcast axis pointing straight down (-z). Beam directions computed by
// the optics module live in a "beam frame" whose +z is the broadcast axis;
// a room-frame direction (dx, dy, dz) maps to (dx, dy, -dz).

#ifndef LENSMIMO_CHANNEL_MODEL_HPP
#define LENSMIMO_CHANNEL_MODEL_HPP

#include <vector>

#include <armadillo>

#include "lensmimo/lens_optics.hpp"

namespace lensmimo
{

// M x M emitter grid behind the lens. Beam index is m = i*M + j (0-based)
// where i indexes x and j indexes y.
struct LedArraySpec
{
    int M = 1;          // grid side
    double d = 0.0;     // inter-LED spacing [m]
    double omega = 0.0; // maximum illumination angle [rad]
    EmitterModel emitter;
    LensSpec lens;   // radius refit so that f = M d / omega
    double z_S = 0.0; // common emitter height
    double f = 0.0;   // focal length M d / omega
    double r = 0.0;   // refraction ratio omega / (2 M Phi)
    std::vector<EmitterPose> positions; // M^2 poses
    arma::mat beam_dirs;                // M^2 x 3 center-beam unit vectors

    arma::uword beams() const { return static_cast<arma::uword>(M) * static_cast<arma::uword>(M); }
};

// Derives the layout from the coverage design: beam width = omega / M and
// focal length f = M d / omega. The template lens supplies n and the plane
// surface placement (z_p is kept at the same fraction of R); its radius is
// rescaled to match f. Throws ConfigError if the implied z_S is not below
// the plane surface.
LedArraySpec array_layout(int M, double d, double omega, const EmitterModel &emitter,
                          const LensSpec &lens_template);

struct UserTerminal
{
    arma::vec3 position;      // room frame [m]
    double A = 1e-4;          // photodetector area [m^2]
    arma::vec3 facing = {0.0, 0.0, 1.0}; // receiver normal, unit norm
};

struct UserGeometry
{
    double d_k = 0.0;   // lens center to detector distance
    double phi_k = 0.0; // incidence angle at the detector
    arma::vec psi;      // angle to each beam center, length M^2
    arma::uword m_k = 0; // dominant beam (argmin psi, smallest index wins)
};

struct ChannelMatrix
{
    arma::mat H;  // K x M^2 nonnegative gains
    arma::vec g;  // per-user asymptotic gain g_k (tilde g_k for no-lens)
    std::vector<UserGeometry> geo;

    arma::uword users() const { return H.n_rows; }
    arma::uword beams() const { return H.n_cols; }
};

// Angles between the user and every beam center. Throws GeometryError when
// the user coincides with the lens center or faces away from it.
UserGeometry user_angles(const UserTerminal &ut, const LedArraySpec &array,
                         const arma::vec3 &bs_position);

// h = A_k / (d_k^2 r^2) * I_ij(psi) * cos(phi_k); zero outside the beam cone.
double channel_gain(const UserTerminal &ut, const UserGeometry &geo, const LedArraySpec &array,
                    arma::uword beam);

ChannelMatrix channel_matrix(const LedArraySpec &array, const std::vector<UserTerminal> &uts,
                             const arma::vec3 &bs_position);

// Conventional array without the lens; every row is constant (rank 1).
ChannelMatrix channel_no_lens(const LedArraySpec &array, const std::vector<UserTerminal> &uts,
                              const arma::vec3 &bs_position);

// |ratio - 1| between the power collected on the illuminated cap at range d
// and the power the lens transmits, by 2-D midpoint quadrature.
double energy_conservation_check(const LedArraySpec &array, arma::uword beam, double d,
                                 arma::uword n_polar = 100, arma::uword n_azimuth = 100);

struct IntensityMap
{
    arma::vec x;     // sample abscissae
    arma::vec y;     // sample ordinates
    arma::mat value; // value(i, j) at (x(i), y(j))
};

// I_r = (1/M) * 1^T h for a probe detector at each floor sample.
IntensityMap intensity_map(const LedArraySpec &array, const arma::vec3 &bs_position,
                           const arma::vec &xs, const arma::vec &ys, double probe_area,
                           bool with_lens = true);

} // namespace lensmimo

#endif
