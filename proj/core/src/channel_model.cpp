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

#include "lensmimo/channel_model.hpp"

#include <cmath>

namespace lensmimo
{

namespace
{
constexpr double kPi = 3.14159265358979323846;

double clamp_unit(double x)
{
    return x < -1.0 ? -1.0 : (x > 1.0 ? 1.0 : x);
}

// Room-frame direction to beam-frame direction (broadcast axis +z).
arma::vec3 to_beam_frame(const arma::vec3 &room_dir)
{
    return {room_dir(0), room_dir(1), -room_dir(2)};
}
} // namespace

LedArraySpec array_layout(int M, double d, double omega, const EmitterModel &emitter,
                          const LensSpec &lens_template)
{
    if (M < 1)
        throw ConfigError("array_layout: M must be at least 1");
    if (d <= 0.0)
        throw ConfigError("array_layout: LED spacing must be positive");
    if (omega <= 0.0 || omega >= kPi)
        throw ConfigError("array_layout: omega must lie in (0, pi)");

    LedArraySpec a;
    a.M = M;
    a.d = d;
    a.omega = omega;
    a.emitter = emitter;

    // The fan of M beams of width omega/M pins the focal length, hence R.
    a.f = static_cast<double>(M) * d / omega;
    const double n = lens_template.n;
    const double R = (n - 1.0) * a.f;
    const double zp_frac = lens_template.R > 0.0 ? lens_template.z_p / lens_template.R : 0.0;
    a.lens = LensSpec::general(n, R, zp_frac * R);
    a.lens.kind = lens_template.kind;

    const double Phi = emitter.Phi;
    a.z_S = (omega / (2.0 * Phi) + omega * (n - 1.0) * a.lens.z_p / (n * d) - M / n) * d / omega;
    if (a.z_S >= a.lens.z_p)
        throw ConfigError("array_layout: implied z_S is not below the plane surface");

    a.r = refraction_ratio(EmitterPose{0.0, 0.0, a.z_S}, a.lens);

    a.positions.reserve(a.beams());
    a.beam_dirs.set_size(a.beams(), 3);
    for (int i = 0; i < M; ++i)
    {
        const double x = (-(M - 1) / 2.0 + i) * d;
        for (int j = 0; j < M; ++j)
        {
            const double y = (-(M - 1) / 2.0 + j) * d;
            EmitterPose pose{x, y, a.z_S};
            const arma::vec3 dir = center_beam_direction(pose, a.lens);
            a.beam_dirs.row(static_cast<arma::uword>(i) * M + j) = dir.t();
            a.positions.push_back(pose);
        }
    }
    return a;
}

UserGeometry user_angles(const UserTerminal &ut, const LedArraySpec &array,
                         const arma::vec3 &bs_position)
{
    UserGeometry geo;
    const arma::vec3 offset = ut.position - bs_position;
    geo.d_k = arma::norm(offset);
    if (geo.d_k <= 0.0)
        throw GeometryError("user_angles: user coincides with the lens center");
    if (offset(2) >= 0.0)
        throw GeometryError("user_angles: user must sit below the base station");

    const arma::vec3 to_bs = -offset / geo.d_k;
    const double cphi = arma::dot(to_bs, ut.facing);
    if (cphi <= 0.0)
        throw GeometryError("user_angles: receiver faces away from the base station");
    geo.phi_k = std::acos(clamp_unit(cphi));

    const arma::vec3 u = to_beam_frame(offset / geo.d_k);
    geo.psi.set_size(array.beams());
    for (arma::uword m = 0; m < array.beams(); ++m)
        geo.psi(m) = std::acos(clamp_unit(arma::dot(array.beam_dirs.row(m).t(), u)));
    geo.m_k = geo.psi.index_min(); // armadillo breaks ties by smallest index
    return geo;
}

double channel_gain(const UserTerminal &ut, const UserGeometry &geo, const LedArraySpec &array,
                    arma::uword beam)
{
    const double I = refracted_intensity(array.emitter, array.r, geo.psi(beam));
    return ut.A / (geo.d_k * geo.d_k * array.r * array.r) * I * std::cos(geo.phi_k);
}

ChannelMatrix channel_matrix(const LedArraySpec &array, const std::vector<UserTerminal> &uts,
                             const arma::vec3 &bs_position)
{
    ChannelMatrix ch;
    const arma::uword K = uts.size();
    ch.H.set_size(K, array.beams());
    ch.g.set_size(K);
    ch.geo.reserve(K);

    const double Phi = array.emitter.Phi;
    const double peak = (array.emitter.m_L + 1.0) / (2.0 * kPi);
    for (arma::uword k = 0; k < K; ++k)
    {
        UserGeometry geo = user_angles(uts[k], array, bs_position);
        for (arma::uword m = 0; m < array.beams(); ++m)
            ch.H(k, m) = channel_gain(uts[k], geo, array, m);
        ch.g(k) = array.emitter.T_lens * uts[k].A * 4.0 * Phi * Phi /
                  (array.omega * array.omega * geo.d_k * geo.d_k) * peak * std::cos(geo.phi_k);
        ch.geo.push_back(std::move(geo));
    }
    return ch;
}

ChannelMatrix channel_no_lens(const LedArraySpec &array, const std::vector<UserTerminal> &uts,
                              const arma::vec3 &bs_position)
{
    ChannelMatrix ch;
    const arma::uword K = uts.size();
    ch.H.set_size(K, array.beams());
    ch.g.set_size(K);
    ch.geo.reserve(K);

    for (arma::uword k = 0; k < K; ++k)
    {
        UserGeometry geo = user_angles(uts[k], array, bs_position);
        // Downward-facing bare LEDs: emission angle equals the polar angle of
        // the line to the user, which for an upward-facing detector is phi_k.
        const arma::vec3 offset = uts[k].position - bs_position;
        const double cos_emit = clamp_unit(-offset(2) / geo.d_k);
        const double emit_angle = std::acos(cos_emit);
        const double tg = uts[k].A / (geo.d_k * geo.d_k) *
                          lambertian_intensity(array.emitter, emit_angle) * std::cos(geo.phi_k);
        ch.H.row(k).fill(tg);
        ch.g(k) = tg;
        ch.geo.push_back(std::move(geo));
    }
    return ch;
}

double energy_conservation_check(const LedArraySpec &array, arma::uword beam, double d,
                                 arma::uword n_polar, arma::uword n_azimuth)
{
    (void)beam; // identical for every LED: the integrand only depends on psi
    const double r = array.r;
    const double Phi = array.emitter.Phi;
    const double A = 1.0; // cancels in the ratio

    // Received power over the illuminated cap at range d, cos(phi_k) = 1:
    // integral of gamma(d) I(psi) d^2 sin(psi) over the cap.
    double received = 0.0;
    const double dpsi = r * Phi / static_cast<double>(n_polar);
    const double dzeta = 2.0 * kPi / static_cast<double>(n_azimuth);
    for (arma::uword i = 0; i < n_polar; ++i)
    {
        const double psi = (i + 0.5) * dpsi;
        const double I = refracted_intensity(array.emitter, r, psi);
        received += A / (d * d * r * r) * I * d * d * std::sin(psi) * dpsi *
                    static_cast<double>(n_azimuth) * dzeta;
    }

    // Power the lens transmits out of the limited emission cone.
    double transmitted = 0.0;
    const double dphi = Phi / static_cast<double>(n_polar);
    for (arma::uword i = 0; i < n_polar; ++i)
    {
        const double phi = (i + 0.5) * dphi;
        transmitted += array.emitter.T_lens * lambertian_intensity(array.emitter, phi) *
                       std::sin(phi) * dphi * 2.0 * kPi;
    }
    return std::abs(received / (A * transmitted) - 1.0);
}

IntensityMap intensity_map(const LedArraySpec &array, const arma::vec3 &bs_position,
                           const arma::vec &xs, const arma::vec &ys, double probe_area,
                           bool with_lens)
{
    IntensityMap map;
    map.x = xs;
    map.y = ys;
    map.value.set_size(xs.n_elem, ys.n_elem);

    UserTerminal probe;
    probe.A = probe_area;
    probe.facing = {0.0, 0.0, 1.0};
    std::vector<UserTerminal> one(1);
    for (arma::uword i = 0; i < xs.n_elem; ++i)
        for (arma::uword j = 0; j < ys.n_elem; ++j)
        {
            probe.position = {xs(i), ys(j), 0.0};
            one[0] = probe;
            const ChannelMatrix ch = with_lens ? channel_matrix(array, one, bs_position)
                                               : channel_no_lens(array, one, bs_position);
            map.value(i, j) = arma::accu(ch.H.row(0)) / static_cast<double>(array.M);
        }
    return map;
}

} // namespace lensmimo
