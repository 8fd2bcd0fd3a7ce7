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

#include "lensmimo/lens_optics.hpp"

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
} // namespace

LensSpec LensSpec::hemispherical(double n, double R)
{
    if (n <= 1.0 || R <= 0.0)
        throw ConfigError("lens: need n > 1 and R > 0");
    return {n, R, 0.0, LensKind::Hemispherical};
}

LensSpec LensSpec::thin(double n, double R)
{
    if (n <= 1.0 || R <= 0.0)
        throw ConfigError("lens: need n > 1 and R > 0");
    return {n, R, R, LensKind::Thin};
}

LensSpec LensSpec::general(double n, double R, double z_p)
{
    if (n <= 1.0 || R <= 0.0)
        throw ConfigError("lens: need n > 1 and R > 0");
    if (z_p < 0.0 || z_p > R)
        throw ConfigError("lens: plane surface must satisfy 0 <= z_p <= R");
    LensKind kind = LensKind::General;
    if (z_p <= 1e-12 * R)
        kind = LensKind::Hemispherical;
    else if (std::abs(z_p - R) <= 1e-12 * R)
        kind = LensKind::Thin;
    return {n, R, z_p, kind};
}

EmitterModel EmitterModel::from_half_angle(double phi_C, double Phi, double T_lens)
{
    if (Phi < 0.0)
        Phi = std::min(2.0 * phi_C, kPi / 2.0);
    if (Phi <= 0.0 || Phi > kPi / 2.0)
        throw ConfigError("emitter: limited angle must lie in (0, pi/2]");
    if (T_lens <= 0.0)
        throw ConfigError("emitter: T_lens must be positive");
    return {phi_C, lambertian_order(phi_C), Phi, T_lens};
}

double lambertian_order(double phi_C)
{
    if (!(phi_C > 0.0) || !(phi_C < kPi / 2.0))
        throw std::domain_error("lambertian_order: phi_C must lie in (0, pi/2)");
    return -std::log(2.0) / std::log(std::cos(phi_C));
}

double lambertian_intensity(const EmitterModel &m, double phi)
{
    if (phi < 0.0 || phi > kPi / 2.0)
        throw std::domain_error("lambertian_intensity: phi must lie in [0, pi/2]");
    return (m.m_L + 1.0) / (2.0 * kPi) * std::pow(std::cos(phi), m.m_L);
}

double refract_plane(double phi, double n)
{
    return std::asin(std::sin(phi) / n);
}

arma::vec3 refract_sphere(const arma::vec3 &v, const arma::vec3 &p2, double n)
{
    const double R = arma::norm(p2);
    const arma::vec3 nhat = -p2 / R; // inward normal
    const double c = -arma::dot(nhat, v);
    const double rad = 1.0 - n * n * (1.0 - c * c);
    if (rad < 0.0)
        throw TotalInternalReflection("refract_sphere: incidence beyond the critical angle");
    arma::vec3 r = n * v + (n * c - std::sqrt(rad)) * nhat;
    return arma::normalise(r);
}

RefractionTrace trace_exact(const EmitterPose &e, const LensSpec &lens, double phi, double zeta0)
{
    if (e.z >= lens.z_p)
        throw GeometryError("trace_exact: emitter must sit below the plane surface");
    if (phi < 0.0 || phi >= kPi / 2.0)
        throw GeometryError("trace_exact: emission polar angle must lie in [0, pi/2)");

    RefractionTrace t;
    t.phi = phi;
    t.zeta0 = zeta0;
    t.xi = refract_plane(phi, lens.n);

    // Hit point on the plane surface z = z_p.
    const double cz0 = std::cos(zeta0), sz0 = std::sin(zeta0);
    const double run = std::tan(phi) * (lens.z_p - e.z);
    t.p1 = {e.x + run * cz0, e.y + run * sz0, lens.z_p};

    const double aperture2 = lens.R * lens.R - lens.z_p * lens.z_p;
    if (t.p1(0) * t.p1(0) + t.p1(1) * t.p1(1) > aperture2)
        throw ApertureMiss("trace_exact: ray misses the plane surface aperture");

    // In-glass segment. Equivalent to a virtual source S' on the emitter's
    // vertical with z_p - z_S' = (z_p - z_S) tan(phi)/tan(xi).
    const arma::vec3 v = {std::sin(t.xi) * cz0, std::sin(t.xi) * sz0, std::cos(t.xi)};

    // Forward intersection with the sphere ||p1 + s v|| = R.
    const double b = arma::dot(t.p1, v);
    const double c0 = arma::dot(t.p1, t.p1) - lens.R * lens.R;
    const double disc = b * b - c0;
    if (disc < 0.0)
        throw ApertureMiss("trace_exact: in-glass ray misses the spherical surface");
    const double s = -b + std::sqrt(disc);
    t.p2 = t.p1 + s * v;

    t.exit_dir = refract_sphere(v, t.p2, lens.n);

    t.alpha = std::acos(clamp_unit(t.p2(2) / lens.R));
    t.alpha1 = std::acos(clamp_unit(arma::dot(v, t.p2) / lens.R));
    t.alpha2 = std::acos(clamp_unit(arma::dot(t.exit_dir, t.p2) / lens.R));
    t.theta = std::acos(clamp_unit(t.exit_dir(2)));
    t.zeta1 = std::atan2(t.exit_dir(1), t.exit_dir(0));
    return t;
}

ParaxialAngles paraxial_theta(const EmitterPose &e, const LensSpec &lens, double phi)
{
    const double theta0 = (lens.n - 1.0) * e.radial_offset() / lens.R;
    const double psi = phi * refraction_ratio(e, lens);
    return {theta0 - psi, theta0, psi};
}

double refraction_ratio(const EmitterPose &e, const LensSpec &lens)
{
    const double n = lens.n;
    return 1.0 / n + e.z * (n - 1.0) / lens.R - (n - 1.0) * (n - 1.0) * lens.z_p / (n * lens.R);
}

double beam_width(double r, double Phi)
{
    return 2.0 * r * Phi;
}

double refracted_intensity(const EmitterModel &m, double r, double psi)
{
    const double phi = psi / r;
    if (phi >= m.Phi || phi > kPi / 2.0)
        return 0.0; // unit-step cutoff, boundary excluded
    return m.T_lens * lambertian_intensity(m, phi);
}

arma::vec3 center_beam_direction(const EmitterPose &e, const LensSpec &lens)
{
    const double theta0 = (lens.n - 1.0) * e.radial_offset() / lens.R;
    const double zeta = std::atan2(-e.y, -e.x);
    return {std::sin(theta0) * std::cos(zeta), std::sin(theta0) * std::sin(zeta), std::cos(theta0)};
}

} // namespace lensmimo
