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
// Geometric-optics kernel for a spherical lens in front of an LED: exact
// two-surface refraction, the paraxial (small-angle) model, Lambertian
// emission and the refracted-beam intensity with its hard angular cutoff.
//
// Coordinate convention: the center of the spherical surface is the origin,
// the plane surface lies at z = z_p facing the emitters, and +z is the
// broadcast axis. Emitters sit below the plane surface (z_S < z_p). Angles
// are radians everywhere; degrees only appear at CLI/config boundaries.

#ifndef LENSMIMO_LENS_OPTICS_HPP
#define LENSMIMO_LENS_OPTICS_HPP

#include <armadillo>

#include "lensmimo/errors.hpp"

namespace lensmimo
{

enum class LensKind
{
    Hemispherical, // plane surface through the sphere center (z_p = 0)
    Thin,          // plane surface at the top of the sphere (z_p = R)
    General        // anything in between
};

struct LensSpec
{
    double n = 1.5;   // refractive index, > 1
    double R = 0.1;   // spherical surface radius [m]
    double z_p = 0.0; // plane surface height [m], 0 <= z_p <= R
    LensKind kind = LensKind::Hemispherical;

    double focal_length() const { return R / (n - 1.0); }

    static LensSpec hemispherical(double n, double R);
    static LensSpec thin(double n, double R);
    static LensSpec general(double n, double R, double z_p);
};

struct EmitterPose
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0; // must be below the plane surface

    double radial_offset() const { return std::hypot(x, y); }
};

struct Ray
{
    arma::vec3 origin;
    arma::vec3 direction; // unit norm
};

// Full record of one exact two-surface trace (see Fig-2-style geometry):
// plane refraction at P1, sphere refraction at P2.
struct RefractionTrace
{
    double phi = 0.0;    // emission polar angle
    double zeta0 = 0.0;  // emission azimuth
    double xi = 0.0;     // refraction angle at the plane surface
    double alpha = 0.0;  // polar angle of the sphere normal at P2
    double alpha1 = 0.0; // incidence angle at the sphere surface
    double alpha2 = 0.0; // refraction angle at the sphere surface
    double theta = 0.0;  // exit polar angle
    double zeta1 = 0.0;  // exit azimuth
    arma::vec3 p1;       // plane-surface hit point
    arma::vec3 p2;       // sphere-surface hit point
    arma::vec3 exit_dir; // unit exit direction
};

struct EmitterModel
{
    double phi_C = 0.0;  // semi-angle of half intensity
    double m_L = 1.0;    // Lambertian order
    double Phi = 0.0;    // limited emission angle, (0, pi/2]
    double T_lens = 1.0; // constant optical lens gain

    // Phi < 0 selects the default limited angle min(2*phi_C, pi/2).
    static EmitterModel from_half_angle(double phi_C, double Phi = -1.0, double T_lens = 1.0);
};

// m_L = -log 2 / log(cos phi_C); >= 1 iff phi_C <= 60 deg.
double lambertian_order(double phi_C);

// I0(phi) = (m_L + 1) / (2 pi) cos^m_L(phi) on [0, pi/2].
double lambertian_intensity(const EmitterModel &m, double phi);

// Snell at the plane surface entering the dense medium: xi = asin(sin(phi)/n).
double refract_plane(double phi, double n);

// Vector Snell law leaving the lens at sphere point p2 (||p2|| = R).
// v is the unit in-glass direction. Throws TotalInternalReflection.
arma::vec3 refract_sphere(const arma::vec3 &v, const arma::vec3 &p2, double n);

// Exact trace of the (phi, zeta0) emission through both surfaces.
// Throws ApertureMiss / TotalInternalReflection.
RefractionTrace trace_exact(const EmitterPose &e, const LensSpec &lens, double phi, double zeta0);

struct ParaxialAngles
{
    double theta;  // theta0 - psi
    double theta0; // refraction angle of the center light
    double psi;    // angle relative to the refracted center light
};

// Small-angle model; valid for |phi| up to about 0.52 rad.
ParaxialAngles paraxial_theta(const EmitterPose &e, const LensSpec &lens, double phi);

// Ratio psi/phi of the paraxial model; depends only on vertical positions.
double refraction_ratio(const EmitterPose &e, const LensSpec &lens);

// Full angular width of the refracted beam.
double beam_width(double r, double Phi);

// Refracted intensity at angle psi from the beam center; zero for psi >= r*Phi.
double refracted_intensity(const EmitterModel &m, double r, double psi);

// Unit direction of the refracted center light: polar angle theta0, azimuth
// atan2(-y_S, -x_S). An on-axis emitter maps to (0, 0, 1).
arma::vec3 center_beam_direction(const EmitterPose &e, const LensSpec &lens);

} // namespace lensmimo

#endif
