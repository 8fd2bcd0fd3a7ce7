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

#ifndef LENSMIMO_ERRORS_HPP
#define LENSMIMO_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lensmimo
{

// Invalid or inconsistent configuration input. CLI exit code 2.
class ConfigError : public std::runtime_error
{
  public:
    explicit ConfigError(const std::string &msg) : std::runtime_error(msg) {}
};

// A requested solver exceeds its configured size cap. CLI exit code 3.
class ScaleError : public std::runtime_error
{
  public:
    explicit ScaleError(const std::string &msg) : std::runtime_error(msg) {}
};

class GeometryError : public std::runtime_error
{
  public:
    explicit GeometryError(const std::string &msg) : std::runtime_error(msg) {}
};

// Ray exits the dense medium beyond the critical angle.
class TotalInternalReflection : public std::runtime_error
{
  public:
    explicit TotalInternalReflection(const std::string &msg) : std::runtime_error(msg) {}
};

// Ray does not intersect both lens surfaces.
class ApertureMiss : public std::runtime_error
{
  public:
    explicit ApertureMiss(const std::string &msg) : std::runtime_error(msg) {}
};

// Two users share the same dominant beam; the asymptotic design assumes
// distinct positions and surfaces the conflict instead of resolving it.
class DominantBeamCollision : public std::runtime_error
{
  public:
    explicit DominantBeamCollision(const std::string &msg) : std::runtime_error(msg) {}
};

class DegenerateChannel : public std::runtime_error
{
  public:
    explicit DegenerateChannel(const std::string &msg) : std::runtime_error(msg) {}
};

class SingularSystem : public std::runtime_error
{
  public:
    explicit SingularSystem(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace lensmimo

#endif
