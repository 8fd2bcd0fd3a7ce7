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

#ifndef LENSMIMO_RNG_HPP
#define LENSMIMO_RNG_HPP

#include <cstdint>
#include <random>

namespace lensmimo
{

// splitmix64 step, used to derive independent substream seeds.
inline std::uint64_t splitmix64(std::uint64_t &state)
{
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Reproducible uniform generator. The engine (std::mt19937_64) and the
// 53-bit output mapping are both fully specified, so identical seeds give
// identical draws on every platform. Distribution adapters from <random>
// are deliberately avoided because their output is implementation-defined.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Independent substream for realization index `stream` of master `seed`.
    static Rng substream(std::uint64_t seed, std::uint64_t stream)
    {
        std::uint64_t s = seed ^ (0x9E3779B97F4A7C15ULL * (stream + 1));
        return Rng(splitmix64(s));
    }

    // Uniform on [0, 1) with 53 random bits.
    double uniform01()
    {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi)
    {
        return lo + (hi - lo) * uniform01();
    }

    std::uint64_t bits() { return engine_(); }

  private:
    std::mt19937_64 engine_;
};

} // namespace lensmimo

#endif
