// Copyright 2026 The mirrorqsd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Counter-based random generator with a fully specified algorithm, so a
 * reimplementation in any language reproduces the same stream bit for bit.
 *
 * The value for draw index n (n = 0, 1, 2, ...) under seed s is
 *
 *     mix64(s + (n + 1) * 0x9E3779B97F4A7C15)
 *
 * where all arithmetic is modulo 2^64 and mix64 is the SplitMix64
 * finalizer (Steele, Lea & Flood; used by Java's SplittableRandom):
 *
 *     z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
 *     z ^= z >> 27;  z *= 0x94D049BB133111EB;
 *     z ^= z >> 31;
 *
 * A uniform double in [0, 1) takes the top 53 bits: (value >> 11) * 2^-53.
 * Because draws are addressed by counter rather than by mutable state,
 * any contiguous range of draw indices can be evaluated independently;
 * sharded simulations merge to the same result as a sequential run.
 */

#pragma once

#include <array>
#include <cstdint>

namespace mirrorqsd {

class CounterRng {
  public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t seed() const { return seed_; }

    std::uint64_t value_at(std::uint64_t counter) const
    {
        std::uint64_t z = seed_ + (counter + 1) * UINT64_C(0x9E3779B97F4A7C15);
        z = (z ^ (z >> 30)) * UINT64_C(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)) * UINT64_C(0x94D049BB133111EB);
        return z ^ (z >> 31);
    }

    /// Uniform in [0, 1), 53 random bits.
    double uniform01_at(std::uint64_t counter) const
    {
        return static_cast<double>(value_at(counter) >> 11) * 0x1.0p-53;
    }

  private:
    std::uint64_t seed_;
};

/// Inverse-CDF draw from a 3-category distribution: the smallest index
/// whose cumulative probability exceeds u, with the last category
/// absorbing any rounding defect in the total.
inline int draw_categorical3(double u, const std::array<double, 3> &probs)
{
    double cumulative = 0.0;
    for (int i = 0; i < 2; ++i) {
        cumulative += probs[static_cast<std::size_t>(i)];
        if (u < cumulative) {
            return i;
        }
    }
    return 2;
}

} // namespace mirrorqsd
