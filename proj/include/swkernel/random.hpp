// Copyright 2026 The swkernel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWKERNEL_RANDOM_HPP
#define SWKERNEL_RANDOM_HPP

#include <cstdint>
#include <limits>
#include <random>

#include "swkernel/linalg.hpp"

namespace swk {

/// SplitMix64. Small state, so one engine per Monte Carlo sample is cheap.
class SplitMix64 {
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state) : state_(state) {}

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    static constexpr std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

/// Independent stream number `counter` derived from a master seed. Sample k of
/// any Monte Carlo loop draws from substream(seed, k) and nothing else, so
/// results do not depend on how the loop is partitioned.
inline SplitMix64 substream(std::uint64_t seed, std::uint64_t counter) {
    return SplitMix64(SplitMix64::mix(seed ^ 0x6A09E667F3BCC909ULL) ^
                      SplitMix64::mix(counter + 0xBB67AE8584CAA73BULL));
}

/// Standard complex Gaussian: E|z|^2 = 1.
template <class Engine>
Complex complex_gaussian(Engine& rng) {
    std::normal_distribution<double> normal(0.0, 1.0 / std::sqrt(2.0));
    const double re = normal(rng);
    const double im = normal(rng);
    return {re, im};
}

template <class Engine>
Matrix ginibre(int n, Engine& rng) {
    Matrix z(n, n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) z(i, j) = complex_gaussian(rng);
    return z;
}

/// Hermitian matrix with Gaussian entries (GUE-like), for property tests and checks.
template <class Engine>
Matrix random_hermitian(int n, Engine& rng) {
    const Matrix z = ginibre(n, rng);
    return (z + z.adjoint()) / 2.0;
}

}  // namespace swk

#endif  // SWKERNEL_RANDOM_HPP
