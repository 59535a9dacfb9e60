// Copyright 2026 The Rabin OT Toolkit Authors
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

#ifndef RABIN_OT_PROTOCOLS_RNG_H
#define RABIN_OT_PROTOCOLS_RNG_H

#include <cstdint>
#include <span>

namespace rabin_ot::protocols {

/// SplitMix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

/// Counter-based generator. The draws of a round are a pure function of
/// (seed, round, stream), so rounds can be evaluated in any order or in
/// parallel and still reproduce bit-for-bit.
class RoundRng {
   public:
    static constexpr std::uint64_t kRoundStream = 0;
    static constexpr std::uint64_t kSelectionStream = 1;

    constexpr RoundRng(std::uint64_t seed, std::uint64_t round, std::uint64_t stream = kRoundStream)
        : key_(mix64(mix64(seed) ^ mix64(round + 0x632BE59BD9B4E019ull * (stream + 1)))) {
    }

    constexpr std::uint64_t next_u64() {
        return mix64(key_ + 0xD1342543DE82EF95ull * ++counter_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    constexpr double uniform() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    constexpr bool bernoulli(double p) {
        return uniform() < p;
    }

    constexpr int bit() {
        return static_cast<int>(next_u64() >> 63);
    }

    /// Index k drawn with probability weights[k]. A rounding shortfall in the
    /// cumulative sum goes to the last positive weight, so zero-weight
    /// indices are never returned.
    std::size_t categorical(std::span<const double> weights) {
        double u = uniform();
        double cumulative = 0;
        std::size_t last_positive = 0;
        for (std::size_t k = 0; k < weights.size(); k++) {
            if (weights[k] <= 0) {
                continue;
            }
            last_positive = k;
            cumulative += weights[k];
            if (u < cumulative) {
                return k;
            }
        }
        return last_positive;
    }

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

}  // namespace rabin_ot::protocols

#endif
