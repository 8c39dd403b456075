// Copyright 2026 The PSMRLab Authors. All rights reserved.
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

#ifndef PSMRLAB_RNG_H_
#define PSMRLAB_RNG_H_

#include <cstdint>
#include <random>
#include <span>

namespace psmrlab {

// Identifies one of the independent random streams of an episode.
enum class Stream : std::uint64_t {
  kLearner = 1,
  kAdversary = 2,
  kNoise = 3,
  kAux = 4,
};

std::uint64_t SplitMix64(std::uint64_t x);

// Deterministic generator. Doubles are built from the top 53 bits so draws
// are identical across standard library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(SplitMix64(seed)) {}
  Rng(std::uint64_t seed, Stream stream)
      : engine_(SplitMix64(seed ^ SplitMix64(static_cast<std::uint64_t>(stream)
                                             * 0x9E3779B97F4A7C15ULL))) {}

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1).
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return Uniform() < p; }

  // Samples an index from a probability vector by inverse CDF. The last
  // index with positive weight absorbs rounding slack.
  int Categorical(std::span<const double> probs);

  // Standard normal via Box-Muller (one value per call).
  double Normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace psmrlab

#endif  // PSMRLAB_RNG_H_
