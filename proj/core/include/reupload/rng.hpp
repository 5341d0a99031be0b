#pragma once

#include <cstdint>
#include <string_view>
#include <utility>

namespace reupload {

// xoshiro256++ with splitmix64 seeding. All randomness in the project flows
// through this generator so that datasets, initializations and Monte-Carlo
// estimates are byte-identical across platforms and worker counts.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on [0, 1) with 53-bit resolution.
  double uniform01();
  double uniform(double lo, double hi);

  // Standard normal via the Box-Muller transform (the second value of each
  // pair is cached, so draws come in a fixed order).
  double gaussian();
  double gaussian(double mean, double stddev);

 private:
  std::uint64_t state_[4];
  double cached_ = 0.0;
  bool has_cached_ = false;
};

// Derives an independent stream from (seed, purpose, index). Purposes in use:
// "init" (parameter initialization), "data" (dataset generation), "shuffle"
// (minibatch order), "mc" (Monte-Carlo sampling).
Rng derive_stream(std::uint64_t seed, std::string_view purpose,
                  std::uint64_t index = 0);

}  // namespace reupload
