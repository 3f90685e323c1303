// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The invmilo Authors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace invmilo {

// xoshiro256** seeded through SplitMix64. The stream is pinned so seeded
// runs reproduce across platforms and language ports:
//  - uniform_index(bound) rejects draws >= the largest multiple of bound;
//  - uniform_real() uses the top 53 bits;
//  - random_subset(n, s) runs the first s steps of a forward Fisher-Yates
//    shuffle of 0..n-1 and returns those s entries sorted.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  std::uint64_t uniform_index(std::uint64_t bound);  // in [0, bound)
  double uniform_real();                              // in [0, 1)
  double uniform_real(double lo, double hi);
  std::vector<std::size_t> random_subset(std::size_t n, std::size_t s);

 private:
  std::array<std::uint64_t, 4> s_{};
};

}  // namespace invmilo
