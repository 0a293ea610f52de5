#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>

namespace netclass {

// Portable, fully specified pseudo-random stream.
//
// Every random decision in the toolkit flows through this class so that a
// dataset is reproducible from its seed alone, independently of the C++
// standard library in use. The algorithms are pinned:
//
//   * Core generator: xoshiro256** 1.0 (Blackman & Vigna).
//   * State seeding: the four state words are successive outputs of
//     SplitMix64 started at the 64-bit seed.
//   * uniform():   (next() >> 11) * 2^-53, a double in [0, 1).
//   * below(b):    rejection sampling; draw x = next() until
//                  x >= (2^64 - b) mod b, then return x mod b. Unbiased.
//   * bernoulli(p): uniform() < p.
//   * shuffle():   Fisher-Yates from the last index down, swapping element i
//                  with element below(i + 1).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next();
  double uniform();
  std::uint64_t below(std::uint64_t bound);
  bool bernoulli(double p) { return uniform() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    if (items.size() < 2) return;
    for (std::size_t i = items.size() - 1; i > 0; --i) {
      const auto j = static_cast<std::size_t>(below(i + 1));
      using std::swap;
      swap(items[i], items[j]);
    }
  }

 private:
  std::uint64_t s_[4];
};

// SplitMix64 output function (the "mix" step applied to state + golden gamma).
std::uint64_t splitmix64(std::uint64_t& state);

// Derives a child seed from a list of words. Defined as
//   h = 0; for each word w: h = splitmix64(state = h ^ w)
// i.e. each word is xor-ed into the running hash, which is then advanced
// through one SplitMix64 step. Order-sensitive.
std::uint64_t mix_seed(std::initializer_list<std::uint64_t> words);

// Bit pattern of a double, for feeding real parameters into mix_seed.
std::uint64_t double_bits(double value);

}  // namespace netclass
