#pragma once

#include <cstdint>

namespace xgratio::numerics {

struct RngSeed {
  std::uint64_t value = 0;
  friend bool operator==(RngSeed, RngSeed) = default;
};

// Counter-based generator: the i-th output of a stream is a pure function of
// (key, i), using the SplitMix64 finalizer. Streams can be split into
// independent substreams and positioned anywhere, so a batch can be drawn in
// parallel blocks and still match a sequential draw bit for bit.
class Rng {
 public:
  explicit Rng(RngSeed seed) noexcept;

  std::uint64_t next_u64() noexcept;
  // Uniform on the open interval (0, 1); never returns 0 or 1.
  double uniform() noexcept;
  // Exponential with the given rate, by inversion.
  double exponential(double rate);

  // Child stream `stream_id` of this generator's key. Does not advance this
  // generator.
  Rng split(std::uint64_t stream_id) const noexcept;
  // Same key, positioned at an absolute counter.
  Rng at(std::uint64_t counter) const noexcept;
  void advance(std::uint64_t steps) noexcept { counter_ += steps; }

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }
  RngSeed seed() const noexcept { return seed_; }

 private:
  Rng(RngSeed seed, std::uint64_t key, std::uint64_t counter) noexcept
      : seed_(seed), key_(key), counter_(counter) {}

  RngSeed seed_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

// Inverse-cdf exponential draw: -ln(u) / rate.
double exponential_from_uniform(double u, double rate);

}  // namespace xgratio::numerics
