#include "xgratio/numerics/rng.hpp"

#include <cmath>

#include "xgratio/errors.hpp"

namespace xgratio::numerics {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

Rng::Rng(RngSeed seed) noexcept : seed_(seed), key_(mix64(seed.value + kGolden)) {}

std::uint64_t Rng::next_u64() noexcept {
  ++counter_;
  return mix64(key_ + counter_ * kGolden);
}

double Rng::uniform() noexcept {
  // 53 random bits centred in their cell: strictly inside (0, 1).
  return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
}

double Rng::exponential(double rate) { return exponential_from_uniform(uniform(), rate); }

Rng Rng::split(std::uint64_t stream_id) const noexcept {
  const std::uint64_t child = mix64(key_ ^ mix64(stream_id + 1) * kGolden);
  return Rng(seed_, child, 0);
}

Rng Rng::at(std::uint64_t counter) const noexcept { return Rng(seed_, key_, counter); }

double exponential_from_uniform(double u, double rate) {
  if (!(rate > 0.0)) {
    throw DomainError("exponential: rate must be positive");
  }
  if (!(u > 0.0 && u <= 1.0)) {
    throw DomainError("exponential: uniform variate must lie in (0, 1]");
  }
  return -std::log(u) / rate;
}

}  // namespace xgratio::numerics
