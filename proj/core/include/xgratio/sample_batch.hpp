#pragma once

#include <optional>
#include <vector>

#include "xgratio/numerics/rng.hpp"

namespace xgratio {

// Ordered draws or observations of Z. `seed` is set when the batch was
// simulated.
struct SampleBatch {
  std::vector<double> values;
  std::optional<numerics::RngSeed> seed;

  std::size_t size() const noexcept { return values.size(); }
  bool empty() const noexcept { return values.empty(); }
};

// Throws DataError (with the offending index) unless the batch is non-empty
// and every value is finite and strictly positive.
void validate_batch(const SampleBatch& batch);

}  // namespace xgratio
