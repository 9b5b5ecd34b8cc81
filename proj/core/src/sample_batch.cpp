#include "xgratio/sample_batch.hpp"

#include <cmath>
#include <sstream>

#include "xgratio/errors.hpp"

namespace xgratio {

void validate_batch(const SampleBatch& batch) {
  if (batch.empty()) {
    throw DataError("sample batch is empty");
  }
  for (std::size_t i = 0; i < batch.values.size(); ++i) {
    const double v = batch.values[i];
    if (!(v > 0.0) || !std::isfinite(v)) {
      std::ostringstream os;
      os.precision(17);
      os << "observation " << i << " is not a positive finite number (" << v << ")";
      throw DataError(os.str(), i);
    }
  }
}

}  // namespace xgratio
