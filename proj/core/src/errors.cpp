#include "xgratio/errors.hpp"

#include <sstream>

namespace xgratio {

namespace {

std::string moment_message(double k) {
  std::ostringstream os;
  os.precision(17);
  os << "moment of order k=" << k
     << " does not exist: only fractional moments with -1 < k < 1 are finite";
  return os.str();
}

}  // namespace

MomentExistenceError::MomentExistenceError(double k) : DomainError(moment_message(k)), k_(k) {}

ConvergenceError::ConvergenceError(const std::string& what, double estimate, double error_bound)
    : Error(what), estimate_(estimate), error_bound_(error_bound) {}

DataError::DataError(const std::string& what, std::size_t location)
    : Error(what), location_(location), has_location_(true) {}

DataError::DataError(const std::string& what) : Error(what) {}

}  // namespace xgratio
