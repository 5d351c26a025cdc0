#pragma once

#include <stdexcept>
#include <string>

namespace diaglab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Bad arguments: indices out of range, malformed parameters, wrong graph family.
struct InvalidInput : Error {
  using Error::Error;
};

/// A closed-form formula was evaluated outside its validity range.
struct RangeError : Error {
  using Error::Error;
};

/// Requested a minimum cut of a graph that has none (complete graphs).
struct NoCutExists : Error {
  using Error::Error;
};

/// A certificate's side condition (e.g. the cardinality check) does not hold.
struct NotApplicable : Error {
  using Error::Error;
};

/// The connectivity-based lower bound is not valid on its own for MM* with g = 1;
/// a separate no-isolated-vertex argument is required.
struct NeedsIsolationArgument : Error {
  using Error::Error;
};

/// A construction failed one of the conditions it promises to satisfy.
struct VerificationFailed : Error {
  using Error::Error;
};

}  // namespace diaglab
