#pragma once

#include <stdexcept>
#include <string>

namespace oti {

enum class Err {
  NonPrime,
  ReducibleModulus,
  DegreeMismatch,
  BadParameters,
  DimensionCap,
  WeightMismatch,
  AmbientMismatch,
  NotContained,
  NotInvariant,
  OrderExceedsCap,
  ActionMismatch,
  NotProductOrbit,
  NotASubgroupElement,
  NotAGroupElement,
  GroupMismatch,
  FieldMismatch,
  NotEquivariant,
  NotNilpotentOfOrderP,
  NotCommuting,
  NotElementaryAbelian,
  NonGenericTuple,
  NotExact,
  NotOrderP,
  CatalogMissing,
  IndexOutOfRange,
  PrimeMismatch,
  PartExceedsP,
  TooSmall,
  Usage,
  Internal,
};

const char* err_name(Err e);

// Single exception type for the whole engine. The code is what the C API
// surfaces; the message carries the offending values.
class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(err_name(code)) + ": " + msg), code_(code) {}
  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

inline void require(bool cond, Err code, const std::string& msg) {
  if (!cond) fail(code, msg);
}

// Internal consistency checks (caller bugs, not user input).
inline void check_internal(bool cond, const std::string& msg) {
  if (!cond) fail(Err::Internal, msg);
}

}  // namespace oti
