#pragma once

#include <stdexcept>
#include <string>

namespace fino {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BadThreshold : Error {
  using Error::Error;
};
struct NotEnoughShares : Error {
  using Error::Error;
};
struct DuplicateAbscissa : Error {
  using Error::Error;
};
struct EmptyLeaves : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct InvalidCiphertext : Error {
  using Error::Error;
};
struct ShareVerificationFailed : Error {
  using Error::Error;
};
struct NotDelivered : Error {
  using Error::Error;
};
struct ConfigInvalid : Error {
  using Error::Error;
};
struct DecodeError : Error {
  using Error::Error;
};

// Mixing elements of different fields/groups is a programming error, not an
// input error.
struct AlgebraMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

}  // namespace fino
