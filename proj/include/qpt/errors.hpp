#pragma once

#include <stdexcept>
#include <string>

namespace qpt {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct ParamOutOfRange : Error {
  using Error::Error;
};

struct NonHermitianInput : Error {
  using Error::Error;
};

struct NotPositive : Error {
  using Error::Error;
};

struct IncompleteKraus : Error {
  using Error::Error;
};

struct NotUnitary : Error {
  using Error::Error;
};

struct SingularBasis : Error {
  using Error::Error;
};

struct CapExceeded : Error {
  using Error::Error;
};

struct MissingSetting : Error {
  using Error::Error;
};

struct InputOutOfRange : Error {
  using Error::Error;
};

struct WrongDimension : Error {
  using Error::Error;
};

}  // namespace qpt
