#pragma once

#include <stdexcept>
#include <string>

namespace tilescope {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input files or arguments.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Violated operation preconditions. The CLI maps these to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class DegenerateInput : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotCentrallySymmetric : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NonGenericPoint : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class PointNotOnBelt : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class PrewindowTooSmall : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class NotATile : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

/// A self-check failed. Always a defect; the CLI exits with code 3.
class InternalVerificationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace tilescope
