#pragma once

#include <stdexcept>
#include <string>

namespace sparse_ssa {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened or read.
class LoadError : public Error {
 public:
  using Error::Error;
};

/// Input content violates a documented constraint (empty text, bad position).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Caller broke an operation precondition (e.g. position outside [1, n]).
class ContractError : public Error {
 public:
  using Error::Error;
};

/// Group forest handed to the emitter is internally inconsistent.
class ForestError : public Error {
 public:
  using Error::Error;
};

}  // namespace sparse_ssa
