#pragma once

#include <stdexcept>
#include <string>

namespace qtcsf {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition on the inputs was violated (mismatched variable counts,
/// invalid sequences, non-symmetric input to an e-expansion, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

}  // namespace qtcsf
