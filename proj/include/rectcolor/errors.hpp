#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace rectcolor {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was called on input that breaks its stated precondition.
/// When the violation is witnessed by a pair of rectangles, their indices are kept.
class PreconditionViolated : public Error {
 public:
  explicit PreconditionViolated(const std::string& what, int first = -1, int second = -1)
      : Error(what), pair_(first, second) {}
  std::pair<int, int> pair() const { return pair_; }

 private:
  std::pair<int, int> pair_;
};

class CertificateInvalid : public PreconditionViolated {
 public:
  using PreconditionViolated::PreconditionViolated;
};

/// A sub-coloring used more colors than its proven palette width.
class InternalBoundExceeded : public Error {
 public:
  using Error::Error;
};

class SolverFailure : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class MissingAssignment : public Error {
 public:
  using Error::Error;
};

class UnknownId : public Error {
 public:
  using Error::Error;
};

}  // namespace rectcolor
