#pragma once

#include <stdexcept>
#include <string>

namespace gccaut {

// Base of every library exception. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidType : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class ArithmeticError : public Error {
 public:
  using Error::Error;
};

class NegativeRoot : public Error {
 public:
  using Error::Error;
};

class NotAFace : public Error {
 public:
  using Error::Error;
};

class NotAFacet : public Error {
 public:
  using Error::Error;
};

class NotRecognized : public Error {
 public:
  using Error::Error;
};

class NotAnAutomorphism : public Error {
 public:
  using Error::Error;
};

class IncompatibleDegree : public Error {
 public:
  using Error::Error;
};

class InvalidDiagramSymmetry : public Error {
 public:
  using Error::Error;
};

class RankTooSmall : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// The following signal an internal inconsistency (a bug), or, for
// VerificationFailure, a genuine counterexample to a checked statement.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

class RelationViolation : public Error {
 public:
  using Error::Error;
};

class OrbitExhausted : public Error {
 public:
  using Error::Error;
};

class VerificationFailure : public Error {
 public:
  VerificationFailure(std::string clause, const std::string& what)
      : Error(what), clause_(std::move(clause)) {}
  const std::string& clause() const noexcept { return clause_; }

 private:
  std::string clause_;
};

}  // namespace gccaut
