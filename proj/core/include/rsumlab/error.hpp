#pragma once

#include <stdexcept>
#include <string>

namespace rsumlab {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed group, element or set literal.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A precondition on the arguments failed (range, group mismatch, empty operand, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The hypotheses of a constructive lemma do not hold for the given instance.
class HypothesisViolation : public Error {
 public:
  using Error::Error;
};

/// A construction that is guaranteed to succeed under its hypotheses failed.
class LemmaViolation : public Error {
 public:
  using Error::Error;
};

/// A critical pair matched none of the structural classes.
class EmptyClassification : public LemmaViolation {
 public:
  using LemmaViolation::LemmaViolation;
};

class WorkCeilingExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace rsumlab
