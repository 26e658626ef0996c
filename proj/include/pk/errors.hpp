#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pk {

/// Base of every domain error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data violates a structural invariant (ordering, rank, purity...).
class InvalidDataError : public Error {
 public:
  using Error::Error;
};

/// The tensor motive has a (w/2, w/2) Hodge class, so it has no critical points.
class PpClassError : public Error {
 public:
  PpClassError(const std::string& what, int a = 0, int b = 0)
      : Error(what), a_(a), b_(b) {}

  /// Offending index pair (1-based), or (0,0) when not attributable to a pair.
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }

 private:
  int a_;
  int b_;
};

/// A pair of infinity types hits the forbidden value a_i + b_j = -(w + w')/2.
class NotCriticalPairError : public Error {
 public:
  using Error::Error;
};

/// A point is not critical for the L-function under consideration.
class NotCriticalError : public Error {
 public:
  using Error::Error;
};

class AlgebraicityError : public Error {
 public:
  using Error::Error;
};

class NonIntegerExponentError : public Error {
 public:
  using Error::Error;
};

class UnknownRankError : public Error {
 public:
  using Error::Error;
};

class RuleNotApplicable : public Error {
 public:
  using Error::Error;
};

class SizeLimitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pk
