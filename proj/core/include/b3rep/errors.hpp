#pragma once

#include <stdexcept>
#include <string>

namespace b3rep {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension vector violates a+b = x+y+z or has a negative entry.
class InvalidDimensionVector : public Error {
 public:
  using Error::Error;
};

/// An operation that needs a simple dimension vector received another one.
class NotSimpleDimension : public Error {
 public:
  using Error::Error;
};

/// The random simple generator exhausted its retry budget.
class GenerationFailed : public Error {
 public:
  using Error::Error;
};

/// Semisimple spec is malformed (non-simple alpha, zero multiplicity,
/// duplicated isomorphism class, ...).
class InvalidSpec : public Error {
 public:
  using Error::Error;
};

/// A singular value sits too close to the rank threshold to call the rank.
/// Re-randomizing the instances is the remedy.
class ToleranceAmbiguity : public Error {
 public:
  using Error::Error;
};

class IsomorphicDistinctEntries : public Error {
 public:
  using Error::Error;
};

/// No second component can be certified (2-dimensional simple with
/// multiplicity >= 2).
class WitnessUnavailable : public Error {
 public:
  using Error::Error;
};

/// gln_retract was handed a pair that does not commute.
class NonCommutingPair : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace b3rep
