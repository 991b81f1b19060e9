#pragma once

#include <stdexcept>
#include <string>

namespace vnlab {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A group element or phase-space point has a component out of range.
class InvalidElement : public Error {
 public:
  using Error::Error;
};

/// A configurable size cap was exceeded.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// Two objects that must live on the same group or space do not.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

/// A subalgebra is not contained in the algebra it was paired with.
class InclusionError : public Error {
 public:
  using Error::Error;
};

/// A functional that must be a faithful trace is not.
class FaithfulnessError : public Error {
 public:
  using Error::Error;
};

/// The supplied generators do not span a module.
class SpanError : public Error {
 public:
  using Error::Error;
};

/// A structural precondition (matching centers, positive dimension, ...) fails.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Spectral splitting of a central element did not separate the blocks.
class SpectralSplitError : public Error {
 public:
  using Error::Error;
};

/// A hypothesis of the left/right bounded vector theorem does not hold.
class HypothesisError : public Error {
 public:
  HypothesisError(std::string hypothesis, double deviation);

  const std::string& hypothesis() const noexcept { return hypothesis_; }
  double deviation() const noexcept { return deviation_; }

 private:
  std::string hypothesis_;
  double deviation_;
};

/// Malformed JSON input or schema violation.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace vnlab
