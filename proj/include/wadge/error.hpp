#pragma once

#include <stdexcept>
#include <string>

namespace wadge {

/// Base of every error raised by the library. The CLI maps these to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class CycleError : public Error {
 public:
  using Error::Error;
};

class DuplicateLabelError : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

class SpaceMismatch : public Error {
 public:
  SpaceMismatch() : Error("subset or map belongs to a different space") {}
  using Error::Error;
};

class EmptySubspace : public Error {
 public:
  EmptySubspace() : Error("subspace must be nonempty") {}
};

class NotOpen : public Error {
 public:
  using Error::Error;
};

class NotIncreasing : public Error {
 public:
  using Error::Error;
};

class ColorCountMismatch : public Error {
 public:
  using Error::Error;
};

/// A configurable size guard refused to run an exponential computation.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Malformed input documents or subset expressions.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace wadge
