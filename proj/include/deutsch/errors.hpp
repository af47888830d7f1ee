#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace deutsch {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rejected step sequence. `position` is the 1-based index of the offending
/// step, which is also the index of the first invalid level a_t.
class PathError : public Error {
 public:
  enum class Kind { NegativeLevel, BadStep, NonzeroEnd };

  PathError(Kind kind, std::size_t position, const std::string& what)
      : Error(what), kind_(kind), position_(position) {}

  Kind kind() const noexcept { return kind_; }
  std::size_t position() const noexcept { return position_; }

 private:
  Kind kind_;
  std::size_t position_;
};

class QueryError : public Error {
 public:
  enum class Kind { InfiniteFamily, BoundExceeded, InvalidQuery };

  QueryError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class AlgebraError : public Error {
 public:
  enum class Kind { DivisionByZero, DivisorNotUnit, PoleAtOrigin, UnknownCoefficient, SingularMatrix };

  AlgebraError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class ZeroCount : public Error {
 public:
  using Error::Error;
};

/// A verification found a counterexample; `witness` is human readable.
class MismatchFound : public Error {
 public:
  MismatchFound(const std::string& what, std::string witness)
      : Error(what + ": " + witness), witness_(std::move(witness)) {}

  const std::string& witness() const noexcept { return witness_; }

 private:
  std::string witness_;
};

}  // namespace deutsch
