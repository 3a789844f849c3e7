#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace strayt {

/// Base class for the domain errors raised by this library. Precondition
/// violations (mismatched degrees, out-of-range indices) use the standard
/// std::invalid_argument / std::out_of_range instead.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text: linear notation, image lists, presentation files, words.
/// `line()` is 1-based, 0 when the error is not tied to a file line.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A transformation that is not an element of the enumerated monoid S^1.
class NotInSemigroup : public Error {
 public:
  using Error::Error;
};

/// restrict() was asked for the restriction of a map that does not permute Y.
class NotAPermutator : public Error {
 public:
  using Error::Error;
};

/// A word handed to factorize()/retract() does not permute Y. `missing_state`
/// is the smallest state of Y that is not in the image Y.w.
class NotAPermutatorWord : public Error {
 public:
  explicit NotAPermutatorWord(unsigned missing_state)
      : Error("word does not permute the set: state " +
              std::to_string(missing_state) + " is not returned to the set"),
        missing_state_(missing_state) {}

  unsigned missing_state() const noexcept { return missing_state_; }

 private:
  unsigned missing_state_;
};

/// Enumeration stopped because the element table outgrew the configured cap.
class EnumerationLimit : public Error {
 public:
  using Error::Error;
};

}  // namespace strayt
