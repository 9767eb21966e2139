#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace avgnorm {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Raised when a literal cannot be parsed; `position` is the byte offset of
/// the offending character in the input.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// A hard resource refusal (enumeration or composition budget).
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string budget, const std::string& what)
      : Error(what), budget_(std::move(budget)) {}
  const std::string& budget() const { return budget_; }

 private:
  std::string budget_;
};

/// Query outside the capacity of a recursion table.
class BoundsExceeded : public Error {
 public:
  using Error::Error;
};

/// A closed form evaluated on a set it does not apply to.
class NotApplicable : public Error {
 public:
  using Error::Error;
};

/// No quasi-polynomial of the permitted shapes reproduces the sequence.
class ShapeInsufficient : public Error {
 public:
  using Error::Error;
};

}  // namespace avgnorm
