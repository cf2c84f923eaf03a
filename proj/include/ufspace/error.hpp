#pragma once

#include <stdexcept>
#include <string>

namespace ufspace {

// Base class for every error raised by the library. Catching `Error`
// distinguishes bad input from logic errors (which are std::logic_error).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownElement : public Error {
 public:
  explicit UnknownElement(const std::string& id)
      : Error("unknown element '" + id + "'"), id_(id) {}
  const std::string& id() const noexcept { return id_; }

 private:
  std::string id_;
};

class CycleError : public Error {
 public:
  CycleError(const std::string& x, const std::string& y)
      : Error("order is not antisymmetric: '" + x + "' and '" + y +
              "' are mutually below each other") {}
};

class NoZeroError : public Error {
 public:
  NoZeroError(const std::string& zero, const std::string& x)
      : Error("designated zero '" + zero + "' is not below '" + x + "'") {}
};

class NoMeetError : public Error {
 public:
  NoMeetError(const std::string& x, const std::string& y)
      : Error("'" + x + "' and '" + y + "' have no greatest lower bound"),
        x_(x),
        y_(y) {}
  const std::string& x() const noexcept { return x_; }
  const std::string& y() const noexcept { return y_; }

 private:
  std::string x_, y_;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class NotComplemented : public Error {
 public:
  using Error::Error;
};

class ZeroGenerated : public Error {
 public:
  ZeroGenerated() : Error("meet closure of the seed reaches zero") {}
};

class EmptyLattice : public Error {
 public:
  EmptyLattice() : Error("semilattice has no nonzero element, so no ultrafilter") {}
};

class NoFip : public Error {
 public:
  NoFip() : Error("family does not have the finite intersection property") {}
};

class NotACover : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class FiniteBlockError : public Error {
 public:
  explicit FiniteBlockError(unsigned color)
      : Error("color " + std::to_string(color) +
              " occurs only in the prefix and would form a finite block") {}
};

class ZeroRunError : public Error {
 public:
  ZeroRunError() : Error("run lengths must be positive") {}
};

class TrivialInput : public Error {
 public:
  TrivialInput() : Error("input partition is trivial (a single block)") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

}  // namespace ufspace
