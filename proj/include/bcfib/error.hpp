#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace bcfib {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroToNegativePower : public Error {
 public:
  ZeroToNegativePower() : Error("zero raised to a negative power") {}
};

class NegativeIndex : public Error {
 public:
  using Error::Error;
};

class UnknownClaim : public Error {
 public:
  explicit UnknownClaim(const std::string& id) : Error("unknown claim: " + id) {}
};

class BindingOutOfDomain : public Error {
 public:
  using Error::Error;
};

class UnboundVariable : public Error {
 public:
  explicit UnboundVariable(const std::string& name)
      : Error("unbound variable: " + name), name_(name) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

class NegativePowerOfNonUnit : public Error {
 public:
  NegativePowerOfNonUnit()
      : Error("negative exponent is only allowed for a base of -1 or 1") {}
};

/// Parse failure with the byte offset into the source text.
class ParseError : public Error {
 public:
  ParseError(std::string message, std::size_t offset)
      : Error(std::move(message)), offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

class SyntaxError : public ParseError {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected,
              const std::string& found);
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  std::vector<std::string> expected_;
};

class UnknownSequenceKind : public ParseError {
 public:
  UnknownSequenceKind(std::size_t offset, const std::string& name)
      : ParseError("unknown sequence kind '" + name + "' (expected F, L, BF or BL)",
                   offset) {}
};

class NonLinearIndex : public ParseError {
 public:
  explicit NonLinearIndex(std::size_t offset)
      : ParseError("index expression is not linear in n, m, r", offset) {}
};

}  // namespace bcfib
