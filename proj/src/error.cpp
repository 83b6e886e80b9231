#include "bcfib/error.hpp"

namespace bcfib {
namespace {

std::string describe(std::size_t offset, const std::vector<std::string>& expected,
                     const std::string& found) {
  std::string msg = "syntax error at offset " + std::to_string(offset) + ": expected ";
  if (expected.size() > 1) msg += "one of ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i != 0) msg += ", ";
    msg += expected[i];
  }
  return msg + "; found " + found;
}

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& found)
    : ParseError(describe(offset, expected, found), offset), expected_(std::move(expected)) {}

}  // namespace bcfib
