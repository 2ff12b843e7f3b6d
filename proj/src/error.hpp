#pragma once

#include <stdexcept>
#include <string>

namespace theta2 {

enum class ErrorKind {
  kUsage,          // bad arguments / grammar
  kDivisionByZero, // inverse of the zero series
  kPrecision,      // requested window exceeds what the bounds certify
  kBudget,         // configured step/memory budget exceeded
  kInternal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace theta2
