#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace gradekit {

/// Error thrown by constructors and operations on contract violations.
/// `code` is a stable machine-readable tag ("NotAssociative", "BasisMismatch", ...);
/// `what()` carries the human-readable message including any witness.
class Error : public std::runtime_error {
public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

  const std::string& code() const { return code_; }

private:
  std::string code_;
};

}  // namespace gradekit
