#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polar {

enum class ErrorCode {
  InvalidData,
  NotPrimitive,
  NotAdjacent,
  SliceMismatch,
  ParallelInput,
  NotSimplyConnected,
  EmptyForest,
  InvalidChamber,
  Overflow,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI maps them onto exit codes and structured error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// A single failed invariant found by one of the `validate` operations.
struct Violation {
  std::string at;       // e.g. "component 0, edge (1,2)"
  std::string message;  // e.g. "determinant 2"

  friend bool operator==(const Violation&, const Violation&) = default;
};

using Violations = std::vector<Violation>;

}  // namespace polar
