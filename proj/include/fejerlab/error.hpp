#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace fejer {

enum class ErrorKind {
  ZeroVector,
  UnsupportedSet,
  DimensionTooLarge,
  DegenerateStep,
  UnknownExample,
  EmptySample,
  DivideByZero,
  PreconditionFailed,
  NoClusters,
  InvalidInput,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by the cone identity check; lists the preconditions that did not hold.
class PreconditionFailed : public Error {
 public:
  explicit PreconditionFailed(std::vector<std::string> failed);
  const std::vector<std::string>& failed() const { return failed_; }

 private:
  std::vector<std::string> failed_;
};

}  // namespace fejer
