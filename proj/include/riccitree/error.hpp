#pragma once

#include <stdexcept>
#include <string>

namespace riccitree {

enum class ErrorKind {
  CycleDetected,
  Disconnected,
  DuplicateEdge,
  BadVertexId,
  BadEdge,
  InvalidParams,
  NonpositiveWeight,
  BadAlpha,
  OutOfRange,
  NoConvergence,
  StepTooLarge,
  PreconditionNotMet,
  UnknownExperiment,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

}  // namespace riccitree
