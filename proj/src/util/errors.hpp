#pragma once

#include <stdexcept>
#include <string>

namespace nflux {

// Error taxonomy mirrors the CLI exit codes: usage=1, data=2, internal=3.
struct UsageError : std::runtime_error {
  explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

struct DataError : std::runtime_error {
  explicit DataError(const std::string& msg) : std::runtime_error(msg) {}
};

struct InternalError : std::runtime_error {
  explicit InternalError(const std::string& msg) : std::runtime_error(msg) {}
};

// Invariant checks that must hold regardless of build type.
void require(bool cond, const std::string& msg);

}  // namespace nflux
