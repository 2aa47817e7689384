#pragma once
#include <stdexcept>
#include <string>

namespace gtt {

// Process exit codes shared by the CLI and the library error types.
enum ExitCode : int {
  exit_ok = 0,
  exit_input = 2,
  exit_cap = 3,
  exit_inconsistent = 4,
  exit_query_miss = 5,
  exit_suite = 6,
};

class Error : public std::runtime_error {
 public:
  Error(int code, const std::string& what) : std::runtime_error(what), code_(code) {}
  int exit_code() const { return code_; }

 private:
  int code_;
};

struct InputError : Error {
  explicit InputError(const std::string& w) : Error(exit_input, w) {}
};

struct CapExceeded : Error {
  explicit CapExceeded(const std::string& w) : Error(exit_cap, w) {}
};

// Raised when an invariant the engine is supposed to maintain fails:
// an inconsistent iterate, a non-monotone step, a conflicting fixpoint.
struct ConsistencyViolation : Error {
  explicit ConsistencyViolation(const std::string& w) : Error(exit_inconsistent, w) {}
};

}  // namespace gtt
