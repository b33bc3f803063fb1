#ifndef RIGIDOPS_ERRORS_HPP
#define RIGIDOPS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rigidops {

// Error categories; mirrored one-to-one by the C API status codes.
enum class Errc {
  invalid_argument = 1,
  parse = 2,
  malformed_input = 3,      // C/D bottom-row deletion hit a nonzero entry
  frame_overflow = 4,       // row contribution wider than its frame row
  convention_violation = 5, // non-integral contribution length
  not_achievable = 6,       // symbol row is not a sum of right-aligned 1-strings
  no_assignment = 7,        // no rigid pair reproduces the symbol
  inconsistent_operator = 8,// unpaired leftover part in fingerprint extraction
  verification = 9,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace rigidops

#endif
