#pragma once

#include <stdexcept>
#include <string>

namespace flipdist {

// Malformed input or a violated precondition. The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A brute-force search hit its configured state/cycle/element cap (exit code 3).
class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Something the theory rules out happened; always a bug or an unhandled case.
class InternalError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

} // namespace flipdist
