#pragma once

#include <stdexcept>
#include <string>

namespace sgsta {

// Bad argument or malformed input; maps to CLI exit code 1.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

// The requested field design blows up (pointer crosses a singular meridian
// or pole away from the endpoints); maps to CLI exit code 2.
class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace sgsta
