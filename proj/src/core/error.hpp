#pragma once

#include <stdexcept>
#include <string>

namespace hsf {

enum class ErrorCode {
  argument,        // malformed or inconsistent input
  parity,          // trace parameter with the wrong parity
  range,           // trace or family parameter outside its admissible range
  unknown_family,  // catalog family name not recognized
  internal,        // cross-check between two computation routes failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace hsf
