#pragma once

#include <stdexcept>
#include <string>

namespace allbut {

enum class ErrorKind {
  invalid_input,  // malformed FES set, heap list, or parameters
  precondition,   // operation called outside its hypotheses
  resource_cap,   // pile or iteration cap exceeded
  too_short,      // sequence does not cover the requested range
  io,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace allbut
