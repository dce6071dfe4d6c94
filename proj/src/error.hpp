#pragma once

#include <stdexcept>
#include <string>

namespace ahg {

enum class Errc {
  parse,        // malformed input text/JSON
  invalid,      // structural validation failure
  arity,        // dimension/arity mismatch between arguments
  budget,       // configured enumeration/search budget exceeded
  unsupported,  // input outside a backend's supported fragment
  contract,     // violated precondition detected at runtime
  io,
};

class Error : public std::runtime_error {
 public:
  Error(Errc c, std::string msg) : std::runtime_error(std::move(msg)), code_(c) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

}  // namespace ahg
