#pragma once

#include <stdexcept>
#include <string>

namespace qmod {

// All recoverable failures (malformed inputs, carrier mismatches, rejected
// certificate derivations) surface as qmod::Error with a descriptive message.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

}  // namespace qmod
