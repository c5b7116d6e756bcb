#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hmdd {

// Speed of light (m/s).
inline constexpr double kC0 = 299792458.0;

enum class ErrorKind {
  Domain,      // argument outside its contract
  Data,        // malformed or non-finite input data
  Resource,    // configured caps exceeded
  Io,          // file system / serialization
  Numeric,     // non-finite intermediate
  NoEnergy,    // all-zero map where energy is required
  Degenerate,  // constant input where a spread is required
  Incomplete,  // iteration stopped before full coverage
  Config,      // invalid configuration
};

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool ok, ErrorKind kind, const std::string& what) {
  if (!ok) fail(kind, what);
}

}  // namespace hmdd
