#pragma once

#include <stdexcept>

namespace ckc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed external input (JSON, decimal strings, CLI payloads).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Size guard tripped on an enumeration that would not finish at desk scale.
class GuardError : public Error {
 public:
  using Error::Error;
};

}  // namespace ckc
