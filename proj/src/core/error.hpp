// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace sqdm {

enum class ErrorKind {
  config,  // bad or inconsistent configuration input
  format,  // malformed serialized data
  domain,  // argument outside an operation's domain
  index,   // tensor index out of range
  io,      // filesystem failure
};

/// All failures in the library surface as this exception; the kind maps
/// onto the C API status codes and CLI exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_config(const std::string& msg) {
  throw Error(ErrorKind::config, msg);
}
[[noreturn]] inline void throw_format(const std::string& msg) {
  throw Error(ErrorKind::format, msg);
}
[[noreturn]] inline void throw_domain(const std::string& msg) {
  throw Error(ErrorKind::domain, msg);
}
[[noreturn]] inline void throw_index(const std::string& msg) {
  throw Error(ErrorKind::index, msg);
}
[[noreturn]] inline void throw_io(const std::string& msg) {
  throw Error(ErrorKind::io, msg);
}

}  // namespace sqdm
