#pragma once

#include <stdexcept>
#include <string>

namespace scg {

enum class ErrorKind {
  Argument,  // bad parameters or misuse of an interface
  Data,      // inputs exist but their content is invalid
  Io,        // filesystem failures
  Internal,  // broken invariant inside the toolkit
};

class ScgError : public std::runtime_error {
 public:
  ScgError(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void throw_argument(const std::string& msg) {
  throw ScgError(ErrorKind::Argument, msg);
}
[[noreturn]] inline void throw_data(const std::string& msg) {
  throw ScgError(ErrorKind::Data, msg);
}
[[noreturn]] inline void throw_io(const std::string& msg) {
  throw ScgError(ErrorKind::Io, msg);
}
[[noreturn]] inline void throw_internal(const std::string& msg) {
  throw ScgError(ErrorKind::Internal, msg);
}

}  // namespace scg
