#pragma once

#include <stdexcept>
#include <string>

namespace hwav {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
  Parse = 2,
  Dominance = 3,
  OracleDisagreement = 4,
  Infeasible = 5,
  InvalidArgument = 6,
  Internal = 7,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) { throw Error(kind, msg); }

inline void require(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) fail(kind, msg);
}

}  // namespace hwav
