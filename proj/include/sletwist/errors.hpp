#pragma once
// Error taxonomy shared by the library and the CLI exit-code map.

#include <stdexcept>
#include <string>

namespace sletwist {

// CLI exit codes: 2 usage, 3 domain, 4 quality, 5 verification, 6 I/O.
enum class errc : int {
  usage = 2,
  domain = 3,
  quality = 4,
  verification = 5,
  io = 6,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }
  int exit_code() const noexcept { return static_cast<int>(code_); }

 private:
  errc code_;
};

// Input outside the mathematical domain of an operation (poles, cuts, ranges).
class domain_error : public error {
 public:
  explicit domain_error(const std::string& what) : error(errc::domain, what) {}
};

// An algorithm failed to reach its accuracy target (non-convergence etc.).
class numeric_error : public error {
 public:
  explicit numeric_error(const std::string& what) : error(errc::domain, what) {}
};

// A caller broke a documented precondition.
class contract_error : public error {
 public:
  explicit contract_error(const std::string& what) : error(errc::usage, what) {}
};

// Results were produced but fail a quality threshold (e.g. undecided > 1%).
class quality_error : public error {
 public:
  explicit quality_error(const std::string& what) : error(errc::quality, what) {}
};

class io_error : public error {
 public:
  explicit io_error(const std::string& what) : error(errc::io, what) {}
};

}  // namespace sletwist
