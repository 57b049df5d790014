#pragma once

#include <stdexcept>
#include <string>

namespace polyzeta {

enum class ErrorKind { usage, domain, pole, precision, parse, convergence, refinement };

const char* error_code(ErrorKind k);
int exit_code(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

struct UsageError : Error {
  explicit UsageError(const std::string& w) : Error(ErrorKind::usage, w) {}
};
struct DomainError : Error {
  explicit DomainError(const std::string& w) : Error(ErrorKind::domain, w) {}
};
struct PoleError : Error {
  PoleError(long at, const std::string& w) : Error(ErrorKind::pole, w), pole(at) {}
  long pole;
};
struct PrecisionError : Error {
  explicit PrecisionError(const std::string& w) : Error(ErrorKind::precision, w) {}
};
struct ParseError : Error {
  ParseError(long line_no, const std::string& w) : Error(ErrorKind::parse, w), line(line_no) {}
  long line;
};
struct ConvergenceError : Error {
  explicit ConvergenceError(const std::string& w) : Error(ErrorKind::convergence, w) {}
};
struct RefinementError : Error {
  explicit RefinementError(const std::string& w) : Error(ErrorKind::refinement, w) {}
};

}  // namespace polyzeta
