#pragma once

#include <stdexcept>
#include <string>

namespace wlink {

// Error taxonomy; the CLI maps these onto exit codes (format -> 2, numeric -> 3).
enum class ErrorKind {
    format,      // malformed input text / invalid file structure
    structural,  // violated combinatorial precondition (non-pendant target, dangling edge, ...)
    numeric,     // convergence failure, degenerate geometry, failed projection
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

inline Error format_error(const std::string& what) { return Error(ErrorKind::format, what); }
inline Error structural_error(const std::string& what) { return Error(ErrorKind::structural, what); }
inline Error numeric_error(const std::string& what) { return Error(ErrorKind::numeric, what); }

} // namespace wlink
