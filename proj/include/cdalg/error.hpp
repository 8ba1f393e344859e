#pragma once

#include <stdexcept>
#include <string>

namespace cdalg {

enum class ErrorCode {
    invalid_argument = 1,
    level_mismatch = 2,
    out_of_range = 3,
    parse = 4,
    hypothesis = 5,
    unknown_theorem = 6,
    internal = 99,
};

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it onto a status value without string matching.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace cdalg
