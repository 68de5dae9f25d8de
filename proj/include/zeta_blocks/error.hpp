#pragma once

#include <stdexcept>
#include <string>

namespace zb {

enum class ErrorKind {
    invalid_input,
    invalid_word,
    unsupported_step,
    budget_exceeded,
    theorem_precondition,
    divergent,
    parse_error,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

}  // namespace zb
