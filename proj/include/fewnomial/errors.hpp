#pragma once

#include <stdexcept>
#include <string>

namespace fewnomial {

enum class Errc {
    length_mismatch,
    empty_after_regroup,
    zero_coefficient,
    dimension_mismatch,
    not_univariate,
    singular_matrix,
    prereq_not_met,
    degenerate_minimum,
    zero_direction,
    not_full_dimensional,
    no_basis_found,
    syntax_error,
    inconsistent_header,
    unsupported_dimension,
    invalid_argument,
};

const char* errc_name(Errc code);

/// Exception carrying a machine-checkable error code. File-format errors
/// additionally carry the 1-based line number where parsing failed.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& message, int line = 0)
        : std::runtime_error(message), code_(code), line_(line) {}

    Errc code() const { return code_; }
    int line() const { return line_; }

private:
    Errc code_;
    int line_;
};

[[noreturn]] inline void raise(Errc code, const std::string& message, int line = 0) {
    throw Error(code, message, line);
}

}  // namespace fewnomial
