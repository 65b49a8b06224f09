#pragma once

#include <stdexcept>
#include <string>

namespace solenoid {

/// Broad failure classes. The CLI maps them onto exit codes 2, 3 and 4.
enum class ErrorKind {
    invalid_input,  // violated precondition or malformed user input
    domain,         // mathematically inadmissible object (e.g. Jacobi failure)
    numerical,      // non-finite state or a failed numerical search
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

inline Error invalid_input(const std::string& what) { return {ErrorKind::invalid_input, what}; }
inline Error domain_error(const std::string& what) { return {ErrorKind::domain, what}; }
inline Error numerical_error(const std::string& what) { return {ErrorKind::numerical, what}; }

}  // namespace solenoid
