#ifndef SINGCLASS_ERRORS_HPP
#define SINGCLASS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace singclass {

/* Bad arguments or malformed input (CLI exit code 2). */
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/* Mathematically invalid operation: non-invertible element, inexact
 * division, invalid germ data (CLI exit code 3). */
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace singclass

#endif
