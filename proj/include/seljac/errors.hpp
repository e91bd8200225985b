#pragma once

#include <stdexcept>
#include <string>

namespace seljac {

// Input outside an operation's exact domain (vanishing denominator factor,
// degenerate scaling, out-of-range index).  CLI maps this to exit code 3.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Two supposedly-equal computation routes disagreed, or an internal structural
// guarantee broke.  Must never fire in a correct build; CLI exit code 4.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

} // namespace seljac
