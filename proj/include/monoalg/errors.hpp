#pragma once

#include <stdexcept>
#include <string>

namespace monoalg {

// Malformed textual or JSON input (polynomial grammar, form schema).
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A requested structure cannot exist: the number of required distinct
// irreducible polynomials of some degree exceeds the count available
// over the ground field.
class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& what) : std::runtime_error(what) {}
};

// An exhaustive enumeration would exceed its configured cap. Raised as a
// hard error rather than truncating results.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace monoalg
