#pragma once

#include <stdexcept>
#include <string>

namespace qzeta {

enum class ErrorKind {
    Config,        // invalid user configuration (q, digits, tol, flags)
    Domain,        // argument outside an operation's domain
    Pole,          // evaluation at a pole
    Coverage,      // zero table too short for the requested accuracy
    Localization,  // a zero could not be bracketed
    Bracket,       // refine_zero called without a sign change
    Quadrature,    // numerical integration did not converge
    Division,      // exact division by a zero object
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

const char* to_string(ErrorKind kind);

}  // namespace qzeta
