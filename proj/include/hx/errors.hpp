#pragma once

#include <stdexcept>
#include <string>

namespace hx {

// Reasons a domain operation can refuse its input. Carried by DomainError so
// callers (and tests) can branch on the cause without string matching.
enum class errc {
    nonfinite,                  // NaN or Inf reached a public operation
    singular,                   // determinant vanishes, no inverse
    zero_element,               // the zero pair has no inverse
    not_in_realization,         // matrix does not match the realization template
    adjoint_not_closed,         // adjoint leaves the realization set (t^2 != 1, b != 0)
    bad_scale,                  // operation only defined for negative scale
    zero_b,                     // conjugator needs b != 0
    similarity_not_established, // closed moment form unproven for t >= 0 with b != 0
    zero_input,                 // polar decomposition of 0
};

class DomainError : public std::runtime_error {
public:
    DomainError(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

private:
    errc code_;
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hx
