#ifndef EXOBESSEL_ERRORS_HPP
#define EXOBESSEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace exobessel {

// Thrown when an iterative numerical procedure (quadrature, principal-value
// extrapolation, growth fit) fails to converge. Distinct from std::domain_error,
// which is reserved for invalid parameter ranges.
class numerics_error : public std::runtime_error {
public:
    explicit numerics_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace exobessel

#endif
