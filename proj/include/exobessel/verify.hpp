#ifndef EXOBESSEL_VERIFY_HPP
#define EXOBESSEL_VERIFY_HPP

#include "exobessel/quadrature.hpp"

#include <string>
#include <vector>

namespace exobessel {

// One named check: observed quantity against an expected value or bound.
struct CheckResult {
    std::string check;
    std::string params;
    double observed = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    bool inconclusive = false;
};

struct Report {
    std::vector<CheckResult> checks;
    bool all_pass() const;
    std::string to_json() const;
    void append(const Report& other);
};

// Verification suites. Check names carry the acceptance-criterion prefix
// (c1..c8) they substantiate.
Report suite_kernels(const QuadratureConfig& cfg = {});        // c1-c3
Report suite_signs(const QuadratureConfig& cfg = {});          // c4
Report suite_transference();                                   // c5
Report suite_counterexamples(const QuadratureConfig& cfg = {});// c6, c7
Report suite_controls(const QuadratureConfig& cfg = {});       // c8

Report run_suite(const std::string& name, const QuadratureConfig& cfg = {});
std::vector<std::string> suite_names();

} // namespace exobessel

#endif
