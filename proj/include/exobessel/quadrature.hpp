#ifndef EXOBESSEL_QUADRATURE_HPP
#define EXOBESSEL_QUADRATURE_HPP

#include <functional>
#include <vector>

namespace exobessel {

struct QuadratureConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;
    // principal-value epsilons, relative to the singular point; strictly decreasing
    std::vector<double> pv_epsilon_sequence = {
        1e-2,      5e-3,      2.5e-3,     1.25e-3,    6.25e-4,
        3.125e-4,  1.5625e-4, 7.8125e-5,  3.90625e-5,
    };
};

struct IntegrationResult {
    double value = 0.0;
    double error = 0.0;
    int subdivisions = 0;
    bool converged = true;
};

using Integrand = std::function<double(double)>;

// Adaptive Gauss-Kronrod 7-15 on a finite interval.
IntegrationResult integrate(const Integrand& f, double a, double b,
                            const QuadratureConfig& cfg = {});

// Same, with mandatory initial split points (singularities, kinks).
IntegrationResult integrate_split(const Integrand& f, double a, double b,
                                  const std::vector<double>& interior_splits,
                                  const QuadratureConfig& cfg = {});

// [a, inf): geometric segments until two consecutive segments are negligible.
IntegrationResult integrate_to_inf(const Integrand& f, double a,
                                   const QuadratureConfig& cfg = {});

// Monotone per-thread count of evaluated Gauss-Kronrod panels; snapshot it
// around a call to report quadrature work.
long quadrature_panel_count();

// Principal value of int_lo^hi f, singular at xs in (lo, hi): symmetric
// epsilon-windows shrink along cfg.pv_epsilon_sequence (scaled by xs), the
// tail of the sequence is Richardson-extrapolated. Throws numerics_error
// when the extrapolants fail to settle to 1e-6 relative.
double pv_integrate(const Integrand& f, double lo, double hi, double xs,
                    const QuadratureConfig& cfg = {});

} // namespace exobessel

#endif
