#ifndef EXOBESSEL_KERNELS_HPP
#define EXOBESSEL_KERNELS_HPP

#include "exobessel/quadrature.hpp"

#include <optional>
#include <string>

namespace exobessel {

enum class Setting { cls, exo };

enum class KernelFamily {
    HeatCls,
    HeatExo,
    PoissonExo,
    RieszCls,
    RieszExo,
    CompPotentialCls,
    PotentialCls,
    PotentialExo,
};

KernelFamily kernel_family_from_string(const std::string& s);
std::string to_string(KernelFamily f);

// One kernel evaluation request. t_or_sigma is the time parameter for the
// heat/Poisson families and the order sigma for the potential families;
// it is absent for Riesz and the compensated potential.
struct KernelQuery {
    KernelFamily family;
    double nu;
    std::optional<double> t_or_sigma;
    double x;
    double y;
};

struct KernelValue {
    double value;
    int subdivisions = 0;   // quadrature work, 0 for closed forms
    std::string regime;     // short diagnostic tag
};

KernelValue eval_kernel(const KernelQuery& q, const QuadratureConfig& cfg = {});

// --- heat & Poisson -------------------------------------------------------

// W_t^nu(x,y) = (1/2t)(xy)^{-nu} e^{-(x^2+y^2)/4t} I_nu(xy/2t), nu > -1,
// evaluated as (2t)^{-nu-1} * [e^{-w} w^{-nu} I_nu(w)] * e^{-(x-y)^2/4t}.
double heat_classical(double nu, double t, double x, double y);

// ~W_t^nu(x,y) = (xy)^{-2nu} W_t^{-nu}(x,y), nu < 1.
double heat_exotic(double nu, double t, double x, double y);

// W_t^mu(0,y) = e^{-y^2/4t} / ((2t)^{mu+1} 2^mu Gamma(mu+1)), y >= 0.
double heat_at_zero(double mu, double t, double y);

// Analytic d/dt of the heat kernel.
double heat_time_derivative(Setting setting, double nu, double t, double x, double y);

// Analytic d/dx of the classical heat kernel.
double heat_classical_dx(double nu, double t, double x, double y);

// Classical Poisson kernel P_t^mu(x,y) by subordination:
// (1/sqrt(pi)) int_0^inf e^{-v} v^{-1/2} W^mu_{t^2/4v}(x,y) dv.
double poisson_classical(double mu, double t, double x, double y,
                         const QuadratureConfig& cfg = {});

// ~P_t^nu(x,y) = (xy)^{-2nu} P_t^{-nu}(x,y), nu < 1.
double poisson_exotic(double nu, double t, double x, double y,
                      const QuadratureConfig& cfg = {});

// --- potentials & Riesz ---------------------------------------------------

// K_mu(x,y) = (1/sqrt(pi)) int_0^inf (W_t^mu(x,y) - [mu<=-1/2] W_t^mu(0,y)) dt/sqrt(t).
double comp_potential_classical(double mu, double x, double y,
                                const QuadratureConfig& cfg = {});

// R_nu(x,y) = (1/sqrt(pi)) int_0^inf d/dx W_t^nu(x,y) dt/sqrt(t), nu > -1.
double riesz_classical_kernel(double nu, double x, double y,
                              const QuadratureConfig& cfg = {});

// ~R_nu(x,y) = (xy)^{-2nu} ( R_{-nu}(x,y) - (2nu/x) K_{-nu}(x,y) ), 0 != nu < 1.
double riesz_exotic_kernel(double nu, double x, double y,
                           const QuadratureConfig& cfg = {});

// Leading diagonal singularity of both Riesz kernels:
// (1/pi) (xy)^{-nu-1/2} / (y - x).
double riesz_diagonal_leading(double nu, double x, double y);

// K^{nu,sigma} / ~K^{nu,sigma}; sigma range (0, nu+1) resp. (0, -nu+1).
double potential_kernel(Setting setting, double nu, double sigma, double x, double y,
                        const QuadratureConfig& cfg = {});

// Potential kernel with the t-integral truncated to (0, T]; used for the
// finiteness-boundary probes.
double potential_kernel_truncated(Setting setting, double nu, double sigma,
                                  double x, double y, double T,
                                  const QuadratureConfig& cfg = {});

// int_0^inf W_t^nu(x,z) W_s^nu(z,y) deta_nu(z) - W_{t+s}^nu(x,y), relative
// to W_{t+s}^nu(x,y); both settings.
double chapman_kolmogorov_residual(Setting setting, double nu, double t, double s,
                                   double x, double y,
                                   const QuadratureConfig& cfg = {});

} // namespace exobessel

#endif
