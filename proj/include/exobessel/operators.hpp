#ifndef EXOBESSEL_OPERATORS_HPP
#define EXOBESSEL_OPERATORS_HPP

#include "exobessel/grid_function.hpp"
#include "exobessel/kernels.hpp"
#include "exobessel/quadrature.hpp"

namespace exobessel {

// --- semigroups, maximal operators, g-functions ----------------------------

// W_t^nu f(x) (classical) / ~W_t^nu f(x) (exotic), integration against
// d eta_nu(y) = y^{2nu+1} dy over the support of f.
double apply_heat(Setting setting, double nu, double t, const GridFunction& f,
                  double x, const QuadratureConfig& cfg = {});

// sup over the time grid of |W_t f(x)|; a certified lower bound of the true
// supremum, monotone under grid refinement up to quadrature tolerance.
double heat_maximal(Setting setting, double nu, const GridFunction& f, double x,
                    const TimeGrid& tgrid, const QuadratureConfig& cfg = {});

// ~P_t^nu f(x) via subordination of the applied heat semigroup.
double apply_poisson(double nu, double t, const GridFunction& f, double x,
                     const QuadratureConfig& cfg = {});

double poisson_maximal(double nu, const GridFunction& f, double x,
                       const TimeGrid& tgrid, const QuadratureConfig& cfg = {});

// || d/dt W_t f(x) ||_{L^2(t dt)} over [t_min, t_max]; the grid supplies the
// truncation range, so the result is a lower bound of the full-range norm.
double g_function(Setting setting, double nu, const GridFunction& f, double x,
                  const TimeGrid& tgrid, const QuadratureConfig& cfg = {});

// local g-function: the t-derivative of the Gauss-Weierstrass kernel against
// (xy)^{-nu-1/2} d eta_nu over the window (x/2, 2x).
double local_g(double nu, const GridFunction& f, double x, const TimeGrid& tgrid,
               const QuadratureConfig& cfg = {});

// --- Hardy family -----------------------------------------------------------

enum class HardyKind { H0, Hinf, H0log, Hinflog };

// H_0^xi, H_inf^xi and the fixed-exponent log variants (xi = 1 resp. -1),
// with the b-truncation (b = 1 recovers the untruncated operator). Exact
// piecewise-polynomial/logarithmic integration.
double hardy(HardyKind kind, double xi, double b, const GridFunction& f, double x);

// --- local/auxiliary operators ----------------------------------------------

// (1/pi) pv int_{x/b}^{bx} (xy)^{-nu-1/2} / (y-x) f(y) d eta_nu(y)
double local_hilbert_pv(double nu, const GridFunction& f, double x, double b = 2.0,
                        const QuadratureConfig& cfg = {});

// local non-centered Hardy-Littlewood maximal function; grid-search lower
// bound of the sup, monotone (up to ties) in the search resolution
double mloc(double k, const GridFunction& f, double x, int search_points = 48);

// N f(x) = int_{x/b}^{bx} f/y dy (exact)
double n_op(const GridFunction& f, double x, double b = 2.0);

// N^log f(x) = int_{x/b}^{bx} (1/y)(1 + log(xy/(x-y)^2)) f dy
double nlog_op(const GridFunction& f, double x, double b = 2.0);

// T_psi^xi f(x) = sup_t | x^xi int_x^inf f psi(t,y) y^{-xi-1} dy |,
// psi(t,y) = (y^2/t)^eps e^{-c y^2/t}
double tpsi(double xi, double eps, double c, const GridFunction& f, double x,
            const TimeGrid& tgrid, const QuadratureConfig& cfg = {});

// --- singular and fractional integrals ---------------------------------------

// ~R_nu f(x) (exo) / R_nu f(x) (cls): principal value of the leading diagonal
// term plus absolutely convergent remainder inside (x/2, 2x), plain kernel
// quadrature outside.
double riesz_apply(Setting setting, double nu, const GridFunction& f, double x,
                   const QuadratureConfig& cfg = {});

// adjoint transform R*_nu f(x): kernel with swapped arguments
double riesz_adjoint_apply(Setting setting, double nu, const GridFunction& f,
                           double x, const QuadratureConfig& cfg = {});

// I^{nu,sigma} f(x) / ~I^{nu,sigma} f(x)
double frac_integral_apply(Setting setting, double nu, double sigma,
                           const GridFunction& f, double x,
                           const QuadratureConfig& cfg = {});

} // namespace exobessel

#endif
