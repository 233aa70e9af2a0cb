#include "exobessel/kernels.hpp"
#include "exobessel/errors.hpp"
#include "exobessel/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace exobessel {

namespace {

constexpr double kPi = std::numbers::pi;

void require(bool cond, const char* msg) {
    if (!cond)
        throw std::domain_error(msg);
}

// Integrates F over (0, inf) dt after the standard split at t0 = xy:
// on (0, t0] substitute u = xy/2t (Bessel argument becomes u >= 1/2),
// on [t0, inf) substitute u = t/xy (Bessel argument becomes 1/2u <= 1/2).
struct SplitTailIntegral {
    double value;
    int subdivisions;
};

SplitTailIntegral integrate_time_split(const Integrand& F, double x, double y,
                                       const QuadratureConfig& cfg) {
    const double xy = x * y;
    const Integrand small_t = [&](double u) {
        const double t = 0.5 * xy / u;
        return F(t) * 0.5 * xy / (u * u);
    };
    const Integrand large_t = [&](double u) { return F(xy * u) * xy; };
    const IntegrationResult r1 = integrate_to_inf(small_t, 0.5, cfg);
    const IntegrationResult r2 = integrate_to_inf(large_t, 1.0, cfg);
    if (!r1.converged || !r2.converged)
        throw numerics_error("time integral did not converge");
    return {r1.value + r2.value, r1.subdivisions + r2.subdivisions};
}

} // namespace

KernelFamily kernel_family_from_string(const std::string& s) {
    if (s == "HeatCls") return KernelFamily::HeatCls;
    if (s == "HeatExo") return KernelFamily::HeatExo;
    if (s == "PoissonExo") return KernelFamily::PoissonExo;
    if (s == "RieszCls") return KernelFamily::RieszCls;
    if (s == "RieszExo") return KernelFamily::RieszExo;
    if (s == "CompPotentialCls") return KernelFamily::CompPotentialCls;
    if (s == "PotentialCls") return KernelFamily::PotentialCls;
    if (s == "PotentialExo") return KernelFamily::PotentialExo;
    throw std::domain_error("unknown kernel family: " + s);
}

std::string to_string(KernelFamily f) {
    switch (f) {
        case KernelFamily::HeatCls: return "HeatCls";
        case KernelFamily::HeatExo: return "HeatExo";
        case KernelFamily::PoissonExo: return "PoissonExo";
        case KernelFamily::RieszCls: return "RieszCls";
        case KernelFamily::RieszExo: return "RieszExo";
        case KernelFamily::CompPotentialCls: return "CompPotentialCls";
        case KernelFamily::PotentialCls: return "PotentialCls";
        case KernelFamily::PotentialExo: return "PotentialExo";
    }
    return "?";
}

double heat_classical(double nu, double t, double x, double y) {
    require(nu > -1.0, "heat_classical: need nu > -1");
    require(t > 0.0 && x > 0.0 && y > 0.0, "heat_classical: need t, x, y > 0");
    const double w = 0.5 * x * y / t;
    const double d = x - y;
    return std::pow(2.0 * t, -nu - 1.0) * scaled_ratio_exp(Order(nu), w) *
           std::exp(-0.25 * d * d / t);
}

double heat_exotic(double nu, double t, double x, double y) {
    require(nu < 1.0, "heat_exotic: need nu < 1");
    return std::pow(x * y, -2.0 * nu) * heat_classical(-nu, t, x, y);
}

double heat_at_zero(double mu, double t, double y) {
    require(mu > -1.0, "heat_at_zero: need mu > -1");
    require(t > 0.0 && y >= 0.0, "heat_at_zero: need t > 0, y >= 0");
    return std::exp(-0.25 * y * y / t) * std::pow(2.0 * t, -mu - 1.0) /
           (std::pow(2.0, mu) * gamma_real(mu + 1.0));
}

namespace {

double heat_classical_dt(double nu, double t, double x, double y) {
    // d/dt W = pre E [ sre(nu,w) (-(nu+1)/t + (x-y)^2/4t^2) + (w/t) dsre(nu,w) ],
    // grouped through dsre = e^{-w} w^{-nu}(I_nu - I_{nu+1}) so that no O(w/t)
    // cancellation is left at small t.
    const double w = 0.5 * x * y / t;
    const double d = x - y;
    const double E = std::exp(-0.25 * d * d / t);
    const double pre = std::pow(2.0 * t, -nu - 1.0);
    const double a = scaled_ratio_exp(Order(nu), w) *
                     (-(nu + 1.0) / t + 0.25 * d * d / (t * t));
    const double b = (w / t) * scaled_ratio_exp_diff(Order(nu), w);
    return pre * E * (a + b);
}

} // namespace

double heat_time_derivative(Setting setting, double nu, double t, double x, double y) {
    require(t > 0.0 && x > 0.0 && y > 0.0, "heat_time_derivative: need t, x, y > 0");
    if (setting == Setting::cls) {
        require(nu > -1.0, "heat_time_derivative: classical needs nu > -1");
        return heat_classical_dt(nu, t, x, y);
    }
    require(nu < 1.0, "heat_time_derivative: exotic needs nu < 1");
    return std::pow(x * y, -2.0 * nu) * heat_classical_dt(-nu, t, x, y);
}

double heat_classical_dx(double nu, double t, double x, double y) {
    // d/dx W = (2t)^{-nu-2} E [ (y - x) w sre(nu+1, w) - x dsre(nu, w) ]
    require(nu > -1.0, "heat_classical_dx: need nu > -1");
    require(t > 0.0 && x > 0.0 && y > 0.0, "heat_classical_dx: need t, x, y > 0");
    const double w = 0.5 * x * y / t;
    const double d = x - y;
    const double E = std::exp(-0.25 * d * d / t);
    const double g = scaled_ratio_exp(Order(nu + 1.0), w);
    const double dd = scaled_ratio_exp_diff(Order(nu), w);
    return std::pow(2.0 * t, -nu - 2.0) * E * ((y - x) * w * g - x * dd);
}

double poisson_classical(double mu, double t, double x, double y,
                         const QuadratureConfig& cfg) {
    require(mu > -1.0, "poisson_classical: need mu > -1");
    require(t > 0.0 && x > 0.0 && y > 0.0, "poisson_classical: need t, x, y > 0");
    // P_t = (1/sqrt(pi)) int_0^inf e^{-v} v^{-1/2} W_{t^2/4v} dv; v = z^2 removes
    // the endpoint singularity.
    const Integrand g = [&](double z) {
        if (z == 0.0)
            return 0.0;
        return 2.0 * std::exp(-z * z) * heat_classical(mu, 0.25 * t * t / (z * z), x, y);
    };
    const IntegrationResult r = integrate_split(g, 0.0, 10.0, {0.5, 1.0, 2.0, 4.0}, cfg);
    if (!r.converged)
        throw numerics_error("poisson_classical: subordination quadrature failed");
    return r.value / std::sqrt(kPi);
}

double poisson_exotic(double nu, double t, double x, double y,
                      const QuadratureConfig& cfg) {
    require(nu < 1.0, "poisson_exotic: need nu < 1");
    return std::pow(x * y, -2.0 * nu) * poisson_classical(-nu, t, x, y, cfg);
}

double comp_potential_classical(double mu, double x, double y,
                                const QuadratureConfig& cfg) {
    require(mu > -1.0, "comp_potential_classical: need mu > -1");
    require(x > 0.0 && y > 0.0, "comp_potential_classical: need x, y > 0");
    if (x == y)
        throw std::domain_error("comp_potential_classical: singular at x == y");
    const bool compensate = mu <= -0.5;
    const double climit = std::pow(2.0, -mu) / gamma_real(mu + 1.0);
    const Integrand F = [&](double t) {
        if (!compensate)
            return heat_classical(mu, t, x, y) / std::sqrt(t);
        const double w = 0.5 * x * y / t;
        if (w >= 30.0) // small t: the two kernels differ at leading order
            return (heat_classical(mu, t, x, y) - heat_at_zero(mu, t, y)) /
                   std::sqrt(t);
        // large t: regroup W_t(x,y) - W_t(0,y) so the tail decays instead of
        // flooring at rounding noise:
        //   (2t)^{-mu-1} e^{-y^2/4t} [ c expm1(-x^2/4t) + (w^{-mu}I_mu(w) - c) e^{-x^2/4t} ]
        const double s = 0.25 * x * x / t;
        const double bracket = climit * std::expm1(-s) +
                               scaled_ratio_minus_limit(Order(mu), w) * std::exp(-s);
        return std::pow(2.0 * t, -mu - 1.0) * std::exp(-0.25 * y * y / t) * bracket /
               std::sqrt(t);
    };
    return integrate_time_split(F, x, y, cfg).value / std::sqrt(kPi);
}

double riesz_diagonal_leading(double nu, double x, double y) {
    return std::pow(x * y, -nu - 0.5) / (kPi * (y - x));
}

double riesz_classical_kernel(double nu, double x, double y,
                              const QuadratureConfig& cfg) {
    require(nu > -1.0, "riesz_classical_kernel: need nu > -1");
    require(x > 0.0 && y > 0.0, "riesz_classical_kernel: need x, y > 0");
    if (x == y)
        throw std::domain_error("riesz_classical_kernel: singular at x == y");

    const bool near_diagonal = std::abs(x - y) < 0.01 * x;
    if (!near_diagonal) {
        const Integrand F = [&](double t) {
            return heat_classical_dx(nu, t, x, y) / std::sqrt(t);
        };
        return integrate_time_split(F, x, y, cfg).value / std::sqrt(kPi);
    }

    // Close to the diagonal the raw integrand cancels to the last digit;
    // peel off the term whose t-integral is exactly the 1/(y-x) singularity.
    const double lead_coef = (y - x) * std::pow(x * y, -nu - 0.5) / std::sqrt(2.0 * kPi);
    const double d2 = (x - y) * (x - y);
    const Integrand F = [&](double t) {
        const double lt = lead_coef * std::pow(2.0 * t, -1.5) * std::exp(-0.25 * d2 / t);
        return (heat_classical_dx(nu, t, x, y) - lt) / std::sqrt(t);
    };
    const double rem = integrate_time_split(F, x, y, cfg).value / std::sqrt(kPi);
    return riesz_diagonal_leading(nu, x, y) + rem;
}

double riesz_exotic_kernel(double nu, double x, double y,
                           const QuadratureConfig& cfg) {
    require(nu < 1.0 && nu != 0.0, "riesz_exotic_kernel: need 0 != nu < 1");
    require(x > 0.0 && y > 0.0, "riesz_exotic_kernel: need x, y > 0");
    if (x == y)
        throw std::domain_error("riesz_exotic_kernel: singular at x == y");
    // compensation for nu >= 1/2 is built into the potential kernel (mu <= -1/2)
    const double r = riesz_classical_kernel(-nu, x, y, cfg);
    const double k = comp_potential_classical(-nu, x, y, cfg);
    return std::pow(x * y, -2.0 * nu) * (r - (2.0 * nu / x) * k);
}

namespace {

double potential_kernel_classical_range(double mu, double sigma, double x, double y,
                                        double t_cap, const QuadratureConfig& cfg) {
    const Integrand F = [&](double t) {
        if (t >= t_cap)
            return 0.0;
        return heat_classical(mu, t, x, y) * std::pow(t, sigma - 1.0);
    };
    if (std::isinf(t_cap))
        return integrate_time_split(F, x, y, cfg).value / gamma_real(sigma);
    // truncated variant: split at t = xy, log-time on the (possibly huge) tail
    const double xy = x * y;
    const Integrand small_t = [&](double u) {
        const double t = 0.5 * xy / u;
        return F(t) * 0.5 * xy / (u * u);
    };
    double value = 0.0;
    if (t_cap > xy) {
        const IntegrationResult r1 = integrate_to_inf(small_t, 0.5, cfg);
        const Integrand log_t = [&](double l) {
            const double t = std::exp(l);
            return F(t) * t;
        };
        const IntegrationResult r2 =
            integrate_split(log_t, std::log(xy), std::log(t_cap), {}, cfg);
        value = r1.value + r2.value;
    } else {
        const IntegrationResult r1 = integrate_to_inf(small_t, 0.5 * xy / t_cap, cfg);
        value = r1.value;
    }
    return value / gamma_real(sigma);
}

} // namespace

double potential_kernel(Setting setting, double nu, double sigma, double x, double y,
                        const QuadratureConfig& cfg) {
    require(x > 0.0 && y > 0.0, "potential_kernel: need x, y > 0");
    if (setting == Setting::cls) {
        require(nu > -1.0, "potential_kernel: classical needs nu > -1");
        require(sigma > 0.0 && sigma < nu + 1.0,
                "potential_kernel: need 0 < sigma < nu+1 (kernel infinite otherwise)");
        return potential_kernel_classical_range(
            nu, sigma, x, y, std::numeric_limits<double>::infinity(), cfg);
    }
    require(nu < 1.0, "potential_kernel: exotic needs nu < 1");
    require(sigma > 0.0 && sigma < -nu + 1.0,
            "potential_kernel: need 0 < sigma < -nu+1 (kernel infinite otherwise)");
    return std::pow(x * y, -2.0 * nu) *
           potential_kernel_classical_range(
               -nu, sigma, x, y, std::numeric_limits<double>::infinity(), cfg);
}

double potential_kernel_truncated(Setting setting, double nu, double sigma,
                                  double x, double y, double T,
                                  const QuadratureConfig& cfg) {
    require(x > 0.0 && y > 0.0 && T > 0.0, "potential_kernel_truncated: bad inputs");
    require(sigma > 0.0, "potential_kernel_truncated: need sigma > 0");
    if (setting == Setting::cls) {
        require(nu > -1.0, "potential_kernel_truncated: classical needs nu > -1");
        return potential_kernel_classical_range(nu, sigma, x, y, T, cfg);
    }
    require(nu < 1.0, "potential_kernel_truncated: exotic needs nu < 1");
    return std::pow(x * y, -2.0 * nu) *
           potential_kernel_classical_range(-nu, sigma, x, y, T, cfg);
}

double chapman_kolmogorov_residual(Setting setting, double nu, double t, double s,
                                   double x, double y, const QuadratureConfig& cfg) {
    const auto K = [&](double tt, double a, double b) {
        return setting == Setting::cls ? heat_classical(nu, tt, a, b)
                                       : heat_exotic(nu, tt, a, b);
    };
    const double eta = 2.0 * nu + 1.0;
    const Integrand f = [&](double z) {
        if (z <= 0.0)
            return 0.0;
        return K(t, x, z) * K(s, z, y) * std::pow(z, eta);
    };
    // Gaussian decay in z; the integrand is O(z^{2mu+1}) at 0 which is
    // integrable for mu > -1 in both settings.
    const double zmax = std::max(x, y) + 10.0 * std::sqrt(std::max(t, s)) + 5.0;
    const IntegrationResult r =
        integrate_split(f, 0.0, zmax, {0.5 * std::min(x, y), x, y, 0.5 * zmax}, cfg);
    const double lhs = r.value;
    const double rhs = K(t + s, x, y);
    return (lhs - rhs) / rhs;
}

KernelValue eval_kernel(const KernelQuery& q, const QuadratureConfig& cfg) {
    KernelValue out{};
    const long panels0 = quadrature_panel_count();
    const auto work = [&] {
        return static_cast<int>(quadrature_panel_count() - panels0);
    };
    switch (q.family) {
        case KernelFamily::HeatCls:
            require(q.t_or_sigma.has_value(), "HeatCls: needs t");
            out.value = heat_classical(q.nu, *q.t_or_sigma, q.x, q.y);
            out.regime = "closed-form";
            return out;
        case KernelFamily::HeatExo:
            require(q.t_or_sigma.has_value(), "HeatExo: needs t");
            out.value = heat_exotic(q.nu, *q.t_or_sigma, q.x, q.y);
            out.regime = "closed-form";
            return out;
        case KernelFamily::PoissonExo:
            require(q.t_or_sigma.has_value(), "PoissonExo: needs t");
            out.value = poisson_exotic(q.nu, *q.t_or_sigma, q.x, q.y, cfg);
            out.regime = "subordination";
            out.subdivisions = work();
            return out;
        case KernelFamily::RieszCls:
            out.value = riesz_classical_kernel(q.nu, q.x, q.y, cfg);
            out.regime = std::abs(q.x - q.y) < 0.01 * q.x ? "near-diagonal" : "quadrature";
            out.subdivisions = work();
            return out;
        case KernelFamily::RieszExo:
            out.value = riesz_exotic_kernel(q.nu, q.x, q.y, cfg);
            out.regime = std::abs(q.x - q.y) < 0.01 * q.x ? "near-diagonal" : "quadrature";
            out.subdivisions = work();
            return out;
        case KernelFamily::CompPotentialCls:
            out.value = comp_potential_classical(q.nu, q.x, q.y, cfg);
            out.regime = q.nu <= -0.5 ? "compensated" : "plain";
            out.subdivisions = work();
            return out;
        case KernelFamily::PotentialCls:
            require(q.t_or_sigma.has_value(), "PotentialCls: needs sigma");
            out.value = potential_kernel(Setting::cls, q.nu, *q.t_or_sigma, q.x, q.y, cfg);
            out.regime = "quadrature";
            out.subdivisions = work();
            return out;
        case KernelFamily::PotentialExo:
            require(q.t_or_sigma.has_value(), "PotentialExo: needs sigma");
            out.value = potential_kernel(Setting::exo, q.nu, *q.t_or_sigma, q.x, q.y, cfg);
            out.regime = "quadrature";
            out.subdivisions = work();
            return out;
    }
    throw std::domain_error("eval_kernel: unknown family");
}

} // namespace exobessel
