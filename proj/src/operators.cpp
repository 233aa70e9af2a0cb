#include "exobessel/operators.hpp"
#include "exobessel/errors.hpp"
#include "exobessel/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace exobessel {

namespace {

constexpr double kPi = std::numbers::pi;

double kernel_heat(Setting setting, double nu, double t, double x, double y) {
    return setting == Setting::cls ? heat_classical(nu, t, x, y)
                                   : heat_exotic(nu, t, x, y);
}

std::vector<double> node_splits(const GridFunction& f, double extra1 = -1.0,
                                double extra2 = -1.0) {
    std::vector<double> s(f.abscissae().begin(), f.abscissae().end());
    if (extra1 > 0.0)
        s.push_back(extra1);
    if (extra2 > 0.0)
        s.push_back(extra2);
    return s;
}

// integrate g(y) f(y) y^{2nu+1} dy over the support of f
double integrate_against(const GridFunction& f, double nu,
                         const std::function<double(double)>& g,
                         const QuadratureConfig& cfg, double extra_split = -1.0) {
    const double lo = f.support_lo(), hi = f.support_hi();
    const double eta = 2.0 * nu + 1.0;
    const Integrand h = [&](double y) {
        const double fv = f(y);
        if (fv == 0.0)
            return 0.0;
        return g(y) * fv * std::pow(y, eta);
    };
    const IntegrationResult r = integrate_split(h, lo, hi, node_splits(f, extra_split), cfg);
    if (!r.converged && r.error > std::max(1e3 * cfg.abs_tol, 1e-6 * std::abs(r.value)))
        throw numerics_error("integrate_against: quadrature did not converge");
    return r.value;
}

} // namespace

double apply_heat(Setting setting, double nu, double t, const GridFunction& f,
                  double x, const QuadratureConfig& cfg) {
    if (setting == Setting::cls && !(nu > -1.0))
        throw std::domain_error("apply_heat: classical needs nu > -1");
    if (setting == Setting::exo && !(nu < 1.0))
        throw std::domain_error("apply_heat: exotic needs nu < 1");
    if (!(t > 0.0 && x > 0.0))
        throw std::domain_error("apply_heat: need t, x > 0");
    if (f.unbounded_hint())
        throw numerics_error("apply_heat: unbounded support, tail not summable on a grid");
    return integrate_against(
        f, nu, [&](double y) { return kernel_heat(setting, nu, t, x, y); }, cfg, x);
}

double heat_maximal(Setting setting, double nu, const GridFunction& f, double x,
                    const TimeGrid& tgrid, const QuadratureConfig& cfg) {
    double best = 0.0;
    for (double t : tgrid.nodes())
        best = std::max(best, std::abs(apply_heat(setting, nu, t, f, x, cfg)));
    return best;
}

double apply_poisson(double nu, double t, const GridFunction& f, double x,
                     const QuadratureConfig& cfg) {
    if (!(nu < 1.0))
        throw std::domain_error("apply_poisson: exotic needs nu < 1");
    if (!(t > 0.0 && x > 0.0))
        throw std::domain_error("apply_poisson: need t, x > 0");
    // P_t f = (1/sqrt(pi)) int e^{-v} v^{-1/2} W_{t^2/4v} f dv, v = z^2
    QuadratureConfig inner = cfg;
    inner.rel_tol = std::max(cfg.rel_tol, 1e-9);
    QuadratureConfig outer = cfg;
    outer.rel_tol = std::max(cfg.rel_tol, 1e-7);
    outer.max_subdivisions = std::min(cfg.max_subdivisions, 120);
    const Integrand g = [&](double z) {
        if (z <= 1e-12)
            return 0.0;
        const double teff = 0.25 * t * t / (z * z);
        return 2.0 * std::exp(-z * z) *
               apply_heat(Setting::exo, nu, teff, f, x, inner);
    };
    const IntegrationResult r = integrate_split(g, 0.0, 9.0, {0.25, 0.5, 1.0, 2.0, 4.0}, outer);
    return r.value / std::sqrt(kPi);
}

double poisson_maximal(double nu, const GridFunction& f, double x,
                       const TimeGrid& tgrid, const QuadratureConfig& cfg) {
    double best = 0.0;
    for (double t : tgrid.nodes())
        best = std::max(best, std::abs(apply_poisson(nu, t, f, x, cfg)));
    return best;
}

namespace {

double l2_tdt_norm(const std::function<double(double)>& D, const TimeGrid& tgrid,
                   const QuadratureConfig& cfg) {
    // || D ||_{L^2(t dt)}^2 over [t_min, t_max], in log-time
    const double la = std::log(tgrid.t_min), lb = std::log(tgrid.t_max);
    const Integrand h = [&](double l) {
        const double t = std::exp(l);
        const double d = D(t);
        return d * d * t * t;
    };
    std::vector<double> splits;
    const int seed = std::min(tgrid.count - 1, 24);
    for (int i = 1; i < seed; ++i)
        splits.push_back(la + (lb - la) * i / seed);
    QuadratureConfig c = cfg;
    c.rel_tol = std::max(cfg.rel_tol, 1e-7);
    c.max_subdivisions = std::min(cfg.max_subdivisions, 160);
    const IntegrationResult r = integrate_split(h, la, lb, splits, c);
    return std::sqrt(std::max(0.0, r.value));
}

} // namespace

double g_function(Setting setting, double nu, const GridFunction& f, double x,
                  const TimeGrid& tgrid, const QuadratureConfig& cfg) {
    QuadratureConfig inner = cfg;
    inner.rel_tol = std::max(cfg.rel_tol, 1e-8);
    const auto D = [&](double t) {
        return integrate_against(
            f, nu,
            [&](double y) { return heat_time_derivative(setting, nu, t, x, y); },
            inner, x);
    };
    return l2_tdt_norm(D, tgrid, cfg);
}

double local_g(double nu, const GridFunction& f, double x, const TimeGrid& tgrid,
               const QuadratureConfig& cfg) {
    const double lo = std::max(0.5 * x, f.support_lo());
    const double hi = std::min(2.0 * x, f.support_hi());
    if (!(lo < hi))
        return 0.0;
    const double eta = 2.0 * nu + 1.0;
    QuadratureConfig inner = cfg;
    inner.rel_tol = std::max(cfg.rel_tol, 1e-8);
    const auto D = [&](double t) {
        const Integrand h = [&](double y) {
            const double fv = f(y);
            if (fv == 0.0)
                return 0.0;
            const double d = x - y;
            const double gw = std::exp(-0.25 * d * d / t) / std::sqrt(4.0 * kPi * t);
            const double dt_gw = gw * (0.25 * d * d / (t * t) - 0.5 / t);
            return std::pow(x * y, -nu - 0.5) * dt_gw * fv * std::pow(y, eta);
        };
        return integrate_split(h, lo, hi, node_splits(f, x), inner).value;
    };
    return l2_tdt_norm(D, tgrid, cfg);
}

double hardy(HardyKind kind, double xi, double b, const GridFunction& f, double x) {
    if (!(x > 0.0))
        throw std::domain_error("hardy: need x > 0");
    if (!(b >= 1.0))
        throw std::domain_error("hardy: need b >= 1");
    switch (kind) {
        case HardyKind::H0:
            return std::pow(x, -xi - 1.0) * integral_power(f, 0.0, x / b, xi);
        case HardyKind::Hinf: {
            if (f.unbounded_hint())
                throw numerics_error("hardy: unbounded support tail for H_inf");
            return std::pow(x, xi) *
                   integral_power(f, b * x, f.support_hi(), -xi - 1.0);
        }
        case HardyKind::H0log: {
            // xi fixed at 1: (1/x^2) int_0^{x/b} log(x/y) f(y) y dy
            const double i1 = integral_power(f, 0.0, x / b, 1.0);
            const double il = integral_power_log(f, 0.0, x / b, 1.0);
            return (std::log(x) * i1 - il) / (x * x);
        }
        case HardyKind::Hinflog: {
            // xi fixed at -1: (1/x) int_{bx}^inf log(y/x) f(y) dy
            if (f.unbounded_hint())
                throw numerics_error("hardy: unbounded support tail for H_inf^log");
            const double i0 = integral_power(f, b * x, f.support_hi(), 0.0);
            const double il = integral_power_log(f, b * x, f.support_hi(), 0.0);
            return (il - std::log(x) * i0) / x;
        }
    }
    throw std::domain_error("hardy: unknown kind");
}

double local_hilbert_pv(double nu, const GridFunction& f, double x, double b,
                        const QuadratureConfig& cfg) {
    if (!(x > 0.0))
        throw std::domain_error("local_hilbert_pv: need x > 0");
    if (!(b > 1.02))
        throw std::domain_error("local_hilbert_pv: need b > 1.02");
    const double lo = x / b, hi = b * x;
    const double eta = 2.0 * nu + 1.0;
    const Integrand h = [&](double y) {
        const double fv = f(y);
        if (fv == 0.0)
            return 0.0;
        return std::pow(x * y, -nu - 0.5) / (y - x) * fv * std::pow(y, eta) / kPi;
    };
    if (f(x) == 0.0 && std::abs(f(x * (1.0 - 1.5e-2))) == 0.0 &&
        std::abs(f(x * (1.0 + 1.5e-2))) == 0.0) {
        // singular point outside the support: plain quadrature
        return integrate_split(h, lo, hi, node_splits(f, x), cfg).value;
    }
    return pv_integrate(h, lo, hi, x, cfg);
}

double mloc(double k, const GridFunction& f, double x, int search_points) {
    if (!(k > 1.0))
        throw std::domain_error("mloc: need k > 1");
    if (!(x > 0.0))
        throw std::domain_error("mloc: need x > 0");
    auto avg = [&](double u, double v) {
        if (!(0.0 < u && u < x && x < v && v < k * u))
            return 0.0;
        return integral_abs_power(f, u, v, 0.0) / (v - u);
    };
    std::vector<double> us = logspace(x * 1e-3, x * (1.0 - 1e-9), search_points);
    for (double n : f.abscissae())
        if (n < x && n > x / k)
            us.push_back(n * (1.0 + 1e-12));
    double best = 0.0;
    for (double u : us) {
        if (u <= x / k)
            continue;
        std::vector<double> vs =
            logspace(x * (1.0 + 1e-9), k * u * (1.0 - 1e-9), search_points);
        for (double n : f.abscissae())
            if (n > x && n < k * u)
                vs.push_back(n * (1.0 - 1e-12));
        for (double v : vs)
            best = std::max(best, avg(u, v));
    }
    return best;
}

double n_op(const GridFunction& f, double x, double b) {
    if (!(x > 0.0 && b > 1.0))
        throw std::domain_error("n_op: need x > 0, b > 1");
    return integral_power(f, x / b, b * x, -1.0);
}

double nlog_op(const GridFunction& f, double x, double b) {
    if (!(x > 0.0 && b > 1.0))
        throw std::domain_error("nlog_op: need x > 0, b > 1");
    const double lo = x / b, hi = b * x;
    // (1/y)(1 + log x + log y - 2 log|x-y|)
    const double i0 = integral_power(f, lo, hi, -1.0);
    const double il = integral_power_log(f, lo, hi, -1.0);
    const double id = integral_power_log_absdiff(f, lo, hi, -1.0, x);
    return (1.0 + std::log(x)) * i0 + il - 2.0 * id;
}

double tpsi(double xi, double eps, double c, const GridFunction& f, double x,
            const TimeGrid& tgrid, const QuadratureConfig& cfg) {
    if (!(x > 0.0 && eps > 0.0 && c > 0.0))
        throw std::domain_error("tpsi: need x, eps, c > 0");
    const double hi = f.support_hi();
    if (f.unbounded_hint())
        throw numerics_error("tpsi: unbounded support tail");
    double best = 0.0;
    if (!(x < hi))
        return 0.0;
    for (double t : tgrid.nodes()) {
        const Integrand h = [&](double y) {
            const double fv = f(y);
            if (fv == 0.0)
                return 0.0;
            const double r = y * y / t;
            return fv * std::pow(r, eps) * std::exp(-c * r) * std::pow(y, -xi - 1.0);
        };
        const double v = integrate_split(h, x, hi, node_splits(f), cfg).value;
        best = std::max(best, std::abs(std::pow(x, xi) * v));
    }
    return best;
}

namespace {

struct RieszKernelView {
    Setting setting;
    double nu;
    bool adjoint;
    const QuadratureConfig* cfg;

    double kernel(double x, double y) const {
        const double a = adjoint ? y : x, b = adjoint ? x : y;
        return setting == Setting::cls ? riesz_classical_kernel(nu, a, b, *cfg)
                                       : riesz_exotic_kernel(nu, a, b, *cfg);
    }
    double leading(double x, double y) const {
        const double s = adjoint ? -1.0 : 1.0;
        return s * riesz_diagonal_leading(nu, x, y);
    }
};

double riesz_apply_impl(const RieszKernelView& K, const GridFunction& f, double x,
                        const QuadratureConfig& cfg) {
    const double lo = f.support_lo(), hi = f.support_hi();
    const double eta = 2.0 * K.nu + 1.0;
    const double wlo = std::max(0.5 * x, lo), whi = std::min(2.0 * x, hi);

    QuadratureConfig c = cfg;
    c.rel_tol = std::max(cfg.rel_tol, 1e-8);

    double total = 0.0;
    // off-window pieces: plain kernel quadrature
    auto plain = [&](double a, double b) {
        if (!(a < b))
            return 0.0;
        const Integrand h = [&](double y) {
            const double fv = f(y);
            if (fv == 0.0)
                return 0.0;
            return K.kernel(x, y) * fv * std::pow(y, eta);
        };
        return integrate_split(h, a, b, node_splits(f), c).value;
    };
    total += plain(lo, std::min(wlo, hi));
    total += plain(std::max(whi, lo), hi);
    if (!(wlo < whi))
        return total;

    const bool singular_inside = x > wlo && x < whi && std::abs(f(x)) +
                                     std::abs(f(x * 0.995)) + std::abs(f(x * 1.005)) > 0.0;
    if (!singular_inside && !(x > wlo && x < whi)) {
        total += plain(wlo, whi);
        return total;
    }

    // window piece: pv of the diagonal leading term ...
    if (singular_inside) {
        const Integrand lead = [&](double y) {
            const double fv = f(y);
            if (fv == 0.0)
                return 0.0;
            return K.leading(x, y) * fv * std::pow(y, eta);
        };
        QuadratureConfig pv_cfg = c;
        const double room = std::min({0.01 * x, 0.45 * (x - wlo), 0.45 * (whi - x)});
        pv_cfg.pv_epsilon_sequence.clear();
        for (int k2 = 0; k2 < 9; ++k2)
            pv_cfg.pv_epsilon_sequence.push_back(room / x * std::pow(2.0, -k2));
        total += pv_integrate(lead, wlo, whi, x, pv_cfg);
    } else {
        const Integrand lead = [&](double y) {
            const double fv = f(y);
            if (fv == 0.0)
                return 0.0;
            return K.leading(x, y) * fv * std::pow(y, eta);
        };
        total += integrate_split(lead, wlo, whi, node_splits(f, x), c).value;
    }

    // ... plus the absolutely convergent remainder
    const Integrand rem = [&](double y) {
        const double fv = f(y);
        if (fv == 0.0 || y == x)
            return 0.0;
        return (K.kernel(x, y) - K.leading(x, y)) * fv * std::pow(y, eta);
    };
    QuadratureConfig rem_cfg = c;
    rem_cfg.rel_tol = 1e-6;
    rem_cfg.abs_tol = std::max(cfg.abs_tol, 1e-10);
    rem_cfg.max_subdivisions = std::min(cfg.max_subdivisions, 240);
    total += integrate_split(rem, wlo, whi, node_splits(f, x), rem_cfg).value;
    return total;
}

} // namespace

double riesz_apply(Setting setting, double nu, const GridFunction& f, double x,
                   const QuadratureConfig& cfg) {
    if (setting == Setting::cls && !(nu > -1.0))
        throw std::domain_error("riesz_apply: classical needs nu > -1");
    if (setting == Setting::exo && !(nu < 1.0 && nu != 0.0))
        throw std::domain_error("riesz_apply: exotic needs 0 != nu < 1");
    RieszKernelView K{setting, nu, false, &cfg};
    return riesz_apply_impl(K, f, x, cfg);
}

double riesz_adjoint_apply(Setting setting, double nu, const GridFunction& f,
                           double x, const QuadratureConfig& cfg) {
    if (setting == Setting::cls && !(nu > -1.0))
        throw std::domain_error("riesz_adjoint_apply: classical needs nu > -1");
    if (setting == Setting::exo && !(nu < 1.0 && nu != 0.0))
        throw std::domain_error("riesz_adjoint_apply: exotic needs 0 != nu < 1");
    RieszKernelView K{setting, nu, true, &cfg};
    return riesz_apply_impl(K, f, x, cfg);
}

double frac_integral_apply(Setting setting, double nu, double sigma,
                           const GridFunction& f, double x,
                           const QuadratureConfig& cfg) {
    QuadratureConfig inner = cfg;
    inner.rel_tol = std::max(cfg.rel_tol, 1e-9);
    QuadratureConfig outer = cfg;
    outer.rel_tol = std::max(cfg.rel_tol, 1e-7);
    outer.max_subdivisions = std::min(cfg.max_subdivisions, 400);
    const double eta = 2.0 * nu + 1.0;
    const Integrand h = [&](double y) {
        const double fv = f(y);
        if (fv == 0.0 || y == x)
            return 0.0;
        return potential_kernel(setting, nu, sigma, x, y, inner) * fv * std::pow(y, eta);
    };
    const IntegrationResult r = integrate_split(
        h, f.support_lo(), f.support_hi(), node_splits(f, x), outer);
    return r.value;
}

} // namespace exobessel
