#include "exobessel/quadrature.hpp"
#include "exobessel/errors.hpp"

#include <algorithm>
#include <cmath>
#include <queue>

namespace exobessel {

namespace {

thread_local long g_panel_count = 0;

// Gauss-Kronrod 7-15 nodes/weights on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Panel {
    double a, b, value, error;
};

Panel gk15(const Integrand& f, double a, double b) {
    ++g_panel_count;
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double resg = 0.0, resk = 0.0;
    const double fc = f(c);
    resk = kWgk[7] * fc;
    resg = kWg[3] * fc;
    for (int j = 0; j < 7; ++j) {
        const double dx = h * kXgk[j];
        const double f1 = f(c - dx), f2 = f(c + dx);
        resk += kWgk[j] * (f1 + f2);
        if (j % 2 == 1)
            resg += kWg[j / 2] * (f1 + f2);
    }
    Panel p;
    p.a = a;
    p.b = b;
    p.value = resk * h;
    p.error = std::abs((resk - resg) * h);
    return p;
}

IntegrationResult adapt(const Integrand& f, std::vector<Panel> panels,
                        const QuadratureConfig& cfg) {
    double total = 0.0, err = 0.0, sumabs = 0.0;
    for (const Panel& p : panels) {
        total += p.value;
        err += p.error;
        sumabs += std::abs(p.value);
    }
    auto cmp = [](const Panel& l, const Panel& r) { return l.error < r.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> q(cmp, std::move(panels));

    // below ~eps * int |f| the error estimate is cancellation noise
    auto tol = [&] {
        return std::max({cfg.abs_tol, cfg.rel_tol * std::abs(total), 4e-15 * sumabs});
    };
    int n = 0;
    while (err > tol() && n < cfg.max_subdivisions && !q.empty()) {
        Panel worst = q.top();
        q.pop();
        const double m = 0.5 * (worst.a + worst.b);
        if (m <= worst.a || m >= worst.b) // interval exhausted at machine precision
            continue;
        Panel l = gk15(f, worst.a, m), r = gk15(f, m, worst.b);
        total += l.value + r.value - worst.value;
        err += l.error + r.error - worst.error;
        sumabs += std::abs(l.value) + std::abs(r.value) - std::abs(worst.value);
        q.push(l);
        q.push(r);
        ++n;
    }
    IntegrationResult out;
    out.value = total;
    out.error = err;
    out.subdivisions = n;
    out.converged = err <= tol();
    return out;
}

} // namespace

long quadrature_panel_count() { return g_panel_count; }

IntegrationResult integrate(const Integrand& f, double a, double b,
                            const QuadratureConfig& cfg) {
    if (a == b)
        return {};
    return adapt(f, {gk15(f, a, b)}, cfg);
}

IntegrationResult integrate_split(const Integrand& f, double a, double b,
                                  const std::vector<double>& interior_splits,
                                  const QuadratureConfig& cfg) {
    std::vector<double> pts = {a, b};
    for (double s : interior_splits)
        if (s > a && s < b)
            pts.push_back(s);
    std::sort(pts.begin(), pts.end());
    std::vector<Panel> panels;
    for (size_t i = 0; i + 1 < pts.size(); ++i)
        if (pts[i + 1] > pts[i])
            panels.push_back(gk15(f, pts[i], pts[i + 1]));
    if (panels.empty())
        return {};
    return adapt(f, std::move(panels), cfg);
}

IntegrationResult integrate_to_inf(const Integrand& f, double a,
                                   const QuadratureConfig& cfg) {
    IntegrationResult out;
    double lo = a;
    double h = std::max(1.0, std::abs(a));
    int quiet = 0;
    QuadratureConfig seg_cfg = cfg;
    for (int seg = 0; seg < 220; ++seg) {
        seg_cfg.abs_tol = std::max(cfg.abs_tol * 0.25,
                                   cfg.rel_tol * 0.1 * std::abs(out.value));
        IntegrationResult r = integrate(f, lo, lo + h, seg_cfg);
        out.value += r.value;
        out.error += r.error;
        out.subdivisions += r.subdivisions + 1;
        const double thresh =
            std::max(cfg.abs_tol, 0.1 * cfg.rel_tol * std::abs(out.value));
        quiet = (std::abs(r.value) < thresh) ? quiet + 1 : 0;
        if (quiet >= 2)
            return out;
        lo += h;
        h *= 2.0;
    }
    out.converged = false;
    return out;
}

double pv_integrate(const Integrand& f, double lo, double hi, double xs,
                    const QuadratureConfig& cfg) {
    if (!(lo < xs && xs < hi))
        throw std::domain_error("pv_integrate: singular point outside interval");
    const auto& rel = cfg.pv_epsilon_sequence;
    if (rel.size() < 3)
        throw std::domain_error("pv_integrate: epsilon sequence too short");
    for (size_t i = 0; i < rel.size(); ++i)
        if (!(rel[i] > 0.0) || (i > 0 && !(rel[i] < rel[i - 1])))
            throw std::domain_error("pv_integrate: epsilons must decrease to 0");

    std::vector<double> vals;
    vals.reserve(rel.size());
    for (double re : rel) {
        const double eps = re * xs;
        if (xs - eps <= lo || xs + eps >= hi)
            throw std::domain_error("pv_integrate: epsilon window exceeds interval");
        const IntegrationResult left = integrate_split(f, lo, xs - eps, {}, cfg);
        const IntegrationResult right = integrate_split(f, xs + eps, hi, {}, cfg);
        vals.push_back(left.value + right.value);
    }

    // epsilons halve, so I(eps) = I0 + c1 eps + c2 eps^2 + ...; two Richardson
    // sweeps on the tail of the sequence
    std::vector<double> r1, r2;
    for (size_t i = 0; i + 1 < vals.size(); ++i)
        r1.push_back(2.0 * vals[i + 1] - vals[i]);
    for (size_t i = 0; i + 1 < r1.size(); ++i)
        r2.push_back((4.0 * r1[i + 1] - r1[i]) / 3.0);

    const double last = r2.back(), prev = r2[r2.size() - 2];
    double vmax = 0.0;
    for (double v : vals)
        vmax = std::max(vmax, std::abs(v));
    const double tol = std::max({1e-6 * std::max(std::abs(last), std::abs(prev)),
                                 1e-9 * (1.0 + vmax), 10.0 * cfg.abs_tol});
    if (std::abs(last - prev) > tol)
        throw numerics_error("pv_integrate: extrapolation did not settle");
    return last;
}

} // namespace exobessel
