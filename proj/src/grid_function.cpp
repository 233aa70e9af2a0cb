#include "exobessel/grid_function.hpp"
#include "exobessel/quadrature.hpp"
#include "exobessel/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace exobessel {

GridFunction::GridFunction(std::vector<double> abscissae, std::vector<double> values,
                           Interp interp)
    : x_(std::move(abscissae)), v_(std::move(values)), interp_(interp) {
    if (x_.size() < 2 || x_.size() != v_.size())
        throw std::domain_error("GridFunction: need >= 2 nodes, matching values");
    if (x_.front() <= 0.0)
        throw std::domain_error("GridFunction: abscissae must be positive");
    for (size_t i = 0; i + 1 < x_.size(); ++i)
        if (!(x_[i] < x_[i + 1]))
            throw std::domain_error("GridFunction: abscissae must be strictly increasing");
}

GridFunction GridFunction::indicator(double a, double b) {
    if (!(0.0 < a && a < b))
        throw std::domain_error("indicator: need 0 < a < b");
    GridFunction g({a, b}, {1.0, 1.0}, Interp::piecewise_constant);
    g.support_hint = {a, b};
    return g;
}

GridFunction GridFunction::power(double a, double b, double expo, double coef, int count) {
    std::vector<double> xs = logspace(a, b, count), vs(xs.size());
    for (size_t i = 0; i < xs.size(); ++i)
        vs[i] = coef * std::pow(xs[i], expo);
    GridFunction g(std::move(xs), std::move(vs), Interp::linear);
    g.support_hint = {a, b};
    return g;
}

double GridFunction::operator()(double y) const {
    if (y < x_.front() || y > x_.back())
        return 0.0;
    const auto it = std::upper_bound(x_.begin(), x_.end(), y);
    size_t i = static_cast<size_t>(it - x_.begin());
    if (i == 0)
        i = 1;
    if (i == x_.size())
        i = x_.size() - 1;
    const size_t l = i - 1;
    double base;
    if (interp_ == Interp::piecewise_constant) {
        base = v_[l];
    } else {
        const double s = (y - x_[l]) / (x_[i] - x_[l]);
        base = v_[l] + s * (v_[i] - v_[l]);
    }
    return power_weight == 0.0 ? base : base * std::pow(y, power_weight);
}

bool GridFunction::unbounded_hint() const {
    return support_hint && std::isinf(support_hint->second);
}

std::vector<GridFunction::Segment> GridFunction::segments() const {
    std::vector<Segment> out;
    out.reserve(x_.size() - 1);
    for (size_t i = 0; i + 1 < x_.size(); ++i) {
        Segment s;
        s.lo = x_[i];
        s.hi = x_[i + 1];
        if (interp_ == Interp::piecewise_constant) {
            s.slope = 0.0;
            s.intercept = v_[i];
        } else {
            s.slope = (v_[i + 1] - v_[i]) / (x_[i + 1] - x_[i]);
            s.intercept = v_[i] - s.slope * x_[i];
        }
        out.push_back(s);
    }
    return out;
}

GridFunction GridFunction::scaled(double c) const {
    std::vector<double> vs(v_);
    for (double& v : vs)
        v *= c;
    GridFunction g(x_, std::move(vs), interp_);
    g.power_weight = power_weight;
    g.support_hint = support_hint;
    return g;
}

double power_primitive(double a, double b, double s) {
    if (!(0.0 < a && a <= b))
        throw std::domain_error("power_primitive: need 0 < a <= b");
    if (std::abs(s + 1.0) < 1e-14)
        return std::log(b / a);
    return (std::pow(b, s + 1.0) - std::pow(a, s + 1.0)) / (s + 1.0);
}

double power_log_primitive(double a, double b, double s) {
    if (!(0.0 < a && a <= b))
        throw std::domain_error("power_log_primitive: need 0 < a <= b");
    if (std::abs(s + 1.0) < 1e-14) {
        const double la = std::log(a), lb = std::log(b);
        return 0.5 * (lb * lb - la * la);
    }
    const double p = s + 1.0;
    auto F = [&](double y) {
        return std::pow(y, p) * (std::log(y) / p - 1.0 / (p * p));
    };
    return F(b) - F(a);
}

namespace {

template <typename CellFn>
double over_segments(const GridFunction& f, double lo, double hi, CellFn&& cell) {
    lo = std::max(lo, f.support_lo());
    hi = std::min(hi, f.support_hi());
    if (!(lo < hi))
        return 0.0;
    double total = 0.0;
    for (const auto& seg : f.segments()) {
        const double a = std::max(seg.lo, lo), b = std::min(seg.hi, hi);
        if (a < b)
            total += cell(seg, a, b);
    }
    return total;
}

} // namespace

double integral_power(const GridFunction& f, double lo, double hi, double s) {
    const double pw = f.power_weight;
    return over_segments(f, lo, hi, [&](const GridFunction::Segment& seg, double a, double b) {
        return seg.intercept * power_primitive(a, b, s + pw) +
               seg.slope * power_primitive(a, b, s + pw + 1.0);
    });
}

double integral_power_log(const GridFunction& f, double lo, double hi, double s) {
    const double pw = f.power_weight;
    return over_segments(f, lo, hi, [&](const GridFunction::Segment& seg, double a, double b) {
        return seg.intercept * power_log_primitive(a, b, s + pw) +
               seg.slope * power_log_primitive(a, b, s + pw + 1.0);
    });
}

double integral_abs_power(const GridFunction& f, double lo, double hi, double s) {
    const double pw = f.power_weight;
    return over_segments(f, lo, hi, [&](const GridFunction::Segment& seg, double a, double b) {
        auto piece = [&](double l, double h) {
            const double mid = 0.5 * (l + h);
            const double sign = (seg.intercept + seg.slope * mid) < 0.0 ? -1.0 : 1.0;
            return sign * (seg.intercept * power_primitive(l, h, s + pw) +
                           seg.slope * power_primitive(l, h, s + pw + 1.0));
        };
        if (seg.slope != 0.0) {
            const double root = -seg.intercept / seg.slope;
            if (root > a && root < b)
                return piece(a, root) + piece(root, b);
        }
        return piece(a, b);
    });
}

double integral_power_log_absdiff(const GridFunction& f, double lo, double hi,
                                  double s, double x) {
    const bool exact = f.interpolation() == Interp::piecewise_constant &&
                       f.power_weight == 0.0 && std::abs(s + 1.0) < 1e-14;
    if (exact) {
        // int_a^b log|x-y| dy/y = [log(x) log(u) - Re Li2(u)]_{u=a/x}^{b/x}
        // since log|x-y| = log x + log|1-y/x|.
        // F is continuous across u = 1 (Re Li2(1) = pi^2/6), so one difference
        // also covers segments straddling the singularity.
        auto F = [&](double y) {
            const double u = y / x;
            return std::log(x) * std::log(u) - dilog_real(u);
        };
        return over_segments(f, lo, hi,
                             [&](const GridFunction::Segment& seg, double a, double b) {
                                 return seg.intercept * (F(b) - F(a));
                             });
    }
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-13;
    cfg.rel_tol = 1e-11;
    const Integrand g = [&](double y) {
        const double d = std::abs(x - y);
        if (d == 0.0)
            return 0.0;
        return f(y) * std::pow(y, s) * std::log(d);
    };
    lo = std::max(lo, f.support_lo());
    hi = std::min(hi, f.support_hi());
    if (!(lo < hi))
        return 0.0;
    std::vector<double> splits(f.abscissae().begin(), f.abscissae().end());
    splits.push_back(x);
    if (x > lo && x < hi) {
        splits.push_back(0.5 * (lo + x));
        splits.push_back(0.5 * (x + hi));
    }
    return integrate_split(g, lo, hi, splits, cfg).value;
}

namespace {

// intervals of {y in [a,b] : |c + m y| > lambda} for one segment
void superlevel_intervals(double m, double c, double a, double b, double lambda,
                          bool strict, std::vector<std::pair<double, double>>& out) {
    auto above = [&](double y) {
        const double v = std::abs(c + m * y);
        return strict ? v > lambda : v >= lambda;
    };
    if (m == 0.0) {
        if (above(a))
            out.emplace_back(a, b);
        return;
    }
    // breakpoints where |c + m y| == lambda
    std::vector<double> pts = {a, b};
    for (double target : {lambda, -lambda}) {
        const double r = (target - c) / m;
        if (r > a && r < b)
            pts.push_back(r);
    }
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i + 1 < pts.size(); ++i) {
        const double mid = 0.5 * (pts[i] + pts[i + 1]);
        if (above(mid))
            out.emplace_back(pts[i], pts[i + 1]);
    }
}

} // namespace

double superlevel_measure(const GridFunction& f, double lambda, double delta,
                          bool strict) {
    if (lambda < 0.0)
        throw std::domain_error("superlevel_measure: need lambda >= 0");
    if (f.power_weight != 0.0) {
        // no linear structure in y; fall back to a fine scan refined by bisection
        QuadratureConfig cfg;
        const Integrand ind = [&](double y) {
            const double v = std::abs(f(y));
            const bool in = strict ? v > lambda : v >= lambda;
            return in ? std::pow(y, delta) : 0.0;
        };
        return integrate_split(ind, f.support_lo(), f.support_hi(),
                               std::vector<double>(f.abscissae().begin(),
                                                   f.abscissae().end()),
                               cfg)
            .value;
    }
    std::vector<std::pair<double, double>> ivs;
    for (const auto& seg : f.segments())
        superlevel_intervals(seg.slope, seg.intercept, seg.lo, seg.hi, lambda, strict, ivs);
    double m = 0.0;
    for (const auto& [a, b] : ivs)
        if (a < b)
            m += power_primitive(a, b, delta);
    return m;
}

TimeGrid::TimeGrid(double lo, double hi, int n) : t_min(lo), t_max(hi), count(n) {
    if (!(t_min > 0.0 && t_min < t_max && count >= 2))
        throw std::domain_error("TimeGrid: need 0 < t_min < t_max, count >= 2");
}

std::vector<double> TimeGrid::nodes() const {
    return logspace(t_min, t_max, count);
}

std::vector<double> logspace(double lo, double hi, int n) {
    if (!(lo > 0.0 && lo < hi && n >= 2))
        throw std::domain_error("logspace: need 0 < lo < hi, n >= 2");
    std::vector<double> out(n);
    const double la = std::log(lo), lb = std::log(hi);
    for (int i = 0; i < n; ++i)
        out[i] = std::exp(la + (lb - la) * i / (n - 1.0));
    out.front() = lo;
    out.back() = hi;
    return out;
}

} // namespace exobessel
