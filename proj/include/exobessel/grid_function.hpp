#ifndef EXOBESSEL_GRID_FUNCTION_HPP
#define EXOBESSEL_GRID_FUNCTION_HPP

#include <optional>
#include <utility>
#include <vector>

namespace exobessel {

enum class Interp { piecewise_constant, linear };

// A function sampled on a strictly increasing positive grid, zero outside the
// grid extent. Piecewise-constant cells take the left node's value. The
// optional power_weight multiplies the sampled values by y^power_weight; it
// keeps transference conjugations (y^{2nu} f) inside the exact-integration
// machinery.
class GridFunction {
public:
    GridFunction(std::vector<double> abscissae, std::vector<double> values,
                 Interp interp = Interp::linear);

    static GridFunction indicator(double a, double b);
    // f(y) = coef * y^expo on (a, b), sampled on `count` log-spaced nodes,
    // linear interpolation in between.
    static GridFunction power(double a, double b, double expo, double coef,
                              int count = 129);

    double operator()(double y) const;

    const std::vector<double>& abscissae() const { return x_; }
    const std::vector<double>& values() const { return v_; }
    Interp interpolation() const { return interp_; }

    double power_weight = 0.0;
    std::optional<std::pair<double, double>> support_hint;

    double support_lo() const { return x_.front(); }
    double support_hi() const { return x_.back(); }
    bool unbounded_hint() const;

    // f(y) = (slope * y + intercept) * y^power_weight on [lo, hi]
    struct Segment {
        double lo, hi, slope, intercept;
    };
    std::vector<Segment> segments() const;

    GridFunction scaled(double c) const;

private:
    std::vector<double> x_, v_;
    Interp interp_;
};

// exact int_a^b y^s dy (log form at s = -1); a, b > 0
double power_primitive(double a, double b, double s);
// exact int_a^b y^s log y dy
double power_log_primitive(double a, double b, double s);

// exact int over [lo,hi] of f(y) y^s dy; [lo,hi] clipped to the support
double integral_power(const GridFunction& f, double lo, double hi, double s);
// exact int over [lo,hi] of f(y) y^s log y dy
double integral_power_log(const GridFunction& f, double lo, double hi, double s);
// exact int over [lo,hi] of |f(y)| y^s dy (splits cells at sign changes)
double integral_abs_power(const GridFunction& f, double lo, double hi, double s);
// int over [lo,hi] of f(y) y^s log|x-y| dy; exact (dilogarithm) for
// piecewise-constant f with power_weight 0 and s = -1, quadrature otherwise
double integral_power_log_absdiff(const GridFunction& f, double lo, double hi,
                                  double s, double x);

// measure of { y in support : |f(y)| > lambda } under x^delta dx (exact)
double superlevel_measure(const GridFunction& f, double lambda, double delta,
                          bool strict = true);

// Logarithmically spaced time grid for sup_{t>0} discretizations.
struct TimeGrid {
    double t_min = 1e-6;
    double t_max = 1e6;
    int count = 4000;

    TimeGrid() = default;
    TimeGrid(double lo, double hi, int n);
    std::vector<double> nodes() const;
    TimeGrid refined() const { return TimeGrid(t_min, t_max, 2 * count - 1); }
};

std::vector<double> logspace(double lo, double hi, int n);

} // namespace exobessel

#endif
