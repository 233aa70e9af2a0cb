#ifndef EXOBESSEL_SPECIAL_HPP
#define EXOBESSEL_SPECIAL_HPP

#include <cmath>
#include <stdexcept>

namespace exobessel {

// Order of a modified Bessel function. Construction rejects mu <= -1.
class Order {
public:
    explicit Order(double mu) : mu_(mu) {
        if (!(mu > -1.0))
            throw std::domain_error("Order: need mu > -1");
    }
    double value() const { return mu_; }

private:
    double mu_;
};

enum class BesselRegime { series, asymptotic };

// One evaluation of I_mu(w). `scaled_value` is e^{-w} I_mu(w) and is always
// finite; `value` may have overflowed to +inf, in which case `overflowed` is
// set. `degraded` marks series truncation at the 200-term cap.
struct BesselEval {
    double value;
    double scaled_value;
    BesselRegime regime;
    bool overflowed = false;
    bool degraded = false;
};

// Real-argument Gamma function, Lanczos approximation.
// Rejects non-positive integers.
double gamma_real(double x);

// log Gamma for x > 0.
double lgamma_real(double x);

// Modified Bessel function I_mu(w), w > 0. Power series below the regime
// switch w* = 30 + 2|mu|, large-argument expansion above it.
BesselEval bessel_i(const Order& mu, double w);

// w^{-mu} I_mu(w), continuous at w = 0 with value 1 / (2^mu Gamma(mu+1)).
double scaled_ratio(const Order& mu, double w);

// e^{-w} w^{-mu} I_mu(w); the form every kernel consumes. Bounded for all
// w >= 0 when mu >= -1/2 and growing only polynomially otherwise.
double scaled_ratio_exp(const Order& mu, double w);

// e^{-w} w^{-mu} (I_mu(w) - I_{mu+1}(w)). The direct difference of the two
// scaled values loses all digits for large w (the kernels' time and space
// derivatives hinge on it), so the asymptotic regime sums the termwise
// difference of the two expansions.
double scaled_ratio_exp_diff(const Order& mu, double w);

// w^{-mu} I_mu(w) - 1/(2^mu Gamma(mu+1)), cancellation-free near w = 0 (the
// compensated potential's tail decays through this difference).
double scaled_ratio_minus_limit(const Order& mu, double w);

// Real dilogarithm Li_2(x) for x <= 1, and its real part for x > 1.
// Antiderivative building block: d/dx [-dilog_real(x)] = log|1-x| / x.
double dilog_real(double x);

} // namespace exobessel

#endif
