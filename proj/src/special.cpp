#include "exobessel/special.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace exobessel {

namespace {

constexpr double kPi = std::numbers::pi;

// Lanczos coefficients, g = 7, n = 9.
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

bool is_nonpositive_integer(double x) {
    return x <= 0.0 && x == std::floor(x);
}

double lanczos_gamma_positive(double x) {
    // valid for x >= 0.5
    const double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i)
        a += kLanczos[i] / (z + i);
    const double t = z + 7.5;
    return std::sqrt(2.0 * kPi) * std::pow(t, z + 0.5) * std::exp(-t) * a;
}

struct SeriesSum {
    double sum;       // renormalized partial sum
    double log_scale; // log of the renormalization factor taken out
    bool degraded;
};

// S = sum_n t_n with t_0 = 1, t_{n+1} = t_n (w/2)^2 / ((n+1)(n+mu+1)).
// I_mu(w) = (w/2)^mu / Gamma(mu+1) * S. All terms positive: no cancellation.
SeriesSum bessel_series_sum(double mu, double w) {
    const double q = 0.25 * w * w;
    double term = 1.0, sum = 1.0, log_scale = 0.0;
    bool degraded = true;
    for (int n = 0; n < 200; ++n) {
        term *= q / ((n + 1.0) * (n + mu + 1.0));
        sum += term;
        if (term < 1e-17 * sum) {
            degraded = false;
            break;
        }
        if (sum > 1e280) {
            sum *= 1e-280;
            term *= 1e-280;
            log_scale += 280.0 * std::numbers::ln10;
        }
    }
    return {sum, log_scale, degraded};
}

// A = sum_k t_k with t_0 = 1, t_k = t_{k-1} ((2k-1)^2 - 4 mu^2) / (8 w k);
// I_mu(w) = e^w / sqrt(2 pi w) * A, summed to optimal truncation.
double bessel_asymptotic_sum(double mu, double w) {
    const double m4 = 4.0 * mu * mu;
    double term = 1.0, sum = 1.0, prev = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double d = 2.0 * k - 1.0;
        term *= (d * d - m4) / (8.0 * w * k);
        if (std::abs(term) >= std::abs(prev)) // divergence onset
            break;
        sum += term;
        prev = term;
        if (std::abs(term) < 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

} // namespace

double gamma_real(double x) {
    if (std::isnan(x) || is_nonpositive_integer(x))
        throw std::domain_error("gamma_real: pole at non-positive integer");
    if (x >= 0.5)
        return lanczos_gamma_positive(x);
    // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
    return kPi / (std::sin(kPi * x) * lanczos_gamma_positive(1.0 - x));
}

double lgamma_real(double x) {
    if (!(x > 0.0))
        throw std::domain_error("lgamma_real: need x > 0");
    if (x < 150.0)
        return std::log(gamma_real(x));
    return std::lgamma(x);
}

BesselEval bessel_i(const Order& mu_ord, double w) {
    const double mu = mu_ord.value();
    if (!(w > 0.0))
        throw std::domain_error("bessel_i: need w > 0");

    const double w_star = 30.0 + 2.0 * std::abs(mu);
    BesselEval out{};
    if (w < w_star) {
        out.regime = BesselRegime::series;
        const SeriesSum s = bessel_series_sum(mu, w);
        out.degraded = s.degraded;
        const double log_prefix = mu * std::log(0.5 * w) - lgamma_real(mu + 1.0);
        if (s.log_scale == 0.0 && std::abs(log_prefix) < 650.0 && w < 650.0) {
            out.value = std::exp(log_prefix) * s.sum;
            out.scaled_value = out.value * std::exp(-w);
        } else {
            const double lv = log_prefix + std::log(s.sum) + s.log_scale;
            out.value = std::exp(lv);
            out.scaled_value = std::exp(lv - w);
        }
    } else {
        out.regime = BesselRegime::asymptotic;
        const double a = bessel_asymptotic_sum(mu, w);
        out.scaled_value = a / std::sqrt(2.0 * kPi * w);
        out.value = out.scaled_value * std::exp(w);
    }
    if (std::isinf(out.value))
        out.overflowed = true;
    return out;
}

double scaled_ratio(const Order& mu_ord, double w) {
    const double mu = mu_ord.value();
    if (w < 0.0)
        throw std::domain_error("scaled_ratio: need w >= 0");
    const double w_star = 30.0 + 2.0 * std::abs(mu);
    if (w < w_star) {
        const SeriesSum s = bessel_series_sum(mu, w);
        return std::exp(-mu * std::numbers::ln2 - lgamma_real(mu + 1.0) + s.log_scale) * s.sum;
    }
    const double a = bessel_asymptotic_sum(mu, w);
    return std::exp(w - mu * std::log(w)) * a / std::sqrt(2.0 * kPi * w);
}

double scaled_ratio_exp(const Order& mu_ord, double w) {
    const double mu = mu_ord.value();
    if (w < 0.0)
        throw std::domain_error("scaled_ratio_exp: need w >= 0");
    const double w_star = 30.0 + 2.0 * std::abs(mu);
    if (w < w_star) {
        const SeriesSum s = bessel_series_sum(mu, w);
        const double lg = -mu * std::numbers::ln2 - lgamma_real(mu + 1.0) + s.log_scale - w;
        return std::exp(lg) * s.sum;
    }
    const double a = bessel_asymptotic_sum(mu, w);
    return std::exp(-mu * std::log(w)) * a / std::sqrt(2.0 * kPi * w);
}

double scaled_ratio_exp_diff(const Order& mu_ord, double w) {
    const double mu = mu_ord.value();
    if (w < 0.0)
        throw std::domain_error("scaled_ratio_exp_diff: need w >= 0");
    const double w_star = 30.0 + 2.0 * std::abs(mu) + 2.0;
    if (w < w_star) {
        // cancellation is at most ~ w / (mu + 1/2) ~ 1e2 here: direct difference
        return scaled_ratio_exp(mu_ord, w) - w * scaled_ratio_exp(Order(mu + 1.0), w);
    }
    // termwise difference of the two asymptotic expansions; the k = 0 terms
    // cancel exactly and the k = 1 difference is (2 mu + 1) / (2w)
    const double m4a = 4.0 * mu * mu;
    const double m4b = 4.0 * (mu + 1.0) * (mu + 1.0);
    double ta = 1.0, tb = 1.0, sum = 0.0, prev_mag = 1e300;
    for (int k = 1; k < 200; ++k) {
        const double d = 2.0 * k - 1.0;
        ta *= (d * d - m4a) / (8.0 * w * k);
        tb *= (d * d - m4b) / (8.0 * w * k);
        const double diff = ta - tb;
        if (std::abs(diff) >= prev_mag)
            break;
        sum += diff;
        prev_mag = std::abs(diff);
        if (std::abs(diff) < 1e-17 * std::abs(sum) && k > 2)
            break;
    }
    return std::exp(-mu * std::log(w)) * sum / std::sqrt(2.0 * kPi * w);
}

double scaled_ratio_minus_limit(const Order& mu_ord, double w) {
    const double mu = mu_ord.value();
    if (w < 0.0)
        throw std::domain_error("scaled_ratio_minus_limit: need w >= 0");
    const double w_star = 30.0 + 2.0 * std::abs(mu);
    if (w >= w_star) // ratio ~ e^w / poly, no cancellation against the limit
        return scaled_ratio(mu_ord, w) -
               std::exp(-mu * std::numbers::ln2 - lgamma_real(mu + 1.0));
    // 2^{-mu}/Gamma(mu+1) * (S - 1) with the series summed from n = 1
    const double q = 0.25 * w * w;
    double term = 1.0, sum = 0.0;
    for (int n = 0; n < 200; ++n) {
        term *= q / ((n + 1.0) * (n + mu + 1.0));
        sum += term;
        if (term < 1e-17 * (sum + 1e-300))
            break;
    }
    return std::exp(-mu * std::numbers::ln2 - lgamma_real(mu + 1.0)) * sum;
}

double dilog_real(double x) {
    // series on [-0.5, 0.5], functional equations elsewhere
    if (x > 1.0) {
        const double lx = std::log(x);
        return kPi * kPi / 3.0 - 0.5 * lx * lx - dilog_real(1.0 / x);
    }
    if (x == 1.0)
        return kPi * kPi / 6.0;
    if (x > 0.5) {
        const double l1 = std::log(x), l2 = std::log1p(-x);
        return kPi * kPi / 6.0 - l1 * l2 - dilog_real(1.0 - x);
    }
    if (x < -0.5) {
        // Li2(x) = -Li2(x/(x-1)) - log^2(1-x)/2
        const double l = std::log1p(-x);
        return -dilog_real(x / (x - 1.0)) - 0.5 * l * l;
    }
    double sum = 0.0, pw = 1.0;
    for (int k = 1; k < 80; ++k) {
        pw *= x;
        const double t = pw / (static_cast<double>(k) * k);
        sum += t;
        if (std::abs(t) < 1e-17 * std::abs(sum))
            break;
    }
    return sum;
}

} // namespace exobessel
