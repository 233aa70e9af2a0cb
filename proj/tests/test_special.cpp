#include <doctest.h>

#include "exobessel/special.hpp"

#include <cmath>
#include <numbers>
#include <vector>

using namespace exobessel;

namespace {

constexpr double kPi = std::numbers::pi;

double rel_err(double got, double want) {
    return std::abs(got - want) / std::abs(want);
}

// independent oracle: 40-term power series in extended precision
long double bessel_series_ld(long double mu, long double w) {
    long double term = std::pow(0.5L * w, mu) / std::tgammal(mu + 1.0L);
    long double sum = term;
    const long double q = 0.25L * w * w;
    for (int n = 0; n < 40; ++n) {
        term *= q / ((n + 1.0L) * (n + mu + 1.0L));
        sum += term;
    }
    return sum;
}

std::vector<double> logspace_local(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i)
        v[i] = lo * std::pow(hi / lo, i / (n - 1.0));
    return v;
}

} // namespace

TEST_CASE("gamma_real basics") {
    CHECK(gamma_real(1.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(rel_err(gamma_real(0.5), std::sqrt(kPi)) < 1e-14);
    // 50-digit reference value
    CHECK(rel_err(gamma_real(7.3), 1271.423633663909273058) < 1e-14);
    CHECK_THROWS_AS(gamma_real(0.0), std::domain_error);
    CHECK_THROWS_AS(gamma_real(-3.0), std::domain_error);
}

TEST_CASE("gamma_real accuracy across [-0.9, 50] vs std::tgamma") {
    for (double x : logspace_local(0.11, 50.0, 120))
        CHECK(rel_err(gamma_real(x), std::tgamma(x)) < 1e-13);
    for (double x : {-0.9, -0.7, -0.5, -0.25, -0.05, 0.05, 0.3}) {
        CHECK(rel_err(gamma_real(x), std::tgamma(x)) < 1e-13);
    }
}

TEST_CASE("bessel_i half-integer closed forms") {
    // I_{1/2}(w) = sqrt(2/(pi w)) sinh w, I_{-1/2}(w) = sqrt(2/(pi w)) cosh w
    const Order half(0.5), mhalf(-0.5);
    CHECK(rel_err(bessel_i(half, 1.0).value, std::sqrt(2.0 / kPi) * std::sinh(1.0)) < 1e-13);
    CHECK(rel_err(bessel_i(mhalf, 2.0).value, std::sqrt(1.0 / kPi) * std::cosh(2.0)) < 1e-13);
    for (double w : logspace_local(1e-6, 50.0, 200)) {
        const double s = std::sqrt(2.0 / (kPi * w));
        CHECK(rel_err(bessel_i(half, w).value, s * std::sinh(w)) < 1e-12);
        CHECK(rel_err(bessel_i(mhalf, w).value, s * std::cosh(w)) < 1e-12);
    }
}

TEST_CASE("bessel_i reference values") {
    // 50-digit reference values
    CHECK(rel_err(bessel_i(Order(0.0), 2.0).value, 2.279585302336067267437) < 1e-12);
    CHECK(rel_err(bessel_i(Order(1.7), 0.5).value, 0.06275953514203790266948) < 1e-12);
    CHECK(rel_err(bessel_i(Order(2.7), 35.0).value, 96579624616109.68606616) < 1e-12);
    CHECK(bessel_i(Order(2.7), 35.0).regime == BesselRegime::series); // w* = 35.4
    CHECK(bessel_i(Order(2.7), 36.0).regime == BesselRegime::asymptotic);
}

TEST_CASE("bessel_i vs extended-precision series for moderate w") {
    for (double mu : {0.0, 0.3, 1.0, 1.7}) {
        for (double w : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 8.0}) {
            const long double want = bessel_series_ld(mu, w);
            CHECK(rel_err(bessel_i(Order(mu), w).value, static_cast<double>(want)) < 1e-10);
        }
    }
}

TEST_CASE("bessel_i regime agreement in the overlap window") {
    // both paths must agree to 1e-8 in [w*-5, w*+5]
    for (double mu : {0.0, 0.5, 1.0, 1.7}) {
        const double ws = 30.0 + 2.0 * std::abs(mu);
        for (double dw : {-5.0, -2.5, 0.0, 2.5, 5.0}) {
            const double w = ws + dw;
            // series path (sum until convergence, <= 200 terms)
            double term = std::pow(0.5 * w, mu) / gamma_real(mu + 1.0);
            double series = term;
            const double q = 0.25 * w * w;
            for (int n = 0; n < 200; ++n) {
                term *= q / ((n + 1.0) * (n + mu + 1.0));
                series += term;
                if (term < 1e-17 * series)
                    break;
            }
            const double got = bessel_i(Order(mu), w).value;
            CHECK(rel_err(got, series) < 1e-8);
        }
    }
}

TEST_CASE("bessel_i scaling identity and positivity") {
    for (double mu : {-0.9, -0.5, 0.0, 0.7, 2.0}) {
        for (double w : logspace_local(1e-3, 60.0, 25)) {
            const BesselEval e = bessel_i(Order(mu), w);
            CHECK(e.value > 0.0);
            CHECK(e.scaled_value > 0.0);
            if (!e.overflowed)
                CHECK(rel_err(e.value, e.scaled_value * std::exp(w)) < 1e-12);
        }
    }
}

TEST_CASE("bessel_i overflow returns scaled value") {
    const BesselEval e = bessel_i(Order(0.0), 800.0);
    CHECK(e.overflowed);
    CHECK(std::isinf(e.value));
    CHECK(e.scaled_value > 0.0);
    CHECK(rel_err(e.scaled_value, 1.0 / std::sqrt(2.0 * kPi * 800.0)) < 1e-3);
}

TEST_CASE("bessel_i domain errors") {
    CHECK_THROWS_AS(bessel_i(Order(0.0), 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_i(Order(0.0), -1.0), std::domain_error);
    CHECK_THROWS_AS(Order(-1.0), std::domain_error);
    CHECK_THROWS_AS(Order(-1.5), std::domain_error);
}

TEST_CASE("scaled_ratio at and near zero") {
    CHECK(scaled_ratio(Order(0.0), 0.0) == doctest::Approx(1.0).epsilon(1e-14));
    const double want_half = 1.0 / (std::sqrt(2.0) * gamma_real(1.5));
    CHECK(rel_err(scaled_ratio(Order(0.5), 0.0), want_half) < 1e-14);
    // 50-digit references: w^{-0.3} I_{0.3}(w) at w = 1e-4 and its w = 0 limit
    CHECK(rel_err(scaled_ratio(Order(0.3), 1e-4), 0.9050461494300025284622) < 1e-13);
    CHECK(rel_err(scaled_ratio(Order(0.3), 0.0), 0.9050461476895291665749) < 1e-13);
    CHECK(rel_err(scaled_ratio(Order(0.3), 1e-4), scaled_ratio(Order(0.3), 0.0)) < 1e-7);
}

TEST_CASE("scaled_ratio continuity is O(w^2)") {
    const Order mu(0.7);
    const double at0 = scaled_ratio(mu, 0.0);
    double prev_ratio = 0.0;
    for (double w : {1e-2, 1e-3, 1e-4}) {
        const double diff = std::abs(scaled_ratio(mu, w) - at0);
        const double ratio = diff / (w * w);
        if (prev_ratio != 0.0)
            CHECK(ratio == doctest::Approx(prev_ratio).epsilon(0.02));
        prev_ratio = ratio;
    }
}

TEST_CASE("order recurrence residual") {
    // (2 mu / w) I_mu = I_{mu-1} - I_{mu+1}, relative residual <= 1e-9
    for (double mu : {0.5, 1.0, 1.7}) {
        for (double w : logspace_local(1e-3, 80.0, 40)) {
            const double im = bessel_i(Order(mu), w).scaled_value;
            const double il = bessel_i(Order(mu - 1.0), w).scaled_value;
            const double ir = bessel_i(Order(mu + 1.0), w).scaled_value;
            const double resid = std::abs((2.0 * mu / w) * im - il + ir) / im;
            CHECK(resid < 1e-9);
        }
    }
}

TEST_CASE("derivative rule via central differences") {
    // d/dw (w^{-mu} I_mu) = w^{-mu} I_{mu+1}
    for (double mu : {0.0, 0.5, 1.2}) {
        for (double w : logspace_local(0.05, 20.0, 20)) {
            const double h = 1e-5 * w;
            const double fd = (scaled_ratio(Order(mu), w + h) -
                               scaled_ratio(Order(mu), w - h)) /
                              (2.0 * h);
            const double want = std::pow(w, -mu) * bessel_i(Order(mu + 1.0), w).value;
            CHECK(rel_err(fd, want) < 1e-6);
        }
    }
}

TEST_CASE("two-sided envelope") {
    // I_mu(w) ~ w^mu on (0, 1], I_mu(w) ~ w^{-1/2} e^w on [1, inf)
    for (double mu : {-0.5, 0.0, 0.8}) {
        double lo1 = 1e300, hi1 = 0.0, lo2 = 1e300, hi2 = 0.0;
        for (double w : logspace_local(1e-4, 1.0, 25)) {
            const double r = bessel_i(Order(mu), w).value / std::pow(w, mu);
            lo1 = std::min(lo1, r);
            hi1 = std::max(hi1, r);
        }
        for (double w : logspace_local(1.0, 200.0, 25)) {
            const double r = bessel_i(Order(mu), w).scaled_value * std::sqrt(w);
            lo2 = std::min(lo2, r);
            hi2 = std::max(hi2, r);
        }
        CHECK(lo1 > 0.0);
        CHECK(hi1 / lo1 < 50.0);
        CHECK(lo2 > 0.0);
        CHECK(hi2 / lo2 < 50.0);
    }
}

TEST_CASE("dilog_real known values") {
    CHECK(rel_err(dilog_real(1.0), kPi * kPi / 6.0) < 1e-14);
    CHECK(rel_err(dilog_real(-1.0), -kPi * kPi / 12.0) < 1e-14);
    CHECK(rel_err(dilog_real(0.5), kPi * kPi / 12.0 -
                                       0.5 * std::log(2.0) * std::log(2.0)) < 1e-14);
    // d/dx [-Li2](x) = log|1-x|/x, checked by finite differences on both branches
    for (double x : {0.3, 0.8, 1.5, 3.0}) {
        const double h = 1e-6;
        const double fd = -(dilog_real(x + h) - dilog_real(x - h)) / (2.0 * h);
        CHECK(rel_err(fd, std::log(std::abs(1.0 - x)) / x) < 1e-8);
    }
}
