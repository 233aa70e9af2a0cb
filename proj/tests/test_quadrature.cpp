#include <doctest.h>

#include "exobessel/errors.hpp"
#include "exobessel/quadrature.hpp"

#include <cmath>
#include <numbers>

using namespace exobessel;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("finite interval") {
    const auto r = integrate([](double x) { return std::sin(x); }, 0.0, kPi);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(r.converged);
}

TEST_CASE("integrable endpoint singularity") {
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-12;
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, cfg);
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("interior log singularity with split") {
    const auto r = integrate_split(
        [](double x) { return x == 0.5 ? 0.0 : std::log(std::abs(x - 0.5)); }, 0.0, 1.0,
        {0.5});
    // int_0^1 log|x-1/2| dx = log(1/2) - 1
    CHECK(r.value == doctest::Approx(std::log(0.5) - 1.0).epsilon(1e-9));
}

TEST_CASE("semi-infinite Gaussian tail") {
    const auto r = integrate_to_inf([](double x) { return std::exp(-x * x); }, 0.0);
    CHECK(r.value == doctest::Approx(0.5 * std::sqrt(kPi)).epsilon(1e-12));
}

TEST_CASE("semi-infinite slow power decay") {
    const auto r = integrate_to_inf([](double x) { return 1.0 / (x * x); }, 1.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("principal value of odd singularity vanishes on symmetric window") {
    const double v =
        pv_integrate([](double y) { return 1.0 / (y - 2.0); }, 1.0, 3.0, 2.0);
    CHECK(std::abs(v) < 1e-8);
}

TEST_CASE("principal value with smooth numerator") {
    // pv int_1^3 e^y/(y-2) dy = int_0^1 (e^{2+u}-e^{2-u})/u du, 30-digit reference
    const double v =
        pv_integrate([](double y) { return std::exp(y) / (y - 2.0); }, 1.0, 3.0, 2.0);
    CHECK(v == doctest::Approx(15.6241720575895911784).epsilon(1e-7));
}

TEST_CASE("principal value on asymmetric window") {
    // pv int_{1/2}^{4} dy/(y-1) = log(3) - log(1/2)
    const double v =
        pv_integrate([](double y) { return 1.0 / (y - 1.0); }, 0.5, 4.0, 1.0);
    CHECK(v == doctest::Approx(std::log(3.0) + std::log(2.0)).epsilon(1e-8));
}

TEST_CASE("pv rejects singular point outside interval") {
    CHECK_THROWS_AS(pv_integrate([](double) { return 1.0; }, 0.0, 1.0, 2.0),
                    std::domain_error);
}
