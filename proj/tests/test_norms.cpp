#include <doctest.h>

#include "exobessel/norms.hpp"
#include "exobessel/quadrature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

using namespace exobessel;

TEST_CASE("lp norm of indicators, closed form") {
    const GridFunction f = GridFunction::indicator(1.0, 2.0);
    CHECK(lp_norm(f, 1.0, 0.0).value == doctest::Approx(1.0).epsilon(1e-14));
    // ((2^{d+1}-1)/(d+1))^{1/p}
    for (double p : {1.0, 2.0, 3.5})
        for (double d : {-0.5, 0.0, 1.0, 2.0}) {
            const double want =
                std::pow((std::pow(2.0, d + 1.0) - 1.0) / (d + 1.0), 1.0 / p);
            CHECK(lp_norm(f, p, d).value == doctest::Approx(want).epsilon(1e-13));
        }
    CHECK(lp_norm(f.scaled(0.0), 2.0, 0.0).value == 0.0);
}

TEST_CASE("lp norm at p = inf ignores the weight") {
    const GridFunction f({1.0, 2.0, 3.0}, {0.5, -3.0, 1.0}, Interp::linear);
    CHECK(lp_norm(f, std::numeric_limits<double>::infinity(), 7.0).value ==
          doctest::Approx(3.0));
}

TEST_CASE("exactness: closed-form vs numeric quadrature path on indicators") {
    // the piecewise-constant closed form against the same data forced through
    // the generic (linear) path
    const GridFunction pc = GridFunction::indicator(1.0, 2.0);
    const GridFunction lin({1.0, 1.9999999999, 2.0}, {1.0, 1.0, 0.0}, Interp::linear);
    for (double p : {1.0, 2.0})
        for (double d : {0.0, 1.5}) {
            CHECK(lp_norm(pc, p, d).value ==
                  doctest::Approx(lp_norm(lin, p, d).value).epsilon(1e-9));
        }
    CHECK(lp_norm(pc, 2.0, 1.0).value ==
          doctest::Approx(std::sqrt(1.5)).epsilon(1e-12));
}

TEST_CASE("weak quasinorm: chebyshev and indicator identities") {
    const GridFunction f = GridFunction::indicator(1.0, 2.0);
    for (double p : {1.0, 2.0, 3.0})
        for (double d : {0.0, 1.0}) {
            const double weak = weak_lp_quasinorm(f, p, d).value;
            const double strong = lp_norm(f, p, d).value;
            CHECK(weak <= strong * (1.0 + 1e-12));
            // for an indicator the two coincide
            CHECK(weak == doctest::Approx(strong).epsilon(1e-12));
        }
}

TEST_CASE("weak quasinorm homogeneity") {
    const GridFunction f({1.0, 2.0, 3.0}, {1.0, 3.0, 0.5}, Interp::linear);
    const double a = weak_lp_quasinorm(f, 2.0, 0.5).value;
    const double b = weak_lp_quasinorm(f.scaled(7.0), 2.0, 0.5).value;
    CHECK(b == doctest::Approx(7.0 * a).epsilon(1e-9));
}

TEST_CASE("weak quasinorm of the x^-2 tail: boundary delta = 2p-1 is finite") {
    // f = x^{-2} on (2, X); quasinorm at delta = 2p-1 stays bounded in X,
    // diverges for delta > 2p-1
    const double p = 2.0;
    double prev_boundary = 0.0, prev_diverge = 0.0;
    double last_boundary_ratio = 0.0, last_diverge_ratio = 0.0;
    for (double X : {50.0, 200.0, 800.0}) {
        const GridFunction f = GridFunction::power(2.0, X, -2.0, 1.0, 257);
        const double qb = weak_lp_quasinorm(f, p, 2.0 * p - 1.0).value;
        const double qd = weak_lp_quasinorm(f, p, 2.0 * p - 1.0 + 1.0).value;
        if (prev_boundary > 0.0) {
            last_boundary_ratio = qb / prev_boundary;
            last_diverge_ratio = qd / prev_diverge;
        }
        prev_boundary = qb;
        prev_diverge = qd;
    }
    CHECK(last_boundary_ratio < 1.05);
    CHECK(last_diverge_ratio > 1.5);
}

TEST_CASE("divergence flag from the tail power fit") {
    GridFunction f = GridFunction::power(2.0, 1e4, -2.0, 1.0, 257);
    f.support_hint = {2.0, std::numeric_limits<double>::infinity()};
    CHECK(lp_norm(f, 2.0, 4.0).flag == NormFlag::divergent);
    CHECK(lp_norm(f, 2.0, 0.0).flag == NormFlag::finite);
    CHECK(lp_norm(f, 2.0, 3.0).flag == NormFlag::inconclusive); // exactly critical
    GridFunction g = GridFunction::indicator(1.0, 2.0);
    CHECK(lp_norm(g, 2.0, 9.0).flag == NormFlag::finite);
}

TEST_CASE("lorentz p1 norm") {
    const GridFunction f = GridFunction::indicator(1.0, 2.0);
    for (double p : {1.0, 2.0, 3.0})
        for (double d : {0.0, 1.0}) {
            // indicator: lorentz = measure(E)^{1/p} = lp norm
            const double want = lp_norm(f, p, d).value;
            CHECK(lorentz_p1_norm(f, p, d).value ==
                  doctest::Approx(want).epsilon(1e-12));
        }
    CHECK(lorentz_p1_norm(f.scaled(0.0), 2.0, 0.0).value == 0.0);
}

TEST_CASE("lorentz scale ordering for p > 1") {
    const GridFunction f({1.0, 2.0, 3.0, 4.0}, {0.3, 2.0, 1.0, 0.1}, Interp::linear);
    for (double p : {1.5, 2.0, 4.0}) {
        const double l1 = lorentz_p1_norm(f, p, 0.5).value;
        const double lp = lp_norm(f, p, 0.5).value;
        const double wk = weak_lp_quasinorm(f, p, 0.5).value;
        CHECK(l1 >= lp * (1.0 - 1e-9));
        CHECK(lp >= wk * (1.0 - 1e-9));
    }
}

TEST_CASE("monotonicity in f") {
    const GridFunction f({1.0, 2.0, 3.0}, {1.0, 2.0, 1.0}, Interp::linear);
    const GridFunction g({1.0, 2.0, 3.0}, {2.0, 2.5, 1.5}, Interp::linear);
    for (double p : {1.0, 2.5}) {
        CHECK(lp_norm(f, p, 0.7).value <= lp_norm(g, p, 0.7).value);
        CHECK(weak_lp_quasinorm(f, p, 0.7).value <=
              weak_lp_quasinorm(g, p, 0.7).value * (1.0 + 1e-9));
        CHECK(lorentz_p1_norm(f, p, 0.7).value <=
              lorentz_p1_norm(g, p, 0.7).value * (1.0 + 1e-9));
    }
}

TEST_CASE("flavor parsing and dispatch") {
    const GridFunction f = GridFunction::indicator(1.0, 2.0);
    CHECK(compute_norm(f, 2.0, 0.0, norm_flavor_from_string("strong")).value ==
          doctest::Approx(1.0));
    CHECK(compute_norm(f, 2.0, 0.0, norm_flavor_from_string("weak")).value ==
          doctest::Approx(1.0));
    CHECK(compute_norm(f, 2.0, 0.0, norm_flavor_from_string("p1")).value ==
          doctest::Approx(1.0));
    CHECK_THROWS_AS(norm_flavor_from_string("x"), std::domain_error);
    CHECK_THROWS_AS(lp_norm(f, 0.5, 0.0), std::domain_error);
}

TEST_CASE("indicator norms: closed form vs raw quadrature to 1e-12") {
    const GridFunction f = GridFunction::indicator(1.0, 2.0);
    QuadratureConfig cfg;
    cfg.abs_tol = 1e-15;
    cfg.rel_tol = 1e-14;
    for (double p : {1.0, 2.0, 3.5})
        for (double d : {-0.5, 0.0, 2.0}) {
            const double numeric = std::pow(
                integrate([&](double y) { return std::pow(std::abs(f(y)), p) *
                                                 std::pow(y, d); },
                          1.0, 2.0, cfg)
                    .value,
                1.0 / p);
            CHECK(lp_norm(f, p, d).value ==
                  doctest::Approx(numeric).epsilon(1e-12));
        }
}
