#include <doctest.h>

#include "exobessel/sharpness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

using namespace exobessel;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("heat maximal verdict examples") {
    CHECK(classify(TheoremId::MaxWexo, -0.5, 2.0, 0.0).strong == Tri::holds);
    const Verdict v = classify(TheoremId::MaxWexo, 0.5, 2.0, 3.0);
    CHECK(v.strong == Tri::fails);
    CHECK(v.weak == Tri::fails);
    CHECK(v.rwt == Tri::holds);
    // weak holds at the lower boundary for p > 1 in the exotic case
    CHECK(classify(TheoremId::MaxWexo, 0.5, 2.0, 1.0).weak == Tri::holds);
    CHECK(classify(TheoremId::MaxWexo, 0.5, 2.0, 1.0).strong == Tri::fails);
    // classical: left boundary is excluded for every flavor
    CHECK(classify(TheoremId::MaxWcls, 0.5, 2.0, -1.0).rwt == Tri::fails);
    CHECK(classify(TheoremId::MaxWcls, 0.5, 2.0, 5.0).rwt == Tri::holds);
    CHECK(classify(TheoremId::MaxWcls, 0.5, 2.0, 5.0).weak == Tri::fails);
    // p = 1 weakening of the upper bound
    CHECK(classify(TheoremId::MaxWcls, 0.5, 1.0, 2.0).weak == Tri::holds);
    CHECK(classify(TheoremId::MaxWcls, 0.5, 1.0, 2.0).strong == Tri::fails);
}

TEST_CASE("g-function verdicts and the open endpoint") {
    const Verdict v = classify(TheoremId::Gexo, 0.5, 2.0, 1.0); // delta = 2nu p - 1
    CHECK(v.weak == Tri::open);
    CHECK(v.strong == Tri::fails);
    CHECK(v.rwt == Tri::holds);
    // interior / exterior cells are definite
    CHECK(classify(TheoremId::Gexo, 0.5, 2.0, 2.0).weak == Tri::holds);
    CHECK(classify(TheoremId::Gexo, 0.5, 2.0, 0.0).weak == Tri::fails);
    // at p = 1 both endpoints weaken instead
    CHECK(classify(TheoremId::Gexo, 0.5, 1.0, 0.0).weak == Tri::holds);
}

TEST_CASE("riesz verdict examples") {
    // Rexob at nu = 1/2: both rwt inequalities strictened
    CHECK(classify(TheoremId::Rexob, 0.5, 1.0, 0.0).rwt == Tri::holds);
    CHECK(classify(TheoremId::Rexob, 0.5, 1.0, 1.0).rwt == Tri::fails);
    CHECK(classify(TheoremId::Rexob, 0.5, 1.0, -1.0).rwt == Tri::fails);
    // but not strictened for nu > 1/2
    CHECK(classify(TheoremId::Rexob, 0.75, 1.0, 1.0).rwt == Tri::holds);
    // Rexo at nu = -1/2: first rwt inequality strictened
    CHECK(classify(TheoremId::Rexo, -0.5, 2.0, -1.0).rwt == Tri::fails);
    CHECK(classify(TheoremId::Rexo, -0.25, 2.0, 0.0).rwt == Tri::holds);
    // classical Riesz lower boundary -1-p participates in rwt
    CHECK(classify(TheoremId::Rcls, 0.5, 2.0, -3.0).rwt == Tri::holds);
    CHECK(classify(TheoremId::Rcls, 0.5, 2.0, -3.0).weak == Tri::fails);
}

TEST_CASE("hardy verdicts") {
    // H0: strong iff delta < (xi+1)p - 1, including p = 1
    CHECK(classify(TheoremId::H0, 1.0, 1.0, 0.5).strong == Tri::holds);
    CHECK(classify(TheoremId::H0, 1.0, 1.0, 1.0).strong == Tri::fails);
    CHECK(classify(TheoremId::H0, 1.0, 1.0, 1.0).weak == Tri::holds); // p=1, xi != -1
    CHECK(classify(TheoremId::H0, -1.0, 1.0, -1.0).rwt == Tri::fails); // strictened
    CHECK(classify(TheoremId::H0, 0.0, 2.0, 1.0).rwt == Tri::holds);
    CHECK(classify(TheoremId::Hinf, 0.0, 2.0, -1.0).rwt == Tri::fails); // strictened
    CHECK(classify(TheoremId::Hinf, 1.0, 2.0, -3.0).rwt == Tri::holds);
    // log variants: one cut line for all flavors
    CHECK(classify(TheoremId::Hlog0, 1.0, 2.0, 2.9).strong == Tri::holds);
    CHECK(classify(TheoremId::Hlog0, 1.0, 2.0, 3.0).rwt == Tri::fails);
    CHECK(classify(TheoremId::HlogInf, -1.0, 2.0, 1.0).rwt == Tri::fails);
    CHECK(classify(TheoremId::HlogInf, -1.0, 2.0, 1.1).strong == Tri::holds);
}

TEST_CASE("p = infinity clauses") {
    CHECK(classify(TheoremId::MaxWcls, 0.5, kInf, 0.0).strong == Tri::holds);
    CHECK(classify(TheoremId::MaxWexo, -0.5, kInf, 0.0).strong == Tri::holds);
    CHECK(classify(TheoremId::MaxWexo, 0.5, kInf, 0.0).strong == Tri::fails);
    CHECK(classify(TheoremId::PoissonExo, 0.5, kInf, 0.0).strong == Tri::fails);
    CHECK(classify(TheoremId::H0, 0.5, kInf, 0.0).strong == Tri::holds);
    CHECK(classify(TheoremId::H0, -1.5, kInf, 0.0).strong == Tri::fails);
    CHECK(classify(TheoremId::Hinf, 0.5, kInf, 0.0).strong == Tri::holds);
    CHECK(classify(TheoremId::Hinf, -0.5, kInf, 0.0).strong == Tri::fails);
    CHECK_THROWS_AS(classify(TheoremId::Gexo, 0.5, kInf, 0.0), std::domain_error);
    CHECK_THROWS_AS(classify(TheoremId::Rcls, 0.5, kInf, 0.0), std::domain_error);
}

TEST_CASE("validity ranges") {
    CHECK_THROWS_AS(classify(TheoremId::MaxWcls, -1.0, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(classify(TheoremId::MaxWexo, 1.0, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(classify(TheoremId::Rexo, 0.0, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(classify(TheoremId::Rexo, 0.5, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(classify(TheoremId::Rexob, 0.25, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(classify(TheoremId::MaxWexo, 0.5, 0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(classify(TheoremId::PotExo, 0.5, 2.0, 0.0), std::domain_error);
    CHECK_THROWS_AS(classify(TheoremId::PotExo, 0.5, 2.0, 0.0, 0.8), std::domain_error);
    CHECK_NOTHROW(classify(TheoremId::PotExo, 0.5, 2.0, 0.0, 0.25));
}

TEST_CASE("exotic and classical settings coincide at nu = 0") {
    for (double p : {1.0, 1.5, 3.0})
        for (double d : {-1.5, -1.0, 0.0, 1.0, 2.0, 2.0 * p - 1.0}) {
            const Verdict e = classify(TheoremId::MaxWexo, 0.0, p, d);
            const Verdict c = classify(TheoremId::MaxWcls, 0.0, p, d);
            CHECK(e.strong == c.strong);
            CHECK(e.weak == c.weak);
            CHECK(e.rwt == c.rwt);
        }
}

TEST_CASE("scan_region shapes and degenerate ranges") {
    const auto cells =
        scan_region(TheoremId::MaxWexo, -0.5, {1.0, 2.0, 0.5}, {-2.0, 2.0, 1.0});
    CHECK(cells.size() == 15); // 3 x 5
    const auto row = scan_region(TheoremId::MaxWexo, -0.5, {2.0, 2.0, 1.0},
                                 {-2.0, 2.0, 1.0});
    CHECK(row.size() == 5);
    const std::string csv = region_csv(cells);
    CHECK(csv.substr(0, 24) == "p,delta,strong,weak,rwt\n");
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
}

TEST_CASE("range parsing") {
    const RangeSpec r = parse_range("1:4:0.5");
    CHECK(r.values().size() == 7);
    CHECK(r.values().front() == 1.0);
    CHECK(r.values().back() == doctest::Approx(4.0));
    CHECK_THROWS_AS(parse_range("1:4"), std::domain_error);
    CHECK_THROWS_AS(parse_range("4:1:0.5").values(), std::domain_error);
}

TEST_CASE("transference examples") {
    // strong-holds pair
    CHECK(classify(TheoremId::MaxWexo, -0.5, 2.0, 0.0).strong == Tri::holds);
    CHECK(classify(TheoremId::MaxWcls, 0.5, 2.0, 2.0).strong == Tri::holds);
    CHECK(transference_check(TransferPair::MaxW, -0.5, 2.0, 0.0));
    // strong-fails pair
    CHECK(classify(TheoremId::Gexo, 0.5, 3.0, 2.0).strong == Tri::fails);
    CHECK(classify(TheoremId::Gcls, -0.5, 3.0, -1.0).strong == Tri::fails);
    CHECK(transference_check(TransferPair::G, 0.5, 3.0, 2.0));
    // full small grid, all three pairs
    for (double nu : {-0.75, -0.5, 0.25, 0.5})
        for (double p : {1.0, 1.5, 2.0, 3.0})
            for (double d : {-2.0, -1.0, 0.0, 1.0, 3.0}) {
                CHECK(transference_check(TransferPair::MaxW, nu, p, d));
                CHECK(transference_check(TransferPair::G, nu, p, d));
                CHECK(transference_check(TransferPair::Pot, nu, p, d,
                                         0.25 * (-nu + 1.0)));
            }
}

TEST_CASE("implication chain on a sample grid") {
    for (TheoremId id : all_theorems()) {
        const double nu = (id == TheoremId::Rexob || id == TheoremId::RexobStar)
                              ? 0.75
                              : 0.25;
        const std::optional<double> sig =
            (id == TheoremId::PotCls || id == TheoremId::PotExo)
                ? std::optional<double>(0.3)
                : std::nullopt;
        for (double p : {1.0, 1.7, 2.5})
            for (double d : {-2.5, -1.0, 0.0, 0.5, 2.0, 4.0}) {
                const Verdict v = classify(id, nu, p, d, sig);
                if (v.strong == Tri::open || v.weak == Tri::open ||
                    v.rwt == Tri::open)
                    continue;
                if (v.strong == Tri::holds)
                    CHECK(v.weak == Tri::holds);
                if (v.weak == Tri::holds)
                    CHECK(v.rwt == Tri::holds);
            }
    }
}

TEST_CASE("theorem id round trip") {
    for (TheoremId id : all_theorems())
        CHECK(theorem_from_string(to_string(id)) == id);
    CHECK_THROWS_AS(theorem_from_string("bogus"), std::domain_error);
    CHECK(tri_char(Tri::holds) == '1');
    CHECK(tri_char(Tri::fails) == '0');
    CHECK(tri_char(Tri::open) == '?');
}

TEST_CASE("probe registry runs the cheap exact-operator families") {
    // the Hardy-log probes are closed-form, fast enough for a unit test
    const ProbeResult a = probe_boundary(TheoremId::Hlog0, 1.0, 2.0, 4.0,
                                         CounterexampleFamily::LogTailWeak);
    CHECK(a.status == ProbeStatus::pass);
    CHECK(a.fitted_rate > 0.1);
    const ProbeResult b = probe_boundary(TheoremId::HlogInf, -1.0, 2.0, 0.0,
                                         CounterexampleFamily::LogSmallXWeak);
    CHECK(b.status == ProbeStatus::pass);
    CHECK(!probe_registry().empty());
}
