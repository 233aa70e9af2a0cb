#include <doctest.h>

#include "exobessel/verify.hpp"

#include <json.hpp>

using namespace exobessel;

TEST_CASE("kernels suite passes and serializes") {
    const Report r = suite_kernels();
    CHECK(r.all_pass());
    CHECK(r.checks.size() == 6);
    const auto j = nlohmann::json::parse(r.to_json());
    CHECK(j.is_array());
    CHECK(j.size() == r.checks.size());
    CHECK(j[0].contains("check"));
    CHECK(j[0].contains("observed"));
    CHECK(j[0].contains("tolerance"));
    CHECK(j[0]["pass"].is_boolean());
}

TEST_CASE("transference suite passes") {
    const Report r = suite_transference();
    CHECK(r.all_pass());
}

TEST_CASE("signs suite passes") {
    const Report r = suite_signs();
    CHECK(r.all_pass());
}

TEST_CASE("suite dispatch") {
    CHECK(suite_names().size() == 5);
    CHECK_THROWS_AS(run_suite("bogus"), std::domain_error);
    CHECK(run_suite("kernels").all_pass());
}
