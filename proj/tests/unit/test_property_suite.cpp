#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "property_suite.hpp"

using namespace symprod;
using oracle::load;

namespace {

void check_all(const std::vector<suite::PropertyResult>& results) {
    REQUIRE_FALSE(results.empty());
    for (const auto& r : results) {
        CAPTURE(r.group);
        CAPTURE(r.name);
        CAPTURE(r.first_failure);
        CHECK(r.ok());
    }
}

}  // namespace

TEST_CASE("generators are reproducible") {
    auto k3 = load("k3");
    suite::Rng a(7), b(7);
    for (int i = 0; i < 20; ++i) {
        CHECK(suite::random_permutation(5, a) == suite::random_permutation(5, b));
        CHECK(suite::random_element(k3, 3, a) == suite::random_element(k3, 3, b));
    }
    auto t = suite::random_sector_term(k3, Permutation::parse("(1 2)", 3), a);
    CHECK(t.sigma == Permutation::parse("(1 2)", 3));
    CHECK(t.tensor.terms().size() == 1);
}

TEST_CASE("total ring basis size") {
    // A2, n = 2: 4 identity tensors plus 2 on the transposition.
    CHECK(suite::total_ring_basis(load("a2"), 2).size() == 6);
    // n = 3: 8 + 3 * 4 + 2 * 2.
    CHECK(suite::total_ring_basis(load("a2"), 3).size() == 24);
}

TEST_CASE("every property holds") {
    suite::Options options;
    options.iters = 25;
    for (const char* name : {"a2", "k3", "abelian_surface", "p2"}) {
        for (int n : {1, 2, 3}) {
            CAPTURE(name);
            CAPTURE(n);
            options.n = n;
            check_all(suite::run_all(load(name), options));
        }
    }
    options.n = 2;
    check_all(suite::run_all(load("k3", true), options));
}

TEST_CASE("failures are recorded once with a description") {
    suite::PropertyResult r("group", "name");
    r.record(true, [] { return std::string("unused"); });
    r.record(false, [] { return std::string("first"); });
    r.record(false, [] { return std::string("second"); });
    CHECK(r.passed == 1);
    CHECK(r.failed == 2);
    CHECK(r.first_failure == "first");
    CHECK_FALSE(r.ok());
    auto text = suite::render({r});
    CHECK(text.find("FAIL") != std::string::npos);
    CHECK(text.find("first") != std::string::npos);
}
