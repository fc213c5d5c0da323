#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "symprod/errors.hpp"
#include "symprod/expression.hpp"

using namespace symprod;
using oracle::load;

namespace {

std::size_t error_position(const char* text, const AlgebraPtr& alg, int n) {
    try {
        parse_ring_element(text, alg, n);
    } catch (const ExpressionError& e) {
        return e.position();
    }
    FAIL("expected an ExpressionError for " << text);
    return 0;
}

}  // namespace

TEST_CASE("parse single terms") {
    auto a2 = load("a2");
    auto t = parse_ring_element("1 * x@1 (x) 1@2 ; id", a2, 2);
    CHECK(t.coefficient(Permutation::identity(2), {1, 0}) == 1);
    CHECK(t.term_count() == 1);

    auto s = parse_ring_element("1 * x@1 ; (1 2)", a2, 2);
    CHECK(s.coefficient(Permutation::parse("(1 2)", 2), {1}) == 1);

    // @2 names the same block as @1 under (1 2).
    CHECK(parse_ring_element("x@2 ; (1 2)", a2, 2) == s);
    CHECK(parse_ring_element("-3/4*x@1;(1 2)", a2, 2).coefficient(Permutation::parse("(1 2)", 2), {1}) ==
          make_scalar(-3, 4));
}

TEST_CASE("sums and cancellation") {
    auto a2 = load("a2");
    auto t = parse_ring_element("x@1 (x) 1@2 ; id + 2*1@1 ; (1 2) - x@1 (x) 1@2 ; id", a2, 2);
    CHECK(t.term_count() == 1);
    CHECK(parse_ring_element("x@1 ; (1 2) - x@1 ; (1 2)", a2, 2).is_zero());
}

TEST_CASE("factor order is canonicalized with Koszul signs") {
    auto a2 = load("a2");
    CHECK(parse_ring_element("1@2 (x) x@1 ; id", a2, 2) == parse_ring_element("x@1 (x) 1@2 ; id", a2, 2));
    auto ab = load("abelian_surface");
    CHECK(parse_ring_element("a2@2 (x) a1@1 ; id", ab, 2) == parse_ring_element("-1*a1@1 (x) a2@2 ; id", ab, 2));
}

TEST_CASE("errors carry positions") {
    auto a2 = load("a2");
    CHECK(error_position("", a2, 2) == 0);
    CHECK(error_position("x@1 (x) x@2", a2, 2) == 11);
    CHECK(error_position("x@1 (x) y@2 ; id", a2, 2) == 8);
    CHECK(error_position("x@1 (x) x@1 ; id", a2, 2) == 8);
    CHECK(error_position("x@1 ; id", a2, 2) > 0);
    CHECK(error_position("x@3 ; (1 2)", a2, 2) == 2);
    CHECK(error_position("x@1 ; (1 2 3)", a2, 2) == 11);
    CHECK(error_position("x@1 ; (1 2", a2, 2) >= 6);
    CHECK(error_position("x@1 (x) 1@2 ; (1 2)", a2, 2) == 8);
    CHECK(error_position("a*x@1 ; (1 2)", a2, 2) == 0);
    CHECK_THROWS_AS(parse_ring_element("x@1 ; id", a2, 0), ExpressionError);
}

TEST_CASE("format round trip") {
    auto k3 = load("k3");
    auto a2 = load("a2");
    auto t = parse_ring_element("x@1 (x) 1@2 ; id + 1@1 (x) x@2 ; id", a2, 2);
    CHECK(format_ring_element(t) == "1*1@1 (x) x@2 ; id + 1*x@1 (x) 1@2 ; id");
    CHECK(format_ring_element(RingElement(a2, 2)) == "0");
    auto u = parse_ring_element("-1/2*a1@1 (x) 1@3 ; (1 2) + pt@2 ; (1 2 3)", k3, 3);
    CHECK(format_ring_element(u) == "-1/2*a1@1 (x) 1@3 ; (1 2) + 1*pt@1 ; (1 2 3)");
    CHECK(parse_ring_element(format_ring_element(u), k3, 3) == u);
    auto v = parse_ring_element("1@1 ; (1 2) - 2*a1@1 ; (1 2)", k3, 2);
    CHECK(format_ring_element(v) == "1*1@1 ; (1 2) - 2*a1@1 ; (1 2)");
    CHECK(parse_ring_element(format_ring_element(v), k3, 2) == v);
}
