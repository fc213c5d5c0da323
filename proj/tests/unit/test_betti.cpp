#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "oracles.hpp"
#include "symprod/betti.hpp"
#include "symprod/errors.hpp"

using namespace symprod;
using oracle::load;

namespace {

PoincarePolynomial poly(std::initializer_list<std::pair<const int, long>> entries) {
    PoincarePolynomial out;
    for (const auto& [d, c] : entries) out[d] = c;
    return out;
}

PoincarePolynomial from_counts(const std::map<int, long>& counts) {
    PoincarePolynomial out;
    for (const auto& [d, c] : counts) out[d] = c;
    return out;
}

Permutation p(const char* text, int n) { return Permutation::parse(text, n); }

}  // namespace

TEST_CASE("betti table") {
    CHECK(betti_table(*load("k3")) == poly({{0, 1}, {2, 22}, {4, 1}}));
    CHECK(betti_table(*load("abelian_surface")) == poly({{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}}));
    CHECK(total_dimension(betti_table(*load("k3"))) == 24);
    CHECK(is_palindromic(poly({{0, 1}, {2, 5}, {4, 1}}), 2));
    CHECK_FALSE(is_palindromic(poly({{0, 1}, {2, 5}}), 2));
}

TEST_CASE("sector Poincare polynomials") {
    auto k3 = load("k3");
    auto a2 = load("a2");
    CHECK(sector_poincare(k3, p("(1 2)", 2)) == poly({{2, 1}, {4, 22}, {6, 1}}));
    CHECK(sector_poincare(a2, p("(1 2)", 2)) == poly({{2, 1}, {6, 1}}));
    // Identity sector: symmetric square, 1 + 22 + (22*23/2 + 1) + 22 + 1.
    CHECK(sector_poincare(k3, Permutation::identity(2)) == poly({{0, 1}, {2, 22}, {4, 254}, {6, 22}, {8, 1}}));
    // Any element of the class gives the same answer.
    CHECK(sector_poincare(k3, p("(1 3)", 3)) == sector_poincare(k3, p("(1 2)", 3)));
    CHECK(sector_poincare(k3, p("(1 3 2)", 3)) == sector_poincare(k3, p("(1 2 3)", 3)));

    for (const char* name : {"a2", "k3", "p2", "p1xp1"}) {
        auto alg = load(name);
        for (int n = 1; n <= 3; ++n) {
            for (const auto& cls : conjugacy_classes(n)) {
                auto counts = oracle::sector_orbit_counts(*alg, cls.representative.image());
                std::map<int, long> shifted;
                for (const auto& [d, c] : counts) shifted[d + alg->complex_dim() * length(cls.representative)] = c;
                CAPTURE(name);
                CAPTURE(cls.representative.to_string());
                CHECK(sector_poincare(alg, cls.representative) == from_counts(shifted));
            }
        }
    }
}

TEST_CASE("odd classes cancel in the symmetric square") {
    auto ab = load("abelian_surface");
    auto sym2 = sector_poincare(ab, Permutation::identity(2));
    // Graded-symmetric square: symmetric on even classes, exterior on odd ones.
    const std::map<int, long> b{{0, 1}, {1, 4}, {2, 6}, {3, 4}, {4, 1}};
    std::map<int, long> expected;
    for (const auto& [i, bi] : b) {
        for (const auto& [j, bj] : b) {
            if (i < j) expected[i + j] += bi * bj;
            if (i == j) expected[2 * i] += i % 2 == 0 ? bi * (bi + 1) / 2 : bi * (bi - 1) / 2;
        }
    }
    CHECK(sym2 == from_counts(expected));
}

TEST_CASE("orbifold Poincare polynomial") {
    auto k3 = load("k3");
    auto a2 = load("a2");
    CHECK(orbifold_poincare(k3, 1) == betti_table(*k3));
    CHECK(orbifold_poincare(a2, 2) == poly({{0, 1}, {2, 1}, {4, 1}, {6, 1}, {8, 1}}));
    CHECK(orbifold_poincare(k3, 2) == poly({{0, 1}, {2, 23}, {4, 276}, {6, 23}, {8, 1}}));
    CHECK(total_dimension(orbifold_poincare(k3, 2)) == 324);
    // (D^2 + 3D)/2 for an all-even algebra of dimension D.
    for (const char* name : {"a2", "k3", "p2", "p1xp1"}) {
        auto alg = load(name);
        const long d = static_cast<long>(alg->dimension());
        CHECK(total_dimension(orbifold_poincare(alg, 2)) == (d * d + 3 * d) / 2);
        for (int n = 1; n <= 3; ++n) CHECK(is_palindromic(orbifold_poincare(alg, n), n * alg->complex_dim()));
    }
}

TEST_CASE("Gottsche series against colored partitions") {
    for (const char* name : {"a2", "k3", "p2", "p1xp1"}) {
        auto alg = load(name);
        for (int n = 1; n <= 4; ++n) {
            CAPTURE(name);
            CAPTURE(n);
            CHECK(gottsche_polynomial(*alg, n) == from_counts(oracle::colored_partition_counts(*alg, n)));
        }
        CHECK(gottsche_polynomial(*alg, 1) == betti_table(*alg));
    }
    CHECK(gottsche_polynomial(*load("k3"), 2) == poly({{0, 1}, {2, 23}, {4, 276}, {6, 23}, {8, 1}}));
    CHECK(total_dimension(gottsche_polynomial(*load("k3"), 3)) == 3200);
    // Abelian surface: Euler characteristic of the Hilbert scheme vanishes.
    auto ab = gottsche_polynomial(*load("abelian_surface"), 2);
    Integer chi = 0;
    for (const auto& [d, c] : ab) chi += d % 2 == 0 ? c : Integer(-c);
    CHECK(chi == 0);
    CHECK_THROWS_AS(gottsche_polynomial(*load("p4"), 2), NotASurface);
}

TEST_CASE("compare and render") {
    auto report = compare(load("k3"), 2, true);
    CHECK(report.ring_matches_oracle);
    CHECK(report.gottsche_matches == true);
    CHECK(report.all_agree());
    CHECK(report.ring_side == report.oracle_side);

    auto a2 = compare(load("a2"), 3, false);
    CHECK(a2.all_agree());
    CHECK_FALSE(a2.gottsche_side.has_value());
    CHECK_THROWS_AS(compare(load("p4"), 2, true), NotASurface);
    CHECK(compare(load("p4"), 2, false).all_agree());

    auto doc = nlohmann::json::parse(render_json(report));
    CHECK(doc["n"] == 2);
    CHECK(doc["algebra"] == "K3");
    REQUIRE(doc["ring"].is_array());
    REQUIRE(doc["ring"].size() == 5);
    CHECK(doc["ring"][2]["degree"] == 4);
    CHECK(doc["ring"][2]["dimension"] == 276);
    CHECK(doc["gottsche"][4]["dimension"] == 1);
    CHECK(doc["agree"] == true);

    auto text = render_text(report);
    CHECK(text.find("324") != std::string::npos);
}
