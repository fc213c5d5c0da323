#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <fstream>

#include "oracles.hpp"
#include "symprod/errors.hpp"

using namespace symprod;
using oracle::load;

namespace {

AlgebraSpec a2_spec() {
    AlgebraSpec spec;
    spec.name = "A2";
    spec.complex_dim = 2;
    spec.basis = {{"1", 0}, {"x", 4}};
    spec.unit = "1";
    spec.counit = {{"x", Scalar(1)}};
    spec.products = {{"1", "1", "1", Scalar(1)}, {"1", "x", "x", Scalar(1)}};
    return spec;
}

std::string a2_json(const std::string& counit_value) {
    return R"({"name": "A2", "complex_dim": 2, "basis": [{"id": "1", "degree": 0}, {"id": "x", "degree": 4}],
               "unit": "1", "counit": {"x": ")" +
           counit_value + R"("}, "products": [["1", "1", "1", "1"], ["1", "x", "x", "1"]]})";
}

// Intersection form on the degree-2 classes, read straight from the file.
std::map<std::pair<std::string, std::string>, Scalar> k3_form_from_file() {
    std::ifstream in(oracle::data_path("k3.json"));
    auto doc = nlohmann::json::parse(in);
    std::map<std::pair<std::string, std::string>, Scalar> form;
    for (const auto& p : doc["products"]) {
        if (p[2] != "pt") continue;
        Scalar v(p[3].get<std::string>());
        v.canonicalize();
        form[{p[0], p[1]}] = v;
        form[{p[1], p[0]}] = v;
    }
    return form;
}

}  // namespace

TEST_CASE("shipped algebra files load") {
    for (const char* name : {"a2", "k3", "p2", "p1xp1", "p4", "abelian_surface"}) {
        CAPTURE(name);
        CHECK_NOTHROW(load(name));
    }
    auto k3 = load("k3");
    CHECK(k3->dimension() == 24);
    CHECK(k3->complex_dim() == 2);
    CHECK(k3->top_degree() == 4);
}

TEST_CASE("load rejects bad documents") {
    CHECK_THROWS_AS(load_algebra("{not json"), ParseError);
    CHECK_THROWS_AS(load_algebra(R"({"name": "x"})"), ParseError);
    CHECK_THROWS_AS(load_algebra_file(oracle::data_path("missing.json")), ParseError);

    SUBCASE("degenerate counit") {
        try {
            load_algebra(a2_json("0"));
            FAIL("expected a ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.axiom() == "nondegenerate pairing");
        }
    }
    SUBCASE("odd complex dimension") {
        auto spec = a2_spec();
        spec.complex_dim = 1;
        spec.basis[1].degree = 2;
        CHECK_THROWS_AS(FrobeniusAlgebra::build(spec), OddDimensionError);
    }
    SUBCASE("counit off the top degree") {
        auto spec = a2_spec();
        spec.counit.emplace_back("1", Scalar(1));
        try {
            FrobeniusAlgebra::build(spec);
            FAIL("expected a ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.axiom() == "counit support");
        }
    }
    SUBCASE("both orientations listed") {
        auto spec = a2_spec();
        spec.products.push_back({"x", "1", "x", Scalar(1)});
        CHECK_THROWS_AS(FrobeniusAlgebra::build(spec), ParseError);
    }
    SUBCASE("unknown id") {
        auto spec = a2_spec();
        spec.products.push_back({"x", "y", "x", Scalar(1)});
        CHECK_THROWS_AS(FrobeniusAlgebra::build(spec), ParseError);
    }
    SUBCASE("degree additivity") {
        auto spec = a2_spec();
        spec.products.push_back({"x", "x", "1", Scalar(1)});
        try {
            FrobeniusAlgebra::build(spec);
            FAIL("expected a ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.axiom() == "degree additivity");
        }
    }
    SUBCASE("missing unit products") {
        auto spec = a2_spec();
        spec.products.erase(spec.products.begin() + 1);
        try {
            FrobeniusAlgebra::build(spec);
            FAIL("expected a ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.axiom() == "unit law");
        }
    }
    SUBCASE("broken associativity names the triple") {
        AlgebraSpec spec;
        spec.name = "broken";
        spec.complex_dim = 4;
        spec.basis = {{"1", 0}, {"a", 2}, {"b", 4}, {"c", 6}, {"p", 8}};
        spec.unit = "1";
        spec.counit = {{"p", Scalar(1)}};
        for (const char* id : {"1", "a", "b", "c", "p"}) spec.products.push_back({"1", id, id, Scalar(1)});
        spec.products.push_back({"a", "a", "b", Scalar(1)});
        spec.products.push_back({"a", "b", "c", Scalar(2)});
        spec.products.push_back({"a", "c", "p", Scalar(1)});
        spec.products.push_back({"b", "b", "p", Scalar(1)});
        // (a a) b = b b = p, a (a b) = 2 a c = 2 p.
        try {
            FrobeniusAlgebra::build(spec);
            FAIL("expected a ValidationError");
        } catch (const ValidationError& e) {
            CHECK(e.axiom() == "associativity");
            CHECK(std::string(e.what()).find("(a, a, b)") != std::string::npos);
        }
    }
}

TEST_CASE("multiply") {
    auto a2 = load("a2");
    auto x = a2->element("x");
    CHECK(a2->multiply(x, x).is_zero());
    CHECK(a2->multiply(a2->unit(), x) == x);
    CHECK_THROWS_AS(a2->element("y"), UnknownBasisId);

    auto k3 = load("k3");
    const auto form = k3_form_from_file();
    const auto pt = k3->index_of("pt");
    for (BasisIndex i = 1; i <= 22; ++i) {
        for (BasisIndex j = 1; j <= 22; ++j) {
            auto it = form.find({k3->id(i), k3->id(j)});
            Scalar expected = it == form.end() ? Scalar(0) : it->second;
            CHECK(k3->multiply_basis(i, j) == (is_zero(expected) ? AlgebraElement() : AlgebraElement::basis(pt, expected)));
        }
    }
}

TEST_CASE("counit and pairing") {
    auto a2 = load("a2");
    auto a2t = load("a2", true);
    CHECK(a2->counit(a2->element("x")) == 1);
    CHECK(a2t->counit(a2t->element("x")) == -1);
    CHECK(a2->counit(a2->unit()) == 0);
    auto k3 = load("k3");
    CHECK(k3->counit(k3->element("pt", 5)) == 5);

    CHECK(a2->pairing(a2->unit(), a2->element("x")) == 1);
    CHECK(a2->pairing(a2->unit(), a2->unit()) == 0);

    const auto form = k3_form_from_file();
    const Matrix& p = k3->pairing_matrix();
    for (BasisIndex i = 1; i <= 22; ++i) {
        for (BasisIndex j = 1; j <= 22; ++j) {
            auto it = form.find({k3->id(i), k3->id(j)});
            CHECK(p(i, j) == (it == form.end() ? Scalar(0) : it->second));
        }
    }
    CHECK(load("k3", true)->pairing_matrix()(1, 2) == -p(1, 2));
}

TEST_CASE("dual basis") {
    auto a2 = load("a2");
    auto duals = a2->dual_basis();
    CHECK(duals[0] == a2->element("x"));
    CHECK(duals[1] == a2->unit());

    for (bool twist : {false, true}) {
        auto k3 = load("k3", twist);
        auto f = k3->dual_basis();
        CHECK(f[k3->unit_index()] == k3->element("pt", twist ? -1 : 1));
        // Oracle: solve Q c = e_j for the degree-2 block directly.
        oracle::Dense q(22, std::vector<Scalar>(22));
        for (BasisIndex i = 0; i < 22; ++i) {
            for (BasisIndex j = 0; j < 22; ++j) q[i][j] = k3->counit(k3->multiply_basis(i + 1, j + 1));
        }
        for (BasisIndex j = 0; j < 22; ++j) {
            std::vector<Scalar> rhs(22);
            rhs[j] = 1;
            auto c = oracle::solve(q, rhs);
            AlgebraElement expected;
            for (BasisIndex l = 0; l < 22; ++l) {
                if (!is_zero(c[l])) expected.add(l + 1, c[l]);
            }
            CHECK(f[j + 1] == expected);
        }
    }
}

TEST_CASE("coproduct") {
    auto a2 = load("a2");
    const BasisIndex one = 0, x = 1;
    TensorExpansion expected{{Scalar(1), {one, x}}, {Scalar(1), {x, one}}};
    CHECK(a2->coproduct(a2->unit(), 2) == expected);
    CHECK(a2->coproduct(a2->element("x"), 2) == TensorExpansion{{Scalar(1), {x, x}}});
    CHECK(a2->coproduct(a2->element("x", 3), 1) == TensorExpansion{{Scalar(3), {x}}});

    SUBCASE("adjointness oracle on K3") {
        for (bool twist : {false, true}) {
            auto k3 = load("k3", twist);
            const std::size_t dim = k3->dimension();
            for (const char* id : {"1", "a3", "pt"}) {
                AlgebraElement a = k3->element(id);
                // Unknowns c_{l1 l2}; one equation per (i, j) of complementary degrees:
                // sum c T(e_l1 e_i) T(e_l2 e_j) = T(a e_i e_j).
                const int target = k3->top_degree() + *k3->degree(a);
                std::vector<std::pair<std::size_t, std::size_t>> cells, tests;
                for (std::size_t l1 = 0; l1 < dim; ++l1) {
                    for (std::size_t l2 = 0; l2 < dim; ++l2) {
                        const int d = k3->degree(l1) + k3->degree(l2);
                        if (d == target) cells.emplace_back(l1, l2);
                        if (d == 2 * k3->top_degree() - target) tests.emplace_back(l1, l2);
                    }
                }
                REQUIRE(tests.size() == cells.size());
                oracle::Dense sys(cells.size(), std::vector<Scalar>(cells.size()));
                std::vector<Scalar> rhs(cells.size());
                for (std::size_t r = 0; r < tests.size(); ++r) {
                    auto [i, j] = tests[r];
                    for (std::size_t c = 0; c < cells.size(); ++c) {
                        sys[r][c] = k3->counit(k3->multiply_basis(cells[c].first, i)) *
                                    k3->counit(k3->multiply_basis(cells[c].second, j));
                    }
                    rhs[r] = k3->counit(k3->multiply(k3->multiply(a, AlgebraElement::basis(i)), AlgebraElement::basis(j)));
                }
                auto sol = oracle::solve(sys, rhs);
                std::map<std::vector<BasisIndex>, Scalar> want;
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    if (!is_zero(sol[c])) want[{static_cast<BasisIndex>(cells[c].first), static_cast<BasisIndex>(cells[c].second)}] = sol[c];
                }
                std::map<std::vector<BasisIndex>, Scalar> got;
                for (const auto& [coeff, key] : k3->coproduct(a, 2)) got[key] += coeff;
                CAPTURE(id);
                CAPTURE(twist);
                CHECK(got == want);
            }
        }
    }

    SUBCASE("twisted coproduct differs by (-1)^(k+1)") {
        auto k3 = load("k3");
        auto k3t = load("k3", true);
        for (int k = 1; k <= 3; ++k) {
            auto plain = k3->coproduct(k3->element("a1"), k);
            auto twisted = k3t->coproduct(k3t->element("a1"), k);
            REQUIRE(plain.size() == twisted.size());
            for (std::size_t i = 0; i < plain.size(); ++i) {
                CHECK(twisted[i].second == plain[i].second);
                CHECK(twisted[i].first == (k % 2 == 1 ? plain[i].first : -plain[i].first));
            }
        }
    }
}

TEST_CASE("euler class") {
    auto a2 = load("a2");
    CHECK(a2->euler_class() == a2->element("x", 2));
    auto k3 = load("k3");
    CHECK(k3->euler_class() == k3->element("pt", 24));
    CHECK(load("k3", true)->euler_class() == k3->element("pt", 24));
    CHECK(load("p2")->euler_class() == load("p2")->element("h2", 3));
    CHECK(load("p1xp1")->euler_class().terms().size() == 1);
    CHECK(load("p1xp1")->counit(load("p1xp1")->euler_class()) == 4);
    CHECK(load("abelian_surface")->euler_class().is_zero());

    // Oracle: sum_i e_i f^i with f from a direct solve of the pairing.
    const std::size_t dim = k3->dimension();
    oracle::Dense p(dim, std::vector<Scalar>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) p[i][j] = k3->counit(k3->multiply_basis(i, j));
    }
    AlgebraElement sum;
    for (std::size_t i = 0; i < dim; ++i) {
        std::vector<Scalar> rhs(dim);
        rhs[i] = 1;
        auto c = oracle::solve(p, rhs);
        for (std::size_t l = 0; l < dim; ++l) {
            if (!is_zero(c[l])) sum += c[l] * k3->multiply_basis(i, l);
        }
    }
    CHECK(sum == k3->euler_class());
}

TEST_CASE("sign twist copy shares structure") {
    auto k3 = load("k3");
    auto t = k3->with_sign_twist(true);
    CHECK(t->sign_twist());
    CHECK(t->counit(t->element("pt")) == -1);
    CHECK(t->multiply_basis(1, 2) == k3->multiply_basis(1, 2));
    CHECK(t->structural_coproduct(0, 2) == k3->structural_coproduct(0, 2));
}
