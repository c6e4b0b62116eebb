#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dihext/laurent.hpp"

#include <random>
#include <vector>

using namespace dihext;

namespace {

LaurentPolynomial poly(std::initializer_list<std::pair<int, int>> terms) {
    LaurentPolynomial p;
    for (const auto& [e, c] : terms)
        p.add_term(e, c);
    return p;
}

LaurentPolynomial random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> n_terms(0, 5), exp(-4, 4), coeff(-9, 9);
    LaurentPolynomial p;
    for (int k = n_terms(rng); k > 0; --k)
        p.add_term(exp(rng), coeff(rng));
    return p;
}

}  // namespace

TEST_CASE("arithmetic examples") {
    auto v_plus_vinv = poly({{1, 1}, {-1, 1}});
    auto v = poly({{1, 1}});
    CHECK(v_plus_vinv * v == poly({{2, 1}, {0, 1}}));

    std::mt19937 rng(7);
    for (int k = 0; k < 50; ++k) {
        auto p = random_poly(rng);
        CHECK((p + (-p)).is_zero());
    }

    auto q_minus_1 = poly({{1, 1}, {0, -1}});
    CHECK(q_minus_1 * q_minus_1 == poly({{2, 1}, {1, -2}, {0, 1}}));
}

TEST_CASE("zero coefficients are never stored") {
    auto p = poly({{3, 2}, {3, -2}, {0, 5}});
    CHECK(p == poly({{0, 5}}));
    CHECK(p.terms().size() == 1);
    auto cancel = poly({{2, 1}}) - poly({{2, 1}});
    CHECK(cancel.is_zero());
    CHECK(cancel.terms().empty());
}

TEST_CASE("coeff lookups") {
    auto p = poly({{2, 1}, {1, -2}, {0, 1}});
    CHECK(p.coeff(1) == -2);
    CHECK(p.coeff(2) == 1);
    CHECK(p.coeff(17) == 0);
    CHECK(LaurentPolynomial{}.coeff(0) == 0);

    BiLaurentPolynomial b;
    b.add_term({0, 2}, 1);
    b.add_term({1, 0}, 2);
    CHECK(b.coeff({1, 0}) == 2);
    CHECK(b.coeff({0, 0}) == 0);
}

TEST_CASE("bar_invert examples") {
    CHECK(bar_invert(poly({{2, 1}, {-1, -1}})) == poly({{-2, 1}, {1, -1}}));
    CHECK(bar_invert(poly({{0, 42}})) == poly({{0, 42}}));

    std::mt19937 rng(11);
    for (int k = 0; k < 100; ++k) {
        auto p = random_poly(rng);
        auto q = random_poly(rng);
        CHECK(bar_invert(bar_invert(p)) == p);
        CHECK(bar_invert(p * q) == bar_invert(p) * bar_invert(q));
        CHECK(bar_invert(p + q) == bar_invert(p) + bar_invert(q));
    }
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(23);
    for (int k = 0; k < 200; ++k) {
        auto a = random_poly(rng);
        auto b = random_poly(rng);
        auto c = random_poly(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - b == a + (-b));
        CHECK((a * Int(3)) == a + a + a);
    }
}

TEST_CASE("one-variable rendering") {
    CHECK(to_string(poly({{2, 1}, {1, -2}, {0, 1}}), "q") == "q^2 - 2q + 1");
    CHECK(to_string(LaurentPolynomial{}, "v") == "0");
    CHECK(to_string(poly({{-2, 1}, {1, -1}}), "v") == "-v + v^-2");
    CHECK(to_string(poly({{0, -7}}), "v") == "-7");
    CHECK(to_string(poly({{1, 1}}), "v") == "v");
    CHECK(to_string(poly({{3, 1}, {0, 1}}), "v") == "v^3 + 1");
    CHECK(to_latex(poly({{2, 1}, {1, -2}, {0, 1}}), "q") == "q^{2} - 2q + 1");
    CHECK(to_latex(poly({{-2, 3}}), "v") == "3v^{-2}");
}

TEST_CASE("two-variable rendering") {
    BiLaurentPolynomial e;
    e.add_term({0, 2}, 1);
    e.add_term({1, 0}, 2);
    e.add_term({2, -2}, 1);
    CHECK(to_string(e) == "t^2 + 2q + q^2t^-2");
    CHECK(to_latex(e) == "t^{2} + 2q + q^{2}t^{-2}");
    CHECK(to_string(BiLaurentPolynomial{}) == "0");

    BiLaurentPolynomial one;
    one.add_term({0, 0}, 1);
    CHECK(to_string(one) == "1");
}
