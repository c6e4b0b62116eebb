#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dihext/dihedral.hpp"

#include <set>
#include <stdexcept>

using namespace dihext;

TEST_CASE("group params reject m < 2") {
    CHECK_THROWS_AS(GroupParams(1), std::invalid_argument);
    CHECK_THROWS_AS(GroupParams(0), std::invalid_argument);
    CHECK_THROWS_AS(GroupParams(-3), std::invalid_argument);
    CHECK_NOTHROW(GroupParams(2));
}

TEST_CASE("parse_element accepts reduced alternating words") {
    GroupParams g(5);
    auto st = parse_element("st", g);
    CHECK(st == DihedralElement::word(Letter::s, 2, g));
    CHECK(st.length() == 2);
    CHECK(st.first_letter() == Letter::s);

    CHECK(parse_element("e", g) == DihedralElement::identity(g));
    CHECK(parse_element("w0", g) == DihedralElement::longest(g));
    CHECK(parse_element("tst", g) == DihedralElement::word(Letter::t, 3, g));
}

TEST_CASE("parse_element rejects bad words") {
    GroupParams g(5);
    CHECK_THROWS_AS(parse_element("ss", g), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("stt", g), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("ststst", g), std::invalid_argument);  // length 6 > m
    CHECK_THROWS_AS(parse_element("sxt", g), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("", g), std::invalid_argument);
    CHECK_THROWS_AS(parse_element("E", g), std::invalid_argument);
}

TEST_CASE("both length-m words denote the longest element") {
    GroupParams g(5);
    auto a = parse_element("ststs", g);
    auto b = parse_element("tstst", g);
    CHECK(a == b);
    CHECK(a == DihedralElement::longest(g));
    CHECK(a.first_letter() == Letter::s);  // canonical form
    CHECK(a.to_string() == "w0");
}

TEST_CASE("mult_gen examples") {
    GroupParams g(5);
    auto st = parse_element("st", g);
    auto ts = parse_element("ts", g);

    auto r1 = mult_gen(Side::left, Letter::s, st);
    CHECK(r1.element == parse_element("t", g));
    CHECK(r1.sign == -1);

    auto r2 = mult_gen(Side::left, Letter::s, ts);
    CHECK(r2.element == parse_element("sts", g));
    CHECK(r2.sign == +1);

    auto r3 = mult_gen(Side::left, Letter::s, DihedralElement::longest(g));
    CHECK(r3.element == DihedralElement::word(Letter::t, 4, g));
    CHECK(r3.sign == -1);
}

TEST_CASE("mult_gen applied twice is the identity map") {
    for (int m = 2; m <= 8; ++m) {
        GroupParams g(m);
        for (const auto& w : elements(g))
            for (Side side : {Side::left, Side::right})
                for (Letter gen : {Letter::s, Letter::t}) {
                    auto once = mult_gen(side, gen, w);
                    CHECK(std::abs(once.sign) == 1);
                    CHECK(once.element.length() == w.length() + once.sign);
                    auto twice = mult_gen(side, gen, once.element);
                    CHECK(twice.element == w);
                    CHECK(twice.sign == -once.sign);
                }
    }
}

TEST_CASE("bruhat_leq examples") {
    GroupParams g(3);
    CHECK(bruhat_leq(parse_element("s", g), parse_element("st", g)));
    CHECK_FALSE(bruhat_leq(parse_element("st", g), parse_element("ts", g)));
    for (const auto& x : elements(g))
        CHECK(bruhat_leq(x, x));
}

TEST_CASE("subword oracle examples") {
    GroupParams g(4);
    CHECK(bruhat_leq_subword_oracle(parse_element("s", g), parse_element("tst", g)));
    CHECK_FALSE(bruhat_leq_subword_oracle(parse_element("s", g), parse_element("t", g)));
    for (const auto& y : elements(g))
        CHECK(bruhat_leq_subword_oracle(DihedralElement::identity(g), y));
}

TEST_CASE("closed form agrees with the subword oracle") {
    for (int m = 2; m <= 8; ++m) {
        GroupParams g(m);
        for (const auto& x : elements(g))
            for (const auto& y : elements(g))
                CHECK(bruhat_leq(x, y) == bruhat_leq_subword_oracle(x, y));
    }
}

TEST_CASE("bruhat_leq is a partial order") {
    for (int m = 2; m <= 8; ++m) {
        GroupParams g(m);
        const auto all = elements(g);
        for (const auto& x : all) {
            CHECK(bruhat_leq(x, x));
            for (const auto& y : all) {
                if (bruhat_leq(x, y) && bruhat_leq(y, x))
                    CHECK(x == y);
                for (const auto& z : all)
                    if (bruhat_leq(x, y) && bruhat_leq(y, z))
                        CHECK(bruhat_leq(x, z));
            }
        }
    }
}

TEST_CASE("elements enumeration and canonical order") {
    GroupParams g2(2);
    auto e2 = elements(g2);
    REQUIRE(e2.size() == 4);
    CHECK(e2[0] == DihedralElement::identity(g2));
    CHECK(e2[1] == parse_element("s", g2));
    CHECK(e2[2] == parse_element("t", g2));
    CHECK(e2[3] == DihedralElement::longest(g2));

    GroupParams g3(3);
    auto e3 = elements(g3);
    REQUIRE(e3.size() == 6);
    CHECK(e3[3] == parse_element("st", g3));
    CHECK(e3[4] == parse_element("ts", g3));
    CHECK(e3[5] == DihedralElement::longest(g3));

    CHECK(elements(GroupParams(5)).size() == 10);

    for (int m = 2; m <= 10; ++m) {
        GroupParams g(m);
        auto all = elements(g);
        CHECK(all.size() == static_cast<size_t>(2 * m));
        // distinct, sorted, two per length 1..m-1
        std::set<DihedralElement> seen(all.begin(), all.end());
        CHECK(seen.size() == all.size());
        for (int k = 1; k < m; ++k) {
            int count = 0;
            for (const auto& w : all)
                if (w.length() == k)
                    ++count;
            CHECK(count == 2);
        }
    }
}

TEST_CASE("to_string round-trips through parse_element") {
    for (int m = 2; m <= 6; ++m) {
        GroupParams g(m);
        for (const auto& w : elements(g))
            CHECK(parse_element(w.to_string(), g) == w);
    }
}
