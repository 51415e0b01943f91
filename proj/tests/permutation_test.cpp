#include "qcomb/permutation.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace qcomb;

TEST_CASE("parse and format") {
    const Permutation p = Permutation::parse("2 1 3 6 7 4 5 8 10 9 11");
    CHECK(p.size() == 11);
    CHECK(p.at(1) == 2);
    CHECK(p.str() == "2 1 3 6 7 4 5 8 10 9 11");
    CHECK(Permutation::parse("").size() == 0);
    CHECK_THROWS_AS(Permutation::parse("1 1 2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1 5"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("1 x 2"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("0 1"), std::invalid_argument);
}

TEST_CASE("is_involution") {
    CHECK(is_involution(Permutation::parse("1 2 3")));
    CHECK(is_involution(Permutation::parse("2 1 3 6 7 4 5 8 10 9 11")));
    CHECK_FALSE(is_involution(Permutation::parse("2 3 1")));
    CHECK(is_involution(Permutation()));
}

TEST_CASE("contains_pattern on the worked examples") {
    CHECK(contains_pattern(Permutation::parse("3 2 1"), Pattern::P321));
    CHECK_FALSE(contains_pattern(Permutation::parse("2 1 3 6 7 4 5 8 10 9 11"), Pattern::P321));
    CHECK_FALSE(contains_pattern(Permutation::parse("3 4 1 2"), Pattern::P321));
    CHECK(contains_pattern(Permutation::parse("1 2 3"), Pattern::P123));
    CHECK_FALSE(contains_pattern(Permutation::parse("3 2 1"), Pattern::P123));
    CHECK_FALSE(contains_pattern(Permutation::parse("2 1"), Pattern::P321));
}

TEST_CASE("contains_pattern agrees with the cubic scan on all of S_6") {
    std::vector<int> p{1, 2, 3, 4, 5, 6};
    do {
        const Permutation perm{std::vector<int>(p)};
        CHECK(contains_pattern(perm, Pattern::P321) == testing::naive_contains(p, true));
        CHECK(contains_pattern(perm, Pattern::P123) == testing::naive_contains(p, false));
    } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("stats") {
    SUBCASE("reference example: maj 15, lead 2") {
        const StatRecord r = stats(Permutation::parse("2 1 3 6 7 4 5 8 10 9 11"));
        CHECK(r.maj == 15);
        CHECK(r.lead == 2);
    }
    SUBCASE("identity has no descents and ldes 0") {
        const StatRecord r = stats(Permutation::identity(7));
        CHECK(r.inv == 0);
        CHECK(r.des == 0);
        CHECK(r.maj == 0);
        CHECK(r.ldes == 0);
        CHECK(r.lead == 1);
        CHECK(r.des_set.empty());
    }
    SUBCASE("2 1 4 3") {
        const StatRecord r = stats(Permutation::parse("2 1 4 3"));
        CHECK(r.des_set == std::vector<int>{1, 3});
        CHECK(r.des == 2);
        CHECK(r.maj == 4);
        CHECK(r.ldes == 3);
        CHECK(r.lead == 2);
        CHECK(r.inv == 2);
    }
    SUBCASE("empty permutation: all zero, lead absent") {
        const StatRecord r = stats(Permutation());
        CHECK(r.inv == 0);
        CHECK(r.des == 0);
        CHECK(r.maj == 0);
        CHECK(r.ldes == 0);
        CHECK_FALSE(r.lead.has_value());
    }
}

TEST_CASE("cycle_string") {
    CHECK(cycle_string(Permutation::parse("2 1 3 6 7 4 5 8 10 9 11")) ==
          "(1 2)(3)(4 6)(5 7)(8)(9 10)(11)");
    CHECK(cycle_string(Permutation::parse("2 3 1")) == "(1 2 3)");
    CHECK(cycle_string(Permutation()) == "()");
}
