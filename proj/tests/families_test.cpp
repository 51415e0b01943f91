#include "qcomb/families.hpp"

#include "qcomb/qseries.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace qcomb;

TEST_CASE("I321 at n = 4 is the six-element list, in lexicographic order") {
    const auto members = enumerate_family(Family::I321, 4);
    std::vector<std::string> got;
    for (const auto& p : members) got.push_back(p.str());
    CHECK(got == std::vector<std::string>{"1 2 3 4", "1 2 4 3", "1 3 2 4", "2 1 3 4", "2 1 4 3", "3 4 1 2"});
}

TEST_CASE("n = 0 yields exactly the empty permutation") {
    for (Family f : {Family::I321, Family::I123, Family::S321, Family::S123, Family::Inv, Family::All}) {
        const auto members = enumerate_family(f, 0);
        REQUIRE(members.size() == 1);
        CHECK(members[0].size() == 0);
    }
}

TEST_CASE("involution family counts are the central binomials") {
    for (int n = 0; n <= 12; ++n) {
        const BigInt expected = binomial(n, n / 2);
        long long count321 = 0;
        long long count123 = 0;
        for_each_member(Family::I321, n, [&](const Permutation&) { ++count321; });
        for_each_member(Family::I123, n, [&](const Permutation&) { ++count123; });
        CHECK(BigInt(count321) == expected);
        CHECK(BigInt(count123) == expected);
    }
}

TEST_CASE("I321 at n = 11 has C(11,5) = 462 members") {
    CHECK(enumerate_family(Family::I321, 11).size() == 462);
}

TEST_CASE("enumeration matches the filtering oracle member for member") {
    auto as_lists = [](const std::vector<Permutation>& v) {
        std::vector<std::vector<int>> out;
        out.reserve(v.size());
        for (const auto& p : v) out.push_back(p.entries());
        return out;
    };
    for (int n = 0; n <= 12; ++n)
        for (Family f : {Family::I321, Family::I123})
            CHECK(as_lists(enumerate_family(f, n)) == testing::filtered_family(f, n));
    for (int n = 0; n <= 10; ++n)
        CHECK(as_lists(enumerate_family(Family::Inv, n)) == testing::filtered_family(Family::Inv, n));
    for (int n = 0; n <= 7; ++n)
        for (Family f : {Family::S321, Family::S123})
            CHECK(as_lists(enumerate_family(f, n)) == testing::filtered_family(f, n));
}

TEST_CASE("S321 counts are Catalan numbers") {
    for (int n = 0; n <= 8; ++n)
        CHECK(BigInt(static_cast<long long>(enumerate_family(Family::S321, n).size())) == catalan(n));
}

TEST_CASE("S-family enumeration is capped") {
    CHECK_THROWS_AS(for_each_member(Family::S321, 11, [](const Permutation&) {}), std::domain_error);
    CHECK_THROWS_AS(for_each_member(Family::S123, 11, [](const Permutation&) {}), std::domain_error);
}

TEST_CASE("enumerate_filtered") {
    auto strs = [](const std::vector<Permutation>& v) {
        std::vector<std::string> out;
        for (const auto& p : v) out.push_back(p.str());
        return out;
    };
    CHECK(strs(enumerate_filtered(Family::I321, 4, Stat::Lead, 1)) ==
          std::vector<std::string>{"1 2 3 4", "1 2 4 3", "1 3 2 4"});
    CHECK(strs(enumerate_filtered(Family::I321, 4, Stat::Des, 0)) == std::vector<std::string>{"1 2 3 4"});
    CHECK(enumerate_filtered(Family::I321, 11, Stat::Lead, 2).size() == 126);
}

TEST_CASE("stat parsing") {
    CHECK(parse_stat("lead") == Stat::Lead);
    CHECK_THROWS_AS(parse_stat("major"), std::invalid_argument);
    CHECK_THROWS_AS(parse_family("I132"), std::invalid_argument);
    StatRecord empty;
    CHECK(stat_value(empty, Stat::Lead) == 0);
}
