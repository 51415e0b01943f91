#include "qcomb/tableau.hpp"

#include "qcomb/families.hpp"
#include "qcomb/qseries.hpp"

#include <doctest.h>

#include <stdexcept>

#include <set>

using namespace qcomb;

TEST_CASE("rsk basics") {
    const auto [p, q] = rsk(Permutation::parse("1 3 2"));
    CHECK(p.str() == "[[1,2],[3]]");
    CHECK(p == q);

    const auto [pi, qi] = rsk(Permutation::identity(5));
    CHECK(pi.rows().size() == 1);
    CHECK(pi == qi);

    const auto [pr, qr] = rsk(Permutation::parse("4 3 2 1"));
    CHECK(pr.rows().size() == 4);
    CHECK(pr.shape() == std::vector<int>{1, 1, 1, 1});

    const auto [pg, qg] = rsk(Permutation::parse("2 3 1"));
    CHECK(pg != qg);
}

TEST_CASE("tableau validation") {
    CHECK(StandardTableau::from_rows({{1, 3}, {2, 4}, {5}}).shape() == std::vector<int>{2, 2, 1});
    CHECK_THROWS_AS(StandardTableau::from_rows({{2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau::from_rows({{1}, {2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau::from_rows({{1, 2}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau::from_rows({{1, 5}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(StandardTableau::from_rows({{2, 3}, {1}}), std::invalid_argument);
    CHECK(StandardTableau::from_rows({{1, 2}, {3}}).cells() == 3);
}

TEST_CASE("transpose of a tableau") {
    const StandardTableau t = StandardTableau::from_rows({{1, 2, 4}, {3, 5}});
    CHECK(t.transpose().str() == "[[1,3],[2,5],[4]]");
    CHECK(t.transpose().transpose() == t);
}

TEST_CASE("inverse_rsk examples") {
    const StandardTableau t = StandardTableau::from_rows({{1, 2}, {3}});
    CHECK(inverse_rsk(t, t).str() == "1 3 2");
    const StandardTableau row = StandardTableau::from_rows({{1, 2, 3, 4}});
    CHECK(inverse_rsk(row, row) == Permutation::identity(4));
    const StandardTableau col = StandardTableau::from_rows({{1}, {2}, {3}});
    CHECK(inverse_rsk(col, col).str() == "3 2 1");
    CHECK_THROWS_AS(inverse_rsk(row, col), std::domain_error);
}

TEST_CASE("rsk and inverse_rsk are mutually inverse over S_6") {
    std::vector<int> v{1, 2, 3, 4, 5, 6};
    do {
        const Permutation sigma{std::vector<int>(v)};
        const auto [p, q] = rsk(sigma);
        CHECK(inverse_rsk(p, q) == sigma);
        CHECK((p == q) == is_involution(sigma));
    } while (std::next_permutation(v.begin(), v.end()));
}

TEST_CASE("transpose_involution basics") {
    CHECK(transpose_involution(Permutation::parse("1 2 3")).str() == "3 2 1");
    CHECK(transpose_involution(Permutation::parse("1 3 2")).str() == "2 1 3");
    CHECK_THROWS_AS(transpose_involution(Permutation::parse("2 3 1")), std::domain_error);
    // involution containing both patterns is outside the domain
    CHECK_THROWS_AS(transpose_involution(Permutation::parse("2 1 3 6 5 4")), std::domain_error);
}

TEST_CASE("transpose_involution is an involution carrying I(321) onto I(123), complementing descents") {
    for (int n = 0; n <= 9; ++n) {
        std::set<Permutation> image;
        const auto family123 = enumerate_family(Family::I123, n);
        const std::set<Permutation> family123_set(family123.begin(), family123.end());
        for_each_member(Family::I321, n, [&](const Permutation& sigma) {
            const Permutation t = transpose_involution(sigma);
            CHECK(family123_set.count(t) == 1);
            CHECK(transpose_involution(t) == sigma);
            const StatRecord rs = stats(sigma);
            const StatRecord rt = stats(t);
            std::set<int> expected;
            for (int i = 1; i < n; ++i) expected.insert(i);
            for (int d : rs.des_set) expected.erase(d);
            CHECK(std::set<int>(rt.des_set.begin(), rt.des_set.end()) == expected);
            CHECK(rt.maj == static_cast<long long>(n) * (n - 1) / 2 - rs.maj);
            image.insert(t);
        });
        CHECK(image.size() == family123_set.size());
    }
}
