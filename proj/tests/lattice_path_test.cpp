#include "qcomb/lattice_path.hpp"

#include <doctest.h>

#include <stdexcept>

#include <map>
#include <set>

using namespace qcomb;

TEST_CASE("parse and format") {
    const LatticePath p = LatticePath::parse("NENNNEENNEN");
    CHECK(p.size() == 11);
    CHECK(p.endpoint() == std::pair<int, int>{4, 7});
    CHECK(p.str() == "NENNNEENNEN");
    CHECK(LatticePath::parse("").empty());
    CHECK(LatticePath::parse("nEnn").str() == "NENN");
    CHECK_THROWS_WITH_AS(LatticePath::parse("NEX"), doctest::Contains("position 3"), std::invalid_argument);
}

TEST_CASE("parse/format round trip over all words of length <= 12") {
    for (int len = 0; len <= 12; ++len) {
        for (long long mask = 0; mask < (1LL << len); ++mask) {
            std::string w;
            for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? 'N' : 'E');
            CHECK(LatticePath::parse(w).str() == w);
        }
    }
}

TEST_CASE("peaks, valleys, sump") {
    const LatticePath tau = LatticePath::parse("NENNNEENNEN");
    CHECK(peaks(tau) == std::vector<LatticePoint>{{0, 1}, {1, 4}, {3, 6}});
    CHECK(sump(tau) == 15);

    CHECK(peaks(LatticePath::parse("NNEE")) == std::vector<LatticePoint>{{0, 2}});
    CHECK(valleys(LatticePath::parse("NNEE")).empty());
    CHECK(sump(LatticePath::parse("NNEE")) == 2);

    const LatticePath pi = LatticePath::parse("NEENNEEENEN");
    CHECK(peaks(pi) == std::vector<LatticePoint>{{0, 1}, {2, 3}, {5, 4}});
    CHECK(sump(pi) == 15);
    CHECK(valleys(pi) == std::vector<LatticePoint>{{2, 1}, {5, 3}, {6, 4}});
}

TEST_CASE("peaks and valleys interleave") {
    for (int len = 0; len <= 10; ++len) {
        for (long long mask = 0; mask < (1LL << len); ++mask) {
            std::string w;
            for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? 'N' : 'E');
            const LatticePath p = LatticePath::parse(w);
            const auto pk = peaks(p);
            const auto vl = valleys(p);
            const long long diff = static_cast<long long>(pk.size()) - static_cast<long long>(vl.size());
            CHECK(diff >= -1);
            CHECK(diff <= 1);
            // positions strictly interleave
            std::vector<std::pair<int, char>> merged;
            for (const auto& q : pk) merged.emplace_back(q.position(), 'p');
            for (const auto& q : vl) merged.emplace_back(q.position(), 'v');
            std::sort(merged.begin(), merged.end());
            for (size_t i = 1; i < merged.size(); ++i) CHECK(merged[i].second != merged[i - 1].second);
        }
    }
}

TEST_CASE("is_partial_dyck") {
    CHECK(is_partial_dyck(LatticePath::parse("NENNNEENNEN"), 11));
    CHECK_FALSE(is_partial_dyck(LatticePath::parse("NENNNEENNEN"), 10));
    CHECK_FALSE(is_partial_dyck(LatticePath::parse("EN"), 2));
    CHECK(is_partial_dyck(LatticePath::parse("NNEE"), 4));
    CHECK(is_partial_dyck(LatticePath(), 0));
}

TEST_CASE("primal factorization") {
    CHECK(primal_factorization(LatticePath::parse("NENE")).lengths == std::vector<int>{1, 1, 1, 1});
    CHECK(primal_factorization(LatticePath::parse("NENE")).last_index() == 3);
    CHECK(primal_factorization(LatticePath::parse("EENN")).lengths == std::vector<int>{0, 2, 2});
    CHECK(primal_factorization(LatticePath::parse("NNNN")).lengths == std::vector<int>{4});
    CHECK(primal_factorization(LatticePath()).lengths.empty());

    for (int len = 0; len <= 10; ++len) {
        for (long long mask = 0; mask < (1LL << len); ++mask) {
            std::string w;
            for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? 'N' : 'E');
            const LatticePath p = LatticePath::parse(w);
            const RunFactorization runs = primal_factorization(p);
            CHECK(path_from_runs(runs) == p);
            for (int t = 1; t <= runs.last_index(); ++t) CHECK(runs.lengths[static_cast<size_t>(t)] > 0);
        }
    }
}

TEST_CASE("b_subset_index") {
    CHECK(b_subset_index(LatticePath::parse("NEENNEEENEN")) == 1);
    CHECK(b_subset_index(LatticePath::parse("EENN")) == 0);
    CHECK(b_subset_index(LatticePath::parse("NNNEE")) == 3);
    CHECK_THROWS_AS(b_subset_index(LatticePath::parse("NNN")), std::domain_error);
}

TEST_CASE("rectangles partition into the B_j subsets") {
    for (int n = 0; n <= 6; ++n) {
        for (int m = 1; m <= 6; ++m) {
            std::map<int, long long> by_j;
            long long total = 0;
            for_each_path(n, m, [&](const LatticePath& w) {
                ++total;
                const int j = b_subset_index(w);
                CHECK(j >= 0);
                CHECK(j <= n);
                ++by_j[j];
            });
            CHECK(total == rectangle_size(n, m));
            long long sum = 0;
            for (const auto& [j, c] : by_j) sum += c;
            CHECK(sum == total);
        }
    }
}

TEST_CASE("for_each_path covers the rectangle exactly once") {
    std::set<std::string> seen;
    for_each_path(2, 3, [&](const LatticePath& w) {
        CHECK(w.norths() == 2);
        CHECK(w.easts() == 3);
        CHECK(seen.insert(w.str()).second);
    });
    CHECK(seen.size() == 10);
    CHECK(rectangle_size(2, 3) == 10);
    CHECK(rectangle_size(9, 9) == 48620);
}

TEST_CASE("all runs even iff no odd peak and no odd valley, on B(n,n) up to 6") {
    for (int n = 0; n <= 6; ++n) {
        for_each_path(n, n, [&](const LatticePath& w) {
            const RunFactorization runs = primal_factorization(w);
            bool all_even = true;
            for (int len : runs.lengths)
                if (len % 2 != 0) all_even = false;
            bool no_odd_corner = true;
            for (const auto& p : peaks(w))
                if (p.odd()) no_odd_corner = false;
            for (const auto& p : valleys(w))
                if (p.odd()) no_odd_corner = false;
            CHECK(all_even == no_odd_corner);
        });
    }
}
