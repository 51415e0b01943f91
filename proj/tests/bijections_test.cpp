#include "qcomb/bijections.hpp"

#include "qcomb/families.hpp"
#include "qcomb/qseries.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <stdexcept>

#include <set>

using namespace qcomb;

namespace {
const char* kSigma = "2 1 3 6 7 4 5 8 10 9 11";
const char* kTau = "NENNNEENNEN";
const char* kPi = "NEENNEEENEN";
}  // namespace

TEST_CASE("delta on the worked example") {
    CHECK(delta(Permutation::parse(kSigma)).str() == kTau);
    CHECK(delta(Permutation::identity(4)).str() == "NNNN");
    CHECK(delta(Permutation::parse("2 1")).str() == "NE");
    CHECK_THROWS_AS(delta(Permutation::parse("2 3 1")), std::domain_error);       // not an involution
    CHECK_THROWS_AS(delta(Permutation::parse("4 3 2 1")), std::domain_error);     // contains 321
}

TEST_CASE("delta_inv on the worked example") {
    const Permutation p = delta_inv(LatticePath::parse(kTau));
    CHECK(p.str() == kSigma);
    CHECK(cycle_string(p) == "(1 2)(3)(4 6)(5 7)(8)(9 10)(11)");
    CHECK(delta_inv(LatticePath::parse("NNNN")).str() == "1 2 3 4");
    CHECK(delta_inv(LatticePath::parse("NE")).str() == "2 1");
    CHECK_THROWS_AS(delta_inv(LatticePath::parse("EN")), std::domain_error);
}

TEST_CASE("face matching is the stack matching and agrees with the slope-1 rule") {
    const StepMatching m = face_matching(LatticePath::parse(kTau));
    CHECK(m.unmatched_n == std::vector<int>{3, 8, 11});
    CHECK(m.unmatched_e.empty());

    for (int len = 0; len <= 10; ++len) {
        for (long long mask = 0; mask < (1LL << len); ++mask) {
            std::string w;
            for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? 'N' : 'E');
            const LatticePath path = LatticePath::parse(w);
            StepMatching got = face_matching(path);
            std::sort(got.couples.begin(), got.couples.end());
            CHECK(got.couples == testing::geometric_matching(path));
        }
    }
}

TEST_CASE("xi on the worked example") {
    const XiTrace trace = xi_with_trace(LatticePath::parse(kTau));
    CHECK(trace.image.str() == kPi);
    CHECK(trace.unmatched_n == std::vector<int>{3, 8, 11});
    CHECK(trace.flipped == std::vector<int>{3, 8});
    CHECK(sump(trace.image) == 15);

    CHECK(xi(LatticePath::parse("NN")).str() == "EN");
    CHECK(xi(LatticePath::parse("NE")).str() == "NE");
    CHECK(xi(LatticePath()).str().empty());
    CHECK_THROWS_AS(xi(LatticePath::parse("EN")), std::domain_error);
}

TEST_CASE("xi_inv") {
    CHECK(xi_inv(LatticePath::parse(kPi)).str() == kTau);
    CHECK(xi_inv(LatticePath::parse("EN")).str() == "NN");
    CHECK(xi_inv(LatticePath::parse("NE")).str() == "NE");
    CHECK_THROWS_AS(xi_inv(LatticePath::parse("NNE")), std::domain_error);  // endpoint (1,2)
}

TEST_CASE("xi preserves the peak position multiset") {
    for (int len = 0; len <= 10; ++len) {
        for (long long mask = 0; mask < (1LL << len); ++mask) {
            std::string w;
            for (int i = 0; i < len; ++i) w.push_back((mask >> i) & 1 ? 'N' : 'E');
            const LatticePath tau = LatticePath::parse(w);
            if (!is_partial_dyck(tau, len)) continue;
            const LatticePath image = xi(tau);
            std::multiset<int> before;
            std::multiset<int> after;
            for (const auto& p : peaks(tau)) before.insert(p.position());
            for (const auto& p : peaks(image)) after.insert(p.position());
            CHECK(before == after);
        }
    }
}

TEST_CASE("to_grand and from_grand") {
    CHECK(to_grand(Permutation::parse(kSigma)).str() == kPi);
    CHECK(to_grand(Permutation::parse("1 2")).str() == "EN");
    CHECK(from_grand(LatticePath::parse(kPi), 11).str() == kSigma);
    CHECK_THROWS_AS(from_grand(LatticePath::parse(kPi), 12), std::domain_error);
}

TEST_CASE("two-stage bijection: roundtrip, image and statistic transport up to n = 10") {
    for (int n = 0; n <= 10; ++n) {
        std::set<LatticePath> image;
        for_each_member(Family::I321, n, [&](const Permutation& sigma) {
            const LatticePath tau = delta(sigma);
            CHECK(is_partial_dyck(tau, n));
            CHECK(delta_inv(tau) == sigma);
            const LatticePath pi = xi(tau);
            CHECK(image.insert(pi).second);
            CHECK(xi_inv(pi) == tau);
            CHECK(from_grand(pi, n) == sigma);

            const StatRecord r = stats(sigma);
            CHECK(r.maj == sump(tau));
            CHECK(r.maj == sump(pi));
            CHECK(r.des == static_cast<int>(peaks(tau).size()));
            CHECK(r.des == static_cast<int>(peaks(pi).size()));
            if (n > 0) {
                CHECK(*r.lead == b_subset_index(pi) + 1);
                CHECK(*r.lead >= 1);
                CHECK(*r.lead <= n / 2 + 1);
            }
        });
        CHECK(BigInt(static_cast<long long>(image.size())) == binomial(n, n / 2));
        if (n > 0) {
            for (const LatticePath& pi : image) {
                CHECK(pi.easts() == (n + 1) / 2);
                CHECK(pi.norths() == n / 2);
            }
            CHECK(BigInt(rectangle_size(n / 2, (n + 1) / 2)) == binomial(n, n / 2));
        }
    }
}
