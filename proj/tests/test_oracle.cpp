#include <doctest.h>

#include "triflag/bfun.hpp"
#include "triflag/oracle.hpp"

using namespace triflag;
using oracle::Partition;

TEST_CASE("partition round trip") {
    CHECK(oracle::partition_of(Weight(3, {1, 0})) == Partition{1, 0, 0});
    CHECK(oracle::partition_of(Weight(3, {1, 1})) == Partition{2, 1, 0});
    CHECK(oracle::weight_of(3, {2, 1, 0}) == Weight(3, {1, 1}));
    CHECK(oracle::reduce_columns({3, 2, 2}) == Partition{1, 0, 0});
}

TEST_CASE("weyl dimensions") {
    CHECK(oracle::weyl_dim(2, Weight(2, {3})) == 4);
    CHECK(oracle::weyl_dim(2, Weight(2, {0})) == 1);
    CHECK(oracle::weyl_dim(3, Weight(3, {1, 1})) == 8);
    CHECK_THROWS_AS(oracle::weyl_dim(2, Weight(2, {-1})), std::invalid_argument);
}

TEST_CASE("tableau counts agree with the Weyl product and the closed H") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<int> c(n - 1, 0);
        auto next = [&]() {
            for (auto& x : c) {
                if (x < 4) { ++x; return true; }
                x = 0;
            }
            return false;
        };
        do {
            int sum = 0;
            for (int x : c) sum += x;
            if (sum > 4) continue;
            Weight w(n, c);
            Int dim = oracle::weyl_dim(n, w);
            CHECK(oracle::ssyt_count(n, w) == dim);
            CHECK(h_delta(w) == Rational(dim));
        } while (next());
    }
}

TEST_CASE("pieri strips") {
    CHECK(oracle::pieri_strips({1, 0}, 1, 2) ==
          std::vector<Partition>{{2, 0}, {1, 1}});
    CHECK(oracle::pieri_strips({2, 1}, 0, 2) == std::vector<Partition>{{2, 1}});
    CHECK(oracle::pieri_strips({0, 0}, 2, 2) == std::vector<Partition>{{2, 0}});
    CHECK(oracle::pieri_strips({2, 0, 0}, 2, 3) ==
          std::vector<Partition>{{4, 0, 0}, {3, 1, 0}, {2, 2, 0}});
    CHECK_THROWS_AS(oracle::pieri_strips({1, 0}, -1, 2), std::invalid_argument);
}

TEST_CASE("invariant dimensions at n=2") {
    CHECK(oracle::invariant_dim(TripleWeight(Weight(2, {1}), Weight(2, {1}), 0)) == 1);
    CHECK(oracle::invariant_dim(TripleWeight(Weight(2, {1}), Weight(2, {1}), 1)) == 0);
    CHECK(oracle::invariant_dim(generator_beta(2, 2)) == 1);
    CHECK(oracle::invariant_dim(TripleWeight(Weight(2, {1}), Weight(2, {0}), 0)) == 0);
    CHECK_THROWS_AS(oracle::invariant_dim(TripleWeight(Weight(2, {-1}), Weight(2, {0}), 0)),
                    std::invalid_argument);
}

TEST_CASE("every cone generator carries exactly one invariant") {
    for (int n = 2; n <= 4; ++n) {
        for (int i = 1; i <= n - 1; ++i)
            CHECK(oracle::invariant_dim(generator_alpha(i, n)) == 1);
        for (int j = 1; j <= n; ++j)
            CHECK(oracle::invariant_dim(generator_beta(j, n)) == 1);
    }
}

TEST_CASE("invariant dimension is symmetric under swapping the flag factors") {
    for (int n = 2; n <= 3; ++n) {
        const int bound = n == 2 ? 3 : 2;
        const int m = 2 * (n - 1) + 1;
        std::vector<int> c(m, 0);
        auto next = [&]() {
            for (auto& x : c) {
                if (x < bound) { ++x; return true; }
                x = 0;
            }
            return false;
        };
        do {
            Weight l1(n, {c.begin(), c.begin() + (n - 1)});
            Weight l2(n, {c.begin() + (n - 1), c.begin() + 2 * (n - 1)});
            const int l = c[m - 1];
            CHECK(oracle::invariant_dim(TripleWeight(l1, l2, l)) ==
                  oracle::invariant_dim(TripleWeight(l2, l1, l)));
        } while (next());
    }
}

TEST_CASE("invariants multiply: the cone property") {
    const int bound = 2;
    std::vector<TripleWeight> with_invariant;
    std::vector<int> c(3, 0);
    auto next = [&]() {
        for (auto& x : c) {
            if (x < bound) { ++x; return true; }
            x = 0;
        }
        return false;
    };
    do {
        TripleWeight t(Weight(2, {c[0]}), Weight(2, {c[1]}), c[2]);
        if (oracle::invariant_dim(t) >= 1)
            with_invariant.push_back(t);
    } while (next());
    CHECK(!with_invariant.empty());
    for (const auto& u : with_invariant)
        for (const auto& v : with_invariant)
            CHECK(oracle::invariant_dim(u + v) >= 1);
}

TEST_CASE("membership scan is clean at small rank") {
    auto r2 = oracle::omega_scan(2, 4);
    CHECK(r2.checked == 125);
    CHECK(r2.clean());
    auto r3 = oracle::omega_scan(3, 2);
    CHECK(r3.checked == 243);
    CHECK(r3.clean());
}
