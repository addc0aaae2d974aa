#include <catch2/catch_amalgamated.hpp>

#include <symcodes/partition.hpp>

#include <cstdint>
#include <map>
#include <vector>

using namespace symcodes;

TEST_CASE("partition construction and validation", "[partition]") {
    Partition lam{3, 2, 1};
    CHECK(lam.sum() == 6);
    CHECK(lam.rows() == 3);
    CHECK(lam[0] == 3);
    CHECK(lam[2] == 1);
    CHECK(lam.to_string() == "(3,2,1)");
    CHECK(Partition{}.empty());
    CHECK(Partition{}.to_string() == "()");

    CHECK_THROWS_AS((Partition{0}), std::invalid_argument);
    CHECK_THROWS_AS((Partition{3, -1}), std::invalid_argument);
    CHECK_THROWS_AS((Partition{1, 2}), std::invalid_argument);
}

TEST_CASE("partition enumeration", "[partition]") {
    const int counts[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
    for (int n = 0; n <= 9; ++n) {
        auto ps = partitions_of(n);
        CHECK(static_cast<int>(ps.size()) == counts[n]);
        for (const auto& lam : ps) CHECK(lam.sum() == n);
        if (n > 0) {
            CHECK(ps.front() == Partition{n});
            CHECK(ps.back() == Partition(std::vector<int>(n, 1)));
        }
    }
    auto p4 = partitions_of(4);
    std::vector<Partition> want = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    CHECK(p4 == want);
    CHECK_THROWS_AS(partitions_of(-1), std::invalid_argument);
}

TEST_CASE("conjugation", "[partition]") {
    CHECK(conjugate(Partition{3, 1}) == Partition{2, 1, 1});
    CHECK(conjugate(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(conjugate(Partition{}) == Partition{});
    for (int n = 0; n <= 7; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(conjugate(conjugate(lam)) == lam);
}

TEST_CASE("self-conjugate shapes for n up to 7", "[partition]") {
    // exactly one self-conjugate partition per n in 3..7
    std::map<int, Partition> expected = {
        {3, Partition{2, 1}},
        {4, Partition{2, 2}},
        {5, Partition{3, 1, 1}},
        {6, Partition{3, 2, 1}},
        {7, Partition{4, 1, 1, 1}},
    };
    for (int n = 3; n <= 7; ++n) {
        std::vector<Partition> self;
        for (const auto& lam : partitions_of(n))
            if (is_self_conjugate(lam)) self.push_back(lam);
        REQUIRE(self.size() == 1);
        CHECK(self[0] == expected.at(n));
    }
}

TEST_CASE("hook numbers", "[partition]") {
    Partition lam{3, 2};
    CHECK(hook_number(lam, 1, 1) == 4);
    CHECK(hook_number(lam, 1, 2) == 3);
    CHECK(hook_number(lam, 1, 3) == 1);
    CHECK(hook_number(lam, 2, 1) == 2);
    CHECK(hook_number(lam, 2, 2) == 1);
    CHECK_THROWS_AS(hook_number(lam, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(hook_number(lam, 1, 4), std::invalid_argument);
    CHECK_THROWS_AS(hook_number(lam, 3, 1), std::invalid_argument);

    // hook product times dimension equals n! for every shape
    for (int n = 1; n <= 7; ++n) {
        uint64_t fact = 1;
        for (int k = 2; k <= n; ++k) fact *= static_cast<uint64_t>(k);
        for (const auto& mu : partitions_of(n)) {
            uint64_t prod = 1;
            for (int i = 1; i <= mu.rows(); ++i)
                for (int j = 1; j <= mu[i - 1]; ++j) prod *= static_cast<uint64_t>(hook_number(mu, i, j));
            CHECK(dimension(mu) * prod == fact);
        }
    }
}

TEST_CASE("irreducible dimensions", "[partition]") {
    CHECK(dimension(Partition{3}) == 1);
    CHECK(dimension(Partition{1, 1, 1}) == 1);
    CHECK(dimension(Partition{2, 1}) == 2);
    CHECK(dimension(Partition{3, 1}) == 3);
    CHECK(dimension(Partition{2, 2}) == 2);
    CHECK(dimension(Partition{3, 2}) == 5);
    CHECK(dimension(Partition{4, 2, 1}) == 35);
    CHECK(dimension(Partition{2, 2, 2, 1}) == 14);

    // conjugation preserves dimension, and sum of squares is the group order
    for (int n = 1; n <= 7; ++n) {
        uint64_t fact = 1, sum = 0;
        for (int k = 2; k <= n; ++k) fact *= static_cast<uint64_t>(k);
        for (const auto& lam : partitions_of(n)) {
            uint64_t d = dimension(lam);
            CHECK(dimension(conjugate(lam)) == d);
            sum += d * d;
        }
        CHECK(sum == fact);
    }
}

TEST_CASE("diagonal data of self-conjugate shapes", "[partition]") {
    struct Row {
        Partition lam;
        int r;
        std::vector<int> hooks;
        long long p;
    };
    std::vector<Row> table = {
        {Partition{2, 1}, 1, {3}, -3},
        {Partition{2, 2}, 2, {3, 1}, -3},
        {Partition{3, 1, 1}, 1, {5}, 5},
        {Partition{3, 2, 1}, 2, {5, 1}, 5},
        {Partition{4, 1, 1, 1}, 1, {7}, -7},
    };
    for (const auto& row : table) {
        auto d = self_conj_data(row.lam);
        CHECK(d.lambda == row.lam);
        CHECK(d.r == row.r);
        CHECK(d.diagonal_hooks == row.hooks);
        CHECK(d.p_lambda == row.p);
    }
    CHECK_THROWS_AS(self_conj_data(Partition{3, 1}), std::invalid_argument);
    CHECK_THROWS_AS(self_conj_data(Partition{4}), std::invalid_argument);
}
