#include <catch2/catch_amalgamated.hpp>

#include <symcodes/tableaux.hpp>

#include <set>
#include <vector>

using namespace symcodes;

TEST_CASE("tableau construction and validation", "[tableaux]") {
    YoungTableau t(Partition{3, 2}, {{1, 2, 3}, {4, 5}});
    CHECK(t.entry(0, 2) == 3);
    CHECK(t.entry(1, 1) == 5);
    CHECK(t.to_string() == "1,2,3 / 4,5");
    CHECK(t.is_standard());

    CHECK_THROWS_AS(YoungTableau(Partition{3, 2}, {{1, 2, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(YoungTableau(Partition{3, 2}, {{1, 2}, {4, 5, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(YoungTableau(Partition{2, 1}, {{1, 1}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS(YoungTableau(Partition{2, 1}, {{1, 5}, {2}}), std::invalid_argument);

    CHECK_FALSE(YoungTableau(Partition{2, 2}, {{1, 3}, {2, 4}}).is_standard() ==
                YoungTableau(Partition{2, 2}, {{1, 4}, {2, 3}}).is_standard());
}

TEST_CASE("transposition of tableaux", "[tableaux]") {
    YoungTableau t(Partition{3, 2}, {{1, 3, 5}, {2, 4}});
    YoungTableau tt = t.transpose();
    CHECK(tt.shape == Partition{2, 2, 1});
    CHECK(tt.rows == std::vector<std::vector<int>>{{1, 2}, {3, 4}, {5}});
    CHECK(tt.transpose() == t);
    CHECK(tt.is_standard());

    for (const auto& lam : partitions_of(6))
        for (const auto& s : standard_tableaux(lam)) {
            CHECK(s.transpose().is_standard());
            CHECK(s.transpose().transpose() == s);
        }
}

TEST_CASE("standard tableaux counts match irreducible dimensions", "[tableaux]") {
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lam : partitions_of(n)) {
            auto ts = standard_tableaux(lam);
            CHECK(ts.size() == dimension(lam));
            std::set<std::string> distinct;
            for (const auto& t : ts) {
                CHECK(t.is_standard());
                CHECK(t.shape == lam);
                distinct.insert(t.to_string());
            }
            CHECK(distinct.size() == ts.size());
        }
    }
}

TEST_CASE("standard tableaux come out in row-major lexicographic order", "[tableaux]") {
    auto ts = standard_tableaux(Partition{3, 2});
    REQUIRE(ts.size() == 5);
    CHECK(ts[0].rows == std::vector<std::vector<int>>{{1, 2, 3}, {4, 5}});
    CHECK(ts[1].rows == std::vector<std::vector<int>>{{1, 2, 4}, {3, 5}});
    CHECK(ts[2].rows == std::vector<std::vector<int>>{{1, 2, 5}, {3, 4}});
    CHECK(ts[3].rows == std::vector<std::vector<int>>{{1, 3, 4}, {2, 5}});
    CHECK(ts[4].rows == std::vector<std::vector<int>>{{1, 3, 5}, {2, 4}});

    // first tableau is always the row-major filling
    for (const auto& lam : partitions_of(6)) {
        auto first = standard_tableaux(lam).front();
        int v = 1;
        for (int i = 0; i < lam.rows(); ++i)
            for (int j = 0; j < lam[i]; ++j) CHECK(first.entry(i, j) == v++);
    }
}

TEST_CASE("row and column stabilizers", "[tableaux]") {
    const auto& s5 = GroupTable::get(GroupKind::Sn, 5);
    YoungTableau t(Partition{3, 2}, {{1, 2, 3}, {4, 5}});
    auto rs = row_stabilizer(t, s5);
    auto cs = column_stabilizer(t, s5);
    CHECK(rs.size() == 12);  // 3! * 2!
    CHECK(cs.size() == 4);   // 2! * 2! * 1!

    // stabilizers are subgroups and preserve the row (resp. column) of every cell
    auto row_of = [&](int v) {
        for (int i = 0; i < t.shape.rows(); ++i)
            for (int j = 0; j < t.shape[i]; ++j)
                if (t.entry(i, j) == v) return i;
        return -1;
    };
    std::set<int> rset(rs.begin(), rs.end());
    for (int a : rs) {
        CHECK(rset.count(s5.inv(a)) == 1);
        for (int b : rs) CHECK(rset.count(s5.mul(a, b)) == 1);
        const auto& p = s5.element(a);
        for (int v = 1; v <= 5; ++v) CHECK(row_of(p.apply(v)) == row_of(v));
    }
    auto tt = t.transpose();
    auto col_of = [&](int v) {
        for (int i = 0; i < tt.shape.rows(); ++i)
            for (int j = 0; j < tt.shape[i]; ++j)
                if (tt.entry(i, j) == v) return i;
        return -1;
    };
    for (int a : cs) {
        const auto& p = s5.element(a);
        for (int v = 1; v <= 5; ++v) CHECK(col_of(p.apply(v)) == col_of(v));
    }

    // sizes across all shapes of degree 4
    const auto& s4 = GroupTable::get(GroupKind::Sn, 4);
    for (const auto& lam : partitions_of(4)) {
        uint64_t rexp = 1, cexp = 1;
        for (int i = 0; i < lam.rows(); ++i)
            for (int k = 2; k <= lam[i]; ++k) rexp *= static_cast<uint64_t>(k);
        Partition conj = conjugate(lam);
        for (int i = 0; i < conj.rows(); ++i)
            for (int k = 2; k <= conj[i]; ++k) cexp *= static_cast<uint64_t>(k);
        for (const auto& t4 : standard_tableaux(lam)) {
            CHECK(row_stabilizer(t4, s4).size() == rexp);
            CHECK(column_stabilizer(t4, s4).size() == cexp);
        }
    }

    const auto& a5 = GroupTable::get(GroupKind::An, 5);
    CHECK_THROWS_AS(row_stabilizer(t, a5), std::invalid_argument);
    CHECK_THROWS_AS(row_stabilizer(t, s4), std::invalid_argument);
}

TEST_CASE("partition classification over concrete fields", "[tableaux]") {
    // non-self-conjugate shapes always pair with their conjugates
    CHECK(classify_partition(Partition{3, 1}, FieldSpec(5, 1)) == PartitionClass::ConjugatePair);
    CHECK(classify_partition(Partition{4}, FieldSpec(7, 1)) == PartitionClass::ConjugatePair);

    // p_lambda = -3: non-square mod 5, square mod 7 (= 4 = 2^2)
    CHECK(classify_partition(Partition{2, 1}, FieldSpec(5, 1)) == PartitionClass::SelfConjMerged);
    CHECK(classify_partition(Partition{2, 1}, FieldSpec(7, 1)) == PartitionClass::SelfConjSplit);
    CHECK(classify_partition(Partition{2, 2}, FieldSpec(5, 1)) == PartitionClass::SelfConjMerged);
    CHECK(classify_partition(Partition{2, 2}, FieldSpec(7, 1)) == PartitionClass::SelfConjSplit);

    // p_lambda = 5 for (3,1,1): non-square mod 7, square mod 11
    CHECK(classify_partition(Partition{3, 1, 1}, FieldSpec(7, 1)) == PartitionClass::SelfConjMerged);
    CHECK(classify_partition(Partition{3, 1, 1}, FieldSpec(11, 1)) == PartitionClass::SelfConjSplit);

    // p_lambda = -7 for (4,1,1,1): -7 = 4 mod 11 is square, -7 = 6 mod 13 is not
    CHECK(classify_partition(Partition{4, 1, 1, 1}, FieldSpec(11, 1)) == PartitionClass::SelfConjSplit);
    CHECK(classify_partition(Partition{4, 1, 1, 1}, FieldSpec(13, 1)) == PartitionClass::SelfConjMerged);

    // quadratic extensions absorb every discriminant: merged cases split
    for (uint32_t p : {5u, 7u, 11u, 13u}) {
        CHECK(classify_partition(Partition{2, 1}, FieldSpec(p, 2)) == PartitionClass::SelfConjSplit);
        CHECK(classify_partition(Partition{3, 1, 1}, FieldSpec(p, 2)) == PartitionClass::SelfConjSplit);
    }
}
