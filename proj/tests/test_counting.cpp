#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <atomic>
#include <map>
#include <thread>

#include "polydiag/counting.hpp"
#include "polydiag/trees.hpp"

using namespace polydiag;

TEST_CASE("the chain-count recurrence") {
    CHECK(z(1) == 1);
    CHECK(z(2) == 1);
    CHECK(z(5) == 436);
    CHECK(z(9) == 518277560);
    CHECK_THROWS_AS(z(0), validation_error);
    CHECK_THROWS_AS(z(-3), validation_error);
}

TEST_CASE("strata totals for both compactifications") {
    // n:      2  3   4    5     6      7       8         9
    const long polydiag_row[] = {2, 8, 64, 872, 18024, 525520, 20541392, 1036555120};
    const long fm_row[] = {2, 8, 52, 472, 5504, 78416, 1320064, 25637824};
    for (int n = 2; n <= 9; ++n) {
        CHECK(polydiag_strata(n) == polydiag_row[n - 2]);
        CHECK(fm_strata(n) == fm_row[n - 2]);
        CHECK(fm_strata(n) <= polydiag_strata(n));
        CHECK((n <= 3) == (fm_strata(n) == polydiag_strata(n)));
    }
    CHECK_THROWS_AS(polydiag_strata(1), validation_error);
    CHECK_THROWS_AS(fm_strata(1), validation_error);
}

TEST_CASE("strata by codimension") {
    CHECK(strata_by_codim(5, 1) == 51); // B(5) - 1
    CHECK(strata_by_codim(4, 3) == 18); // 2^{1-4} 4! 3!
    for (int n = 2; n <= 6; ++n) CHECK(strata_by_codim(n, 0) == 1);

    for (int n = 2; n <= 9; ++n) {
        CHECK(strata_by_codim(n, 1) == bell(n) - 1);
        // Saturated chains: 2^{1-n} n! (n-1)!.
        BigInt saturated = 1;
        for (int i = 2; i <= n; ++i) saturated *= i;
        for (int i = 2; i <= n - 1; ++i) saturated *= i;
        saturated /= BigInt(1) << (n - 1);
        CHECK(strata_by_codim(n, n - 1) == saturated);
    }

    // Row sums against the totals, and against direct enumeration.
    for (int n = 2; n <= 8; ++n) {
        BigInt sum = 0;
        for (int k = 0; k <= n - 1; ++k) sum += strata_by_codim(n, k);
        CHECK(sum == polydiag_strata(n));
    }
    for (int n = 2; n <= 6; ++n)
        for (int k = 0; k <= n - 1; ++k) {
            long direct = 0;
            for_each_chain(n, k, [&](const Chain&) { return ++direct, true; });
            CHECK(strata_by_codim(n, k) == direct);
        }

    CHECK_THROWS_AS(strata_by_codim(4, 4), validation_error);
    CHECK_THROWS_AS(strata_by_codim(4, -1), validation_error);
}

TEST_CASE("partition counts by block-size multiset") {
    CHECK(partitions_of_shape(4, {2, 2}) == 3);
    CHECK(partitions_of_shape(5, {3, 2}) == 10);
    CHECK(partitions_of_shape(5, {2, 2, 1}) == 15);
    CHECK(partitions_of_shape(6, {2, 2, 2}) == 15);
    CHECK_THROWS_AS(partitions_of_shape(5, {3, 3}), validation_error);

    // Against enumeration for every shape at n <= 7.
    for (int n = 2; n <= 7; ++n) {
        std::map<std::vector<int>, long> observed;
        for_each_partition(n, std::nullopt, [&](const SetPartition& p) {
            auto sizes = p.block_sizes();
            std::sort(sizes.begin(), sizes.end(), std::greater<int>());
            ++observed[sizes];
            return true;
        });
        for (const auto& [sizes, count] : observed)
            CHECK(partitions_of_shape(n, sizes) == count);
    }
}

TEST_CASE("blowdown stage schedule") {
    CHECK(theta_schedule(2).empty());
    CHECK(theta_schedule(3).empty());

    auto s4 = theta_schedule(4);
    REQUIRE(s4.size() == 1);
    CHECK(s4[0].stage == 2);
    REQUIRE(s4[0].centers.size() == 1);
    CHECK(s4[0].centers[0].first == std::vector<int>{2, 2});
    CHECK(s4[0].centers[0].second == 3);
    CHECK(s4[0].total() == 3);

    auto s5 = theta_schedule(5);
    REQUIRE(s5.size() == 2);
    CHECK(s5[0].centers == decltype(s5[0].centers){{{3, 2}, BigInt(10)}});
    CHECK(s5[1].centers == decltype(s5[1].centers){{{2, 2, 1}, BigInt(15)}});

    auto s6 = theta_schedule(6);
    REQUIRE(s6.size() == 3);
    std::vector<std::vector<int>> stage2, stage3, stage4;
    for (const auto& [sizes, count] : s6[0].centers) stage2.push_back(sizes);
    for (const auto& [sizes, count] : s6[1].centers) stage3.push_back(sizes);
    for (const auto& [sizes, count] : s6[2].centers) stage4.push_back(sizes);
    CHECK(stage2 == std::vector<std::vector<int>>{{4, 2}, {3, 3}});
    CHECK(stage3 == std::vector<std::vector<int>>{{3, 2, 1}, {2, 2, 2}});
    CHECK(stage4 == std::vector<std::vector<int>>{{2, 2, 1, 1}});

    // Every center count agrees with enumeration: partitions with rho = stage
    // and more than one essential block.
    for (int n = 4; n <= 7; ++n) {
        for (const auto& stage : theta_schedule(n)) {
            long direct = 0;
            for_each_partition(n, stage.stage, [&](const SetPartition& p) {
                if (p.essential_count() > 1) ++direct;
                return true;
            });
            CHECK(stage.total() == direct);
        }
    }
}

TEST_CASE("memo tables are safe under concurrent readers") {
    std::vector<std::thread> workers;
    std::atomic<bool> ok{true};
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&ok] {
            for (int round = 0; round < 50; ++round) {
                if (z(9) != 518277560) ok = false;
                if (bell(9) != 21147) ok = false;
                if (stirling2(9, 4) != 7770) ok = false;
                if (fm_strata(8) != 1320064) ok = false;
            }
        });
    for (auto& w : workers) w.join();
    CHECK(ok);
}

TEST_CASE("construction stage schedule") {
    using Stage = std::pair<int, BigInt>;
    CHECK(construction_schedule(4) ==
          std::vector<Stage>{{1, BigInt(1)}, {2, BigInt(7)}, {3, BigInt(6)}});
    CHECK(construction_schedule(2) == std::vector<Stage>{{1, BigInt(1)}});
    CHECK(construction_schedule(5) ==
          std::vector<Stage>{{1, BigInt(1)}, {2, BigInt(15)}, {3, BigInt(25)}, {4, BigInt(10)}});
}
