#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "polydiag/counting.hpp"
#include "polydiag/hodge.hpp"
#include "polydiag/strata.hpp"

using namespace polydiag;

namespace {

SetPartition P(int n, const std::vector<std::vector<int>>& blocks) {
    return SetPartition::from_blocks(n, blocks);
}

Chain fig_chain() {
    return Chain(9, {P(9, {{1, 2, 3, 5, 7}, {9}, {4, 6, 8}}),
                     P(9, {{1, 5}, {2, 3}, {7}, {9}, {4, 6, 8}}),
                     P(9, {{1}, {5}, {2, 3}, {7}, {9}, {4, 6}, {8}})});
}

} // namespace

TEST_CASE("bricks") {
    Brick b(1, IntegerPartition({1, 1, 1}));
    CHECK(b.dim() == 2);
    CHECK_FALSE(b.simple());
    CHECK(Brick(2, IntegerPartition({3})).simple());
    CHECK(Brick(2, IntegerPartition({3})).dim() == 5);
    CHECK(b.to_string() == "M^1_(1,1,1)");
    CHECK_THROWS_AS(Brick(0, IntegerPartition({1})), validation_error);
    CHECK_THROWS_AS(Brick(1, IntegerPartition()), validation_error);
}

TEST_CASE("divisor fibers") {
    auto [base1, fiber1] = divisor_fiber(P(4, {{1, 2}, {3, 4}}), 1);
    CHECK(base1 == 2);
    CHECK(fiber1.shape() == IntegerPartition({1, 1}));
    CHECK(fiber1.dim() == 1); // a P^1 when m = 1

    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= 3; ++m) {
            auto [base, fiber] = divisor_fiber(SetPartition::bottom(n), m);
            CHECK(base == 1);
            CHECK(fiber.shape() == IntegerPartition({n - 1}));
        }

    auto [base6, fiber6] = divisor_fiber(P(6, {{1, 2}, {3, 4}, {5, 6}}), 1);
    CHECK(fiber6.shape() == IntegerPartition({1, 1, 1}));
    CHECK(fiber6.dim() == 2); // the plane blown up at three points

    CHECK_THROWS_AS(divisor_fiber(SetPartition::top(4), 1), validation_error);
}

TEST_CASE("stratum intersections") {
    Chain bottom4(4, {SetPartition::bottom(4)});
    Chain cross(4, {P(4, {{1, 2}, {3, 4}})});
    auto merged = intersect_chains(bottom4, cross);
    REQUIRE(merged.has_value());
    CHECK(*merged == Chain(4, {SetPartition::bottom(4), P(4, {{1, 2}, {3, 4}})}));

    CHECK_FALSE(intersect_chains(Chain(4, {P(4, {{1, 2}, {3}, {4}})}),
                                 Chain(4, {P(4, {{1}, {2}, {3, 4}})}))
                    .has_value());

    // gamma inside gamma': the intersection is the smaller stratum.
    Chain sub(4, {P(4, {{1, 2}, {3, 4}})});
    Chain super(4, {SetPartition::bottom(4), P(4, {{1, 2}, {3, 4}}), P(4, {{1, 2}, {3}, {4}})});
    CHECK(intersect_chains(sub, super) == super);

    CHECK_THROWS_AS(intersect_chains(Chain(3), Chain(4)), validation_error);
}

TEST_CASE("intersection calculus over all chain pairs at n <= 4") {
    for (int n = 2; n <= 4; ++n) {
        std::vector<Chain> chains;
        for_each_chain(n, std::nullopt, [&](const Chain& c) { return chains.push_back(c), true; });
        for (const auto& a : chains) {
            CHECK(intersect_chains(a, a) == a); // idempotent
            for (const auto& b : chains) {
                auto ab = intersect_chains(a, b);
                CHECK(ab == intersect_chains(b, a)); // commutative
                // Containment: S_a contains S_b iff a is a subchain of b.
                bool a_sub_b = std::includes(b.partitions().begin(), b.partitions().end(),
                                             a.partitions().begin(), a.partitions().end());
                CHECK((ab.has_value() && *ab == b) == a_sub_b);
                // Associative where defined.
                for (const auto& c : chains) {
                    if (c.length() != 1) continue;
                    auto left = ab ? intersect_chains(*ab, c) : std::nullopt;
                    auto bc = intersect_chains(b, c);
                    auto right = bc ? intersect_chains(a, *bc) : std::nullopt;
                    if (ab && bc) CHECK(left == right);
                }
            }
        }
    }
}

TEST_CASE("bundle descriptions") {
    auto d = bundle_description(fig_chain(), 1);
    CHECK(d.base_size == 3);
    REQUIRE(d.fibers.size() == 3);
    CHECK(d.fibers[0].shape() == IntegerPartition({2}));
    CHECK(d.fibers[1].shape() == IntegerPartition({1, 1}));
    CHECK(d.fibers[2].shape() == IntegerPartition({1, 1}));
    CHECK(d.dim == 6); // 3 + 1 + 1 + 1 = 9 - 3
    CHECK(d.codim == 3);
    CHECK(d.to_string() == "X<3> x M^1_(2) x M^1_(1,1) x M^1_(1,1)");

    for (int n = 2; n <= 5; ++n) {
        auto db = bundle_description(Chain(n, {SetPartition::bottom(n)}), 2);
        CHECK(db.base_size == 1);
        REQUIRE(db.fibers.size() == 1);
        CHECK(db.fibers[0].shape() == IntegerPartition({n - 1}));
    }

    auto d2 = bundle_description(
        Chain(4, {SetPartition::bottom(4), P(4, {{1, 2}, {3, 4}})}), 3);
    CHECK(d2.base_size == 1);
    REQUIRE(d2.fibers.size() == 2);
    CHECK(d2.fibers[0].shape() == IntegerPartition({1}));
    CHECK(d2.fibers[1].shape() == IntegerPartition({1, 1}));

    auto whole = bundle_description(Chain(5), 2);
    CHECK(whole.whole_space);
    CHECK(whole.base_size == 5);
    CHECK(whole.fibers.empty());
    CHECK(whole.dim == 10);
}

TEST_CASE("dimension bookkeeping for every chain at n <= 6") {
    for (int n = 2; n <= 6; ++n)
        for (int m = 1; m <= 2; ++m) {
            long checked = 0;
            for_each_chain(n, std::nullopt, [&](const Chain& c) {
                Stratum s(m, c); // the constructor enforces the identity
                int fiber_dim = 0;
                for (const auto& sh : s.fiber_shapes()) fiber_dim += m * sh.sum() - 1;
                CHECK(m * n - c.length() == m * s.base_size() + fiber_dim);
                ++checked;
                return true;
            });
            CHECK(BigInt(checked) == polydiag_strata(n));
        }
}

TEST_CASE("strata of a brick") {
    // lambda = (2): the interval is L_[3] minus extremes, three incomparable
    // middle elements; chains are the empty one and three singletons.
    std::vector<BrickStratum> found;
    for_each_brick_stratum(IntegerPartition({2}),
                           [&](const BrickStratum& bs) { return found.push_back(bs), true; });
    REQUIRE(found.size() == 4);
    CHECK(found[0].chain.empty());
    REQUIRE(found[0].shapes.size() == 1);
    CHECK(found[0].shapes[0] == IntegerPartition({2}));
    for (std::size_t i = 1; i < 4; ++i) {
        CHECK(found[i].chain.size() == 1);
        CHECK(found[i].shapes ==
              std::vector<IntegerPartition>{IntegerPartition({1}), IntegerPartition({1})});
    }

    // lambda = (1): an empty interval, only the empty chain.
    long only = 0;
    for_each_brick_stratum(IntegerPartition({1}), [&](const BrickStratum& bs) {
        CHECK(bs.chain.empty());
        return ++only, true;
    });
    CHECK(only == 1);

    // lambda = (1,1): empty chain plus two singletons.
    long count11 = 0;
    for_each_brick_stratum(IntegerPartition({1, 1}),
                           [&](const BrickStratum&) { return ++count11, true; });
    CHECK(count11 == 3);
}

TEST_CASE("blowup centers of the simple three-brick, graded by stage") {
    // For lambda = (3) the ambient lattice is L_[4]: at the first stage after
    // the origin, 7 rank-2 elements contribute copies of M^m_1; then 6 rank-3
    // elements contribute copies of M^m_2.
    std::map<int, long> count_by_rank;
    std::map<int, std::set<IntegerPartition>> base_shape_by_rank;
    for_each_brick_stratum(IntegerPartition({3}), [&](const BrickStratum& bs) {
        if (bs.chain.size() != 1) return true;
        int rank = bs.chain[0][0].block_count();
        ++count_by_rank[rank];
        base_shape_by_rank[rank].insert(bs.shapes[0]);
        return true;
    });
    CHECK(count_by_rank == std::map<int, long>{{2, 7}, {3, 6}});
    CHECK(base_shape_by_rank[2] == std::set<IntegerPartition>{IntegerPartition({1})});
    CHECK(base_shape_by_rank[3] == std::set<IntegerPartition>{IntegerPartition({2})});
}

TEST_CASE("permutahedral Euler numbers") {
    // The permutahedral variety on r letters has Euler number r!, the vertex
    // count of the permutahedron.
    HodgeContext h1(1);
    BigInt factorial = 1;
    for (int r = 1; r <= 6; ++r) {
        factorial *= r;
        CHECK(h1.brick_poly(IntegerPartition(std::vector<int>(r, 1))).eval(1) == factorial);
    }
}

TEST_CASE("brick decompositions") {
    auto d = brick_decomposition(IntegerPartition({1, 1, 1}), 1);
    CHECK(d.permutahedral);
    CHECK(d.torus_rank == 2);
    CHECK(d.base_parts == std::vector<int>{1, 1, 1});

    auto d21 = brick_decomposition(IntegerPartition({2, 1}), 2);
    CHECK_FALSE(d21.permutahedral);
    CHECK(d21.torus_rank == 1);
    CHECK(d21.base_parts == std::vector<int>{2, 1});

    CHECK_THROWS_AS(brick_decomposition(IntegerPartition({3}), 1), validation_error);
}

TEST_CASE("refinement order on integer partitions") {
    CHECK(brick_order_leq(IntegerPartition({5, 3}), IntegerPartition({4, 2, 1, 1})));
    CHECK_FALSE(brick_order_leq(IntegerPartition({4, 4}), IntegerPartition({5, 2, 1})));
    CHECK_THROWS_AS(brick_order_leq(IntegerPartition({2}), IntegerPartition({3})),
                    validation_error);

    // Partial-order axioms, exhaustively for weight <= 7.
    for (int w = 1; w <= 7; ++w) {
        std::vector<IntegerPartition> all;
        std::vector<int> cur;
        std::function<void(int, int)> rec = [&](int rest, int max_part) {
            if (rest == 0) {
                all.emplace_back(cur);
                return;
            }
            for (int p = std::min(rest, max_part); p >= 1; --p) {
                cur.push_back(p);
                rec(rest - p, p);
                cur.pop_back();
            }
        };
        rec(w, w);
        for (const auto& a : all) CHECK(brick_order_leq(a, a));
        for (const auto& a : all)
            for (const auto& b : all) {
                bool ab = brick_order_leq(a, b), ba = brick_order_leq(b, a);
                if (ab && ba) CHECK(a == b);
                for (const auto& c : all)
                    if (ab && brick_order_leq(b, c)) CHECK(brick_order_leq(a, c));
            }
    }
}
