#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "polydiag/limits.hpp"

using namespace polydiag;

namespace {

SetPartition P(int n, const std::vector<std::vector<int>>& blocks) {
    return SetPartition::from_blocks(n, blocks);
}

ApproachProfile from_entries(int n, const std::vector<std::tuple<int, int, Rational>>& entries) {
    std::vector<std::vector<Rational>> e(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(n)));
    for (const auto& [i, j, v] : entries) e[i - 1][j - 1] = e[j - 1][i - 1] = v;
    return ApproachProfile(n, std::move(e));
}

// The 4-point family: 1 and 2 collide at rate a, 3 and 4 at rate b, the two
// pairs at rate 1.
ApproachProfile pair_profile(Rational a, Rational b) {
    return from_entries(4, {{1, 2, a},
                            {3, 4, b},
                            {1, 3, Rational(1)},
                            {1, 4, Rational(1)},
                            {2, 3, Rational(1)},
                            {2, 4, Rational(1)}});
}

// Witness curves in the plane: (0,0), (t^3,0), (t,0), (t+t^2,0).
CurveFamily witness_curves(bool swapped) {
    CurveFamily fam;
    fam.n = 4;
    fam.m = 2;
    auto poly = [](std::vector<long> coeffs) {
        std::vector<Rational> c;
        for (long v : coeffs) c.emplace_back(v);
        return c;
    };
    fam.coeffs = {
        {poly({0}), poly({0})},
        {swapped ? poly({0, 0, 1}) : poly({0, 0, 0, 1}), poly({0})},
        {poly({0, 1}), poly({0})},
        {swapped ? poly({0, 1, 0, 1}) : poly({0, 1, 1}), poly({0})},
    };
    return fam;
}

} // namespace

TEST_CASE("profile validation") {
    auto good = pair_profile(Rational(3), Rational(2));
    CHECK(good.valid());
    CHECK(good.violations().empty());

    // A broken triple: 1~2 and 2~3 collide fast, but 1~3 not at all.
    auto bad = from_entries(3, {{1, 2, Rational(2)}, {2, 3, Rational(2)}, {1, 3, Rational(0)}});
    CHECK_FALSE(bad.valid());
    auto v = bad.violations();
    REQUIRE(!v.empty());
    CHECK(v[0] == std::array<int, 3>{1, 2, 3});

    CHECK(ApproachProfile(4, std::vector<std::vector<Rational>>(
                                 4, std::vector<Rational>(4, Rational(0))))
              .valid());

    // Asymmetry and negativity are structural errors.
    std::vector<std::vector<Rational>> asym(3, std::vector<Rational>(3, Rational(0)));
    asym[0][1] = 1;
    CHECK_THROWS_AS(ApproachProfile(3, asym), validation_error);
    std::vector<std::vector<Rational>> neg(2, std::vector<Rational>(2, Rational(0)));
    neg[0][1] = neg[1][0] = Rational(-1, 2);
    CHECK_THROWS_AS(ApproachProfile(2, neg), validation_error);
}

TEST_CASE("profiles from curves") {
    auto p1 = profile_from_curves(witness_curves(false));
    CHECK(p1.exponent(1, 2) == 3);
    CHECK(p1.exponent(3, 4) == 2);
    CHECK(p1.exponent(1, 3) == 1);
    CHECK(p1.exponent(1, 4) == 1);
    CHECK(p1.exponent(2, 3) == 1);
    CHECK(p1.exponent(2, 4) == 1);

    auto p2 = profile_from_curves(witness_curves(true));
    CHECK(p2.exponent(1, 2) == 2);
    CHECK(p2.exponent(3, 4) == 3);

    // Constant distinct curves never collide.
    CurveFamily constants;
    constants.n = 3;
    constants.m = 1;
    constants.coeffs = {{{Rational(0)}}, {{Rational(1)}}, {{Rational(2)}}};
    auto p3 = profile_from_curves(constants);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) CHECK(p3.exponent(i, j) == 0);

    // Identical curves are not a configuration family.
    CurveFamily dup;
    dup.n = 2;
    dup.m = 1;
    dup.coeffs = {{{Rational(1), Rational(2)}}, {{Rational(1), Rational(2)}}};
    CHECK_THROWS_WITH_AS(profile_from_curves(dup), doctest::Contains("identical"),
                         validation_error);
}

TEST_CASE("classifying the 4-point collision pair") {
    auto first = classify(pair_profile(Rational(3), Rational(2)));
    Chain expected1(4, {SetPartition::bottom(4), P(4, {{1, 2}, {3, 4}}),
                        P(4, {{1, 2}, {3}, {4}})});
    CHECK(first.chain == expected1);
    CHECK(first.nest == Nest(4, {{1, 2, 3, 4}, {1, 2}, {3, 4}}));

    auto second = classify(pair_profile(Rational(2), Rational(3)));
    Chain expected2(4, {SetPartition::bottom(4), P(4, {{1, 2}, {3, 4}}),
                        P(4, {{1}, {2}, {3, 4}})});
    CHECK(second.chain == expected2);
    CHECK(second.nest == first.nest);
    CHECK(second.chain != first.chain);
    // Same shape, different levels: the blowdown target does not separate
    // them, the leveled stratification does.
    CHECK(first.tree.forget() == second.tree.forget());
    CHECK(first.tree != second.tree);

    // The witness curves realize exactly these profiles.
    CHECK(classify(profile_from_curves(witness_curves(false))).chain == expected1);
    CHECK(classify(profile_from_curves(witness_curves(true))).chain == expected2);
}

TEST_CASE("degenerate classifications") {
    auto none = classify(ApproachProfile(
        4, std::vector<std::vector<Rational>>(4, std::vector<Rational>(4, Rational(0)))));
    CHECK(none.chain == Chain(4));
    CHECK(none.nest == Nest(4));
    CHECK(none.tree.depth() == 0);

    // Everything collides at one rate: the single-element chain at bottom.
    auto all = classify(from_entries(3, {{1, 2, Rational(1)},
                                         {1, 3, Rational(1)},
                                         {2, 3, Rational(1)}}));
    CHECK(all.chain == Chain(3, {SetPartition::bottom(3)}));

    CHECK_THROWS_WITH_AS(
        classify(from_entries(3, {{1, 2, Rational(2)}, {2, 3, Rational(2)}})),
        doctest::Contains("ultrametric"), validation_error);
}

TEST_CASE("random chains round-trip through their rate profiles") {
    std::mt19937 rng(98417);
    for (int n = 2; n <= 8; ++n) {
        auto all = all_partitions(n);
        for (int trial = 0; trial < 40; ++trial) {
            // Random chain by a refinement walk.
            std::vector<SetPartition> members;
            std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
            SetPartition cur = all[pick(rng)];
            while (!cur.is_top()) {
                members.push_back(cur);
                if (rng() % 3 == 0) break;
                std::vector<SetPartition> finer;
                for (const auto& cand : all)
                    if (cand != cur && !cand.is_top() && leq(cur, cand)) finer.push_back(cand);
                if (finer.empty()) break;
                std::uniform_int_distribution<std::size_t> pf(0, finer.size() - 1);
                cur = finer[pf(rng)];
            }
            if (members.empty()) continue;
            Chain chain(n, members);

            // Rates: e_ab = how far into the chain a and b stay together,
            // scaled by a random positive rational.
            Rational scale(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5));
            std::vector<std::vector<Rational>> e(
                static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n)));
            for (int a = 1; a <= n; ++a)
                for (int b = a + 1; b <= n; ++b) {
                    int depth = 0;
                    for (const auto& p : chain.partitions())
                        if (p.block_of(a) == p.block_of(b)) ++depth;
                    e[a - 1][b - 1] = e[b - 1][a - 1] = Rational(depth) * scale;
                }
            ApproachProfile profile(n, std::move(e));
            CHECK(profile.valid());
            auto cls = classify(profile);
            CHECK(cls.chain == chain);
            CHECK(cls.nest == nest_of(chain));
        }
    }
}

TEST_CASE("curve profiles always satisfy the valuation law") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<int> deg(0, 4);
    for (int trial = 0; trial < 200; ++trial) {
        CurveFamily fam;
        fam.n = 4;
        fam.m = 2;
        fam.coeffs.resize(4);
        for (auto& point : fam.coeffs) {
            point.resize(2);
            for (auto& coord : point) {
                coord.resize(static_cast<std::size_t>(deg(rng)) + 1);
                for (auto& c : coord) c = Rational(coeff(rng));
            }
        }
        try {
            auto profile = profile_from_curves(fam);
            CHECK(profile.valid());
            (void)classify(profile);
        } catch (const validation_error&) {
            // Identical curves: rejected, fine.
        }
    }
}
