#include <hyparr/charpoly.hpp>
#include <hyparr/generators.hpp>
#include <hyparr/lattice.hpp>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace hyparr;

namespace {

std::vector<std::size_t> level_counts(const IntersectionLattice& l) {
    std::vector<std::size_t> out;
    for (const auto& s : level_summary(l))
        out.push_back(s.count);
    return out;
}

std::vector<Integer> ints(std::initializer_list<long long> v) {
    return {v.begin(), v.end()};
}

void expect_matches_brute_force(const Arrangement& a) {
    const auto l = build_lattice(a);
    const auto brute = oracle::brute_mobius(a);
    const auto levels = level_summary(l);
    ASSERT_EQ(levels.size(), brute.size());
    for (const auto& s : levels)
        EXPECT_EQ(s.mobius, brute.at(s.codim)) << "codim " << s.codim;
}

} // namespace

TEST(Arrangement, RejectsZeroRow) {
    try {
        Arrangement(1, RatMatrix{{1, 0}, {0, 0}});
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("form 1"), std::string::npos);
    }
}

TEST(Arrangement, RejectsProportionalRows) {
    try {
        Arrangement(2, RatMatrix{{1, 2, 0}, {0, 0, 1}, {-2, -4, 0}});
        FAIL();
    } catch (const InputError& e) {
        EXPECT_NE(std::string(e.what()).find("forms 0 and 2"), std::string::npos);
    }
}

TEST(Arrangement, RejectsWrongWidth) {
    EXPECT_THROW(Arrangement(2, RatMatrix{{1, 0}}), InputError);
}

TEST(BuildLattice, Boolean) {
    const auto l = build_lattice(builtin::boolean(2));
    EXPECT_EQ(l.size(), 8u);
    EXPECT_EQ(level_counts(l), (std::vector<std::size_t>{1, 3, 3, 1}));
    for (const auto& f : l.flats())
        EXPECT_EQ(f.mobius, f.codim % 2 ? -1 : 1);
}

TEST(BuildLattice, FourLines) {
    const auto l = build_lattice(fixture::four_lines());
    EXPECT_EQ(l.size(), 10u);
    EXPECT_EQ(level_counts(l), (std::vector<std::size_t>{1, 4, 4, 1}));
    const auto s = level_summary(l);
    EXPECT_EQ(s[1].mobius, ints({-1, -1, -1, -1}));
    EXPECT_EQ(s[2].mobius, ints({1, 1, 1, 2}));
    EXPECT_EQ(s[2].mobius_sum(), 5);
    EXPECT_EQ(s[3].mobius, ints({-2}));

    // The triple line x = y = 0 has members {0, 1, 2}.
    const auto triple = l.find(RatMatrix{{1, 0, 0}, {0, 1, 0}});
    ASSERT_TRUE(triple);
    EXPECT_EQ(l.flat(*triple).members, (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(l.flat(*triple).mobius, 2);
}

TEST(BuildLattice, SingleHyperplane) {
    const auto l = build_lattice(fixture::single(3));
    EXPECT_EQ(l.size(), 2u);
    EXPECT_EQ(l.flat(1).mobius, -1);
    EXPECT_EQ(l.flat(1).dim, 3u);
}

TEST(BuildLattice, FlatInvariants) {
    const auto a = builtin::counterexample();
    const auto l = build_lattice(a);
    EXPECT_EQ(l.flat(0).codim, 0u);
    EXPECT_TRUE(l.flat(0).members.empty());
    EXPECT_EQ(l.flat(0).mobius, 1);
    for (const auto& f : l.flats()) {
        EXPECT_EQ(f.dim + f.codim, a.ambient_dim());
        EXPECT_EQ(f.span.rows(), f.codim);
        for (std::size_t i = 0; i < a.d(); ++i) {
            const bool member = std::binary_search(f.members.begin(), f.members.end(), i);
            EXPECT_EQ(member, span_contains(f.span, a.forms().select_rows(std::vector{i})));
        }
    }
}

TEST(BuildLattice, OrderAgreesWithSpanContainment) {
    const auto l = build_lattice(builtin::counterexample());
    for (std::size_t x = 0; x < l.size(); ++x)
        for (std::size_t y = 0; y < l.size(); ++y) {
            const bool contains = x != y && span_contains(l.flat(x).span, l.flat(y).span);
            EXPECT_EQ(l.leq(y, x) && x != y, contains) << y << " vs " << x;
        }
}

TEST(BuildLattice, CounterexampleLevels) {
    const auto l = build_lattice(builtin::counterexample());
    const auto s = level_summary(l);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[1].count, 9u);
    EXPECT_EQ(s[2].count, 13u);
    EXPECT_EQ(s[2].mobius, ints({1, 1, 1, 1, 1, 1, 2, 2, 2, 2, 3, 3, 3}));
    EXPECT_EQ(s[3].mobius, ints({-15}));
}

TEST(MobiusAssign, IsIdempotent) {
    const auto l = build_lattice(fixture::four_lines());
    const auto again = mobius_assign(l);
    for (std::size_t i = 0; i < l.size(); ++i)
        EXPECT_EQ(again.flat(i).mobius, l.flat(i).mobius);
}

TEST(MobiusProperty, MatchesBruteForceOnFixtures) {
    expect_matches_brute_force(fixture::four_lines());
    expect_matches_brute_force(fixture::xyz());
    expect_matches_brute_force(builtin::counterexample());
    expect_matches_brute_force(builtin::generic(6, 2));
    expect_matches_brute_force(builtin::pencil(4, 3));
}

TEST(MobiusProperty, RandomArrangements) {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + rng() % 3, d = 1 + rng() % 7;
        const auto a = oracle::random_arrangement(rng, n, d, 3);
        expect_matches_brute_force(a);

        const auto l = build_lattice(a);
        // Level-0/1 structure.
        const auto s = level_summary(l);
        EXPECT_EQ(s[0].count, 1u);
        EXPECT_EQ(s[1].count, a.d());
        for (const auto& m : s[1].mobius)
            EXPECT_EQ(m, -1);
        // Down-set sums vanish.
        for (std::size_t x = 1; x < l.size(); ++x) {
            Integer sum = l.flat(x).mobius;
            for (auto y : l.below(x))
                sum += l.flat(y).mobius;
            EXPECT_EQ(sum, 0);
        }
    }
}

TEST(MobiusProperty, RowPermutationGivesIsomorphicLattice) {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = oracle::random_arrangement(rng, 2 + rng() % 2, 5, 2);
        std::vector<std::size_t> perm(a.d());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Arrangement b(a.n(), a.forms().select_rows(perm));
        EXPECT_EQ(level_summary(build_lattice(a)), level_summary(build_lattice(b)));
    }
}

TEST(BuildLattice, DeterministicAcrossRuns) {
    const auto a = builtin::generic(7, 3);
    const auto l1 = build_lattice(a), l2 = build_lattice(a);
    ASSERT_EQ(l1.size(), l2.size());
    for (std::size_t i = 0; i < l1.size(); ++i) {
        EXPECT_EQ(l1.flat(i).span, l2.flat(i).span);
        EXPECT_EQ(l1.flat(i).mobius, l2.flat(i).mobius);
    }
}

TEST(Center, Examples) {
    EXPECT_EQ(center(builtin::boolean(2)).dim, 0u);
    EXPECT_TRUE(is_essential(builtin::boolean(2)));
    for (std::size_t n = 2; n <= 4; ++n)
        EXPECT_EQ(center(builtin::pencil(3, n)).dim, n - 1);
    const auto a = fixture::four_lines();
    EXPECT_EQ(center(cone(a, 3)).dim, center(a).dim + 3);
}

TEST(Cone, ZeroIsIdentity) {
    EXPECT_EQ(cone(fixture::four_lines(), 0), fixture::four_lines());
}

TEST(Cone, CounterexampleToP9) {
    const auto c = cone(builtin::counterexample(), 7);
    EXPECT_EQ(c.n(), 9u);
    EXPECT_EQ(c.d(), 9u);
    // (t-5)(t-3)(t-1) t^7
    const IntPoly expected = IntPoly{-5, 1} * IntPoly{-3, 1} * IntPoly{-1, 1} * IntPoly::monomial(7);
    EXPECT_EQ(char_poly(build_lattice(c)), expected);
}

TEST(Cone, SingleHyperplaneInP1) {
    EXPECT_EQ(char_poly(build_lattice(cone(fixture::single(1), 1))), (IntPoly{0, 0, -1, 1}));
}

TEST(Essentialize, EssentialInputKeepsShape) {
    const auto e = essentialize(fixture::four_lines());
    EXPECT_EQ(e.k, 0u);
    EXPECT_EQ(e.arrangement.n(), 2u);
    EXPECT_EQ(level_summary(build_lattice(e.arrangement)),
              level_summary(build_lattice(fixture::four_lines())));
}

TEST(Essentialize, ConedCounterexample) {
    const auto e = essentialize(cone(builtin::counterexample(), 7));
    EXPECT_EQ(e.k, 7u);
    EXPECT_EQ(e.arrangement.n(), 2u);
    EXPECT_TRUE(is_essential(e.arrangement));
    EXPECT_EQ(level_summary(build_lattice(e.arrangement)),
              level_summary(build_lattice(builtin::counterexample())));
}

TEST(Essentialize, PencilBecomesPointsOnALine) {
    for (std::size_t d = 2; d <= 5; ++d)
        for (std::size_t n = 1; n <= 4; ++n) {
            const auto e = essentialize(builtin::pencil(d, n));
            EXPECT_EQ(e.k, n - 1);
            EXPECT_EQ(e.arrangement, builtin::pencil(d, 1));
        }
}

TEST(Essentialize, RoundTripOnRandomArrangements) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = oracle::random_arrangement(rng, 1 + rng() % 3, 1 + rng() % 4, 2);
        const auto e = essentialize(a);
        EXPECT_TRUE(is_essential(e.arrangement));
        EXPECT_EQ(e.k, center(a).dim);
        EXPECT_EQ(level_summary(build_lattice(cone(e.arrangement, e.k))),
                  level_summary(build_lattice(a)));
    }
}
