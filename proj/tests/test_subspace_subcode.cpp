#include <gtest/gtest.h>

#include <numeric>

#include "oracles.hpp"
#include "rsc/subspace_subcode.hpp"

using namespace rsc;

TEST(Cosets, CosetOfOneMod2047) {
    const auto cs = cyclotomic_cosets(11);
    const auto& c1 = (*cs)[1];
    EXPECT_EQ(c1.leader, 1u);
    EXPECT_EQ(c1.elements, (std::vector<std::uint32_t>{1, 2, 4, 8, 16, 32, 64, 128, 256, 512, 1024}));
}

TEST(Cosets, ZeroAndFiveMod15) {
    const auto cs = cyclotomic_cosets(4);
    EXPECT_EQ((*cs)[0].elements, (std::vector<std::uint32_t>{0}));
    const auto it = std::find_if(cs->begin(), cs->end(), [](const auto& c) { return c.leader == 5; });
    ASSERT_NE(it, cs->end());
    EXPECT_EQ(it->elements, (std::vector<std::uint32_t>{5, 10}));
}

TEST(CosetsProperty, PartitionAndClosure) {
    for (unsigned m = 2; m <= 14; ++m) {
        const std::uint32_t n = (1u << m) - 1;
        std::vector<int> hits(n, 0);
        for (const auto& c : *cyclotomic_cosets(m)) {
            ASSERT_EQ(c.leader, c.elements.front());
            ASSERT_EQ(m % c.size(), 0u);
            for (auto x : c.elements) {
                ++hits[x];
                ASSERT_TRUE(std::binary_search(c.elements.begin(), c.elements.end(), (2 * x) % n));
            }
        }
        ASSERT_TRUE(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
    EXPECT_THROW(cyclotomic_cosets(1), std::invalid_argument);
}

TEST(LowerBound, M11K16V7) {
    const auto d = lower_bound_L(11, 16, 7);
    const auto& row = d.rows[1];
    EXPECT_EQ(row.j, 1u);
    EXPECT_EQ(row.d, 11u);
    EXPECT_EQ(row.e, 5u);
    EXPECT_EQ(row.a, 5u);
    EXPECT_EQ(row.term, 11);
    EXPECT_EQ(d.L, 11);
}

TEST(LowerBound, SevenFourFive) {
    const auto d = lower_bound_L(7, 4, 5);
    EXPECT_EQ(d.rows[1].e, 3u);
    EXPECT_EQ(d.rows[1].term, 7);
    EXPECT_EQ(d.L, 7);
}

TEST(LowerBound, NineSevenSixIsZero) {
    EXPECT_EQ(lower_bound_L(9, 7, 6).L, 0);
    EXPECT_FALSE(is_nontrivial(9, 7, 6));
}

TEST(LowerBound, FullSubspaceGivesMk) {
    for (unsigned m = 2; m <= 16; ++m)
        for (std::uint64_t k = 1; k <= 32 && k < (1u << m); ++k) ASSERT_EQ(lower_bound_L(m, k, m).L, long(m * k));
}

TEST(LowerBoundProperty, AjIntegralAndTermsNonNegative) {
    for (unsigned m = 2; m <= 12; ++m)
        for (std::uint64_t k = 1; k < (1u << m); k += 1 + k / 4)
            for (unsigned v = 0; v <= m; ++v) {
                const auto d = lower_bound_L(m, k, v);
                long sum = 0;
                unsigned members = 0;
                for (const auto& r : d.rows) {
                    ASSERT_EQ(r.a * r.d, m * r.e);
                    ASSERT_GE(r.term, 0);
                    sum += r.term;
                    members += r.e;
                }
                ASSERT_EQ(sum, d.L);
                ASSERT_EQ(members, k);
            }
}

TEST(ExactK, Extremes) {
    for (unsigned m : {3u, 4u, 5u}) {
        const auto f = make_field(2, m);
        for (std::uint64_t k : {1, 2, 3}) {
            EXPECT_EQ(exact_K(f, k, SubspaceSpec::canonical(f, m)), long(m * k));
            EXPECT_EQ(exact_K(f, k, SubspaceSpec::canonical(f, 0)), 0);
        }
    }
}

TEST(ExactK, Q2048K16V7AtLeastEleven) {
    const auto f = make_field(2, 11);
    const long K = exact_K(f, 16, SubspaceSpec::canonical(f, 7));
    EXPECT_GE(K, 11);
    EXPECT_GE(K, lower_bound_L(11, 16, 7).L);
}

TEST(ExactK, Errors) {
    EXPECT_THROW(exact_K(make_field(3, 2), 2, SubspaceSpec::canonical(make_field(3, 2), 1)), std::invalid_argument);
    EXPECT_THROW(exact_K(make_field(2, 13), 2, SubspaceSpec::canonical(make_field(2, 13), 1)), std::invalid_argument);
    EXPECT_THROW(exact_K(make_field(2, 4), 2, SubspaceSpec::canonical(make_field(2, 5), 1)), std::invalid_argument);
}

TEST(ExactKProperty, MatchesEnumerationForTinyFields) {
    for (unsigned m = 2; m <= 4; ++m) {
        const auto f = make_field(2, m);
        for (std::uint64_t k = 1; k <= 3 && k < f->q() - 1; ++k)
            for (unsigned v = 0; v <= m; ++v) {
                const auto S = SubspaceSpec::canonical(f, v);
                ASSERT_EQ(exact_K(f, k, S), oracle::enumerated_K(*f, k, S.elements())) << m << " " << k << " " << v;
            }
        // a non-canonical subspace too
        if (m >= 3) {
            const SubspaceSpec S(f, {f->exp(3), f->exp(5)});
            ASSERT_EQ(exact_K(f, 2, S), oracle::enumerated_K(*f, 2, S.elements()));
        }
    }
}

TEST(ExactKProperty, SandwichAboveL) {
    for (unsigned m = 2; m <= 6; ++m) {
        const auto f = make_field(2, m);
        for (std::uint64_t k = 1; k <= 8 && k < f->q(); ++k)
            for (unsigned v = 0; v <= m; ++v)
                ASSERT_LE(lower_bound_L(m, k, v).L, exact_K(f, k, SubspaceSpec::canonical(f, v))) << m << k << v;
    }
}

TEST(BestV, Examples) {
    EXPECT_EQ(best_v(12, 12), 7u);
    EXPECT_EQ(best_v(2, 2), 2u);
    EXPECT_EQ(best_v(7, 7), 5u);
    EXPECT_TRUE(is_nontrivial(11, 16, 7));
    EXPECT_TRUE(is_nontrivial(5, 3, 5));
}

TEST(BestVProperty, ChosenVIsSeparableAndMaximal) {
    for (unsigned w1 = 1; w1 <= 40; ++w1)
        for (unsigned w2 = 1; w2 <= w1; ++w2) {
            const auto v = best_v(w1, w2);
            ASSERT_TRUE(v);
            ASSERT_LE(std::uint64_t{1} << *v, std::uint64_t{w1} * w2);
            ASSERT_TRUE(lemma31_case(2, *v, w1, w2));
            for (unsigned u = *v + 1; (std::uint64_t{1} << u) <= std::uint64_t{w1} * w2; ++u)
                ASSERT_FALSE(lemma31_case(2, u, w1, w2));
        }
}
