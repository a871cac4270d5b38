#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "rsc/finite_field.hpp"

using namespace rsc;

TEST(FiniteField, PrimeFieldGF2HasAlphaOne) {
    const auto f = make_field(2, 1);
    EXPECT_EQ(f->q(), 2u);
    EXPECT_EQ(f->alpha().value, 1u);
}

TEST(FiniteField, GF2048HasUnitGroupOf2047) {
    const auto f = make_field(2, 11);
    EXPECT_EQ(f->q(), 2048u);
    EXPECT_EQ(f->order(f->alpha()), 2047u);
}

TEST(FiniteField, GF243) {
    const auto f = make_field(3, 5);
    EXPECT_EQ(f->q(), 243u);
    EXPECT_EQ(f->order(f->alpha()), 242u);
}

TEST(FiniteField, RejectsBadParameters) {
    EXPECT_THROW(make_field(4, 1), std::invalid_argument);
    EXPECT_THROW(make_field(2, 0), std::invalid_argument);
    EXPECT_THROW(make_field(2, 21), std::invalid_argument);
    EXPECT_THROW(make_field_of_order(6), std::invalid_argument);
}

TEST(FiniteField, GF5Multiplication) {
    const auto f = make_field(5, 1);
    EXPECT_EQ(f->mul(Elem{2}, Elem{3}).value, 1u);
    EXPECT_EQ(f->alpha().value, 2u);
    EXPECT_EQ(f->log(Elem{4}), 2u);
}

TEST(FiniteField, GF4AlphaSquaredIsAlphaPlusOne) {
    const auto f = make_field(2, 2);
    EXPECT_EQ(f->modulus(), (std::vector<unsigned>{1, 1, 1}));
    const Elem a = f->alpha();
    EXPECT_EQ(a.value, 2u);
    EXPECT_EQ(f->mul(a, a), f->add(a, f->one()));
}

TEST(FiniteField, InverseAndLogOfZeroThrow) {
    const auto f = make_field(2, 4);
    EXPECT_THROW(f->inv(Elem{0}), std::domain_error);
    EXPECT_THROW(f->log(Elem{0}), std::domain_error);
}

TEST(FiniteField, LogOfOneAndAlpha) {
    for (auto [p, m] : {std::pair{2u, 5u}, {3u, 3u}, {7u, 1u}, {2u, 17u}}) {
        const auto f = make_field(p, m);
        EXPECT_EQ(f->log(f->one()), 0u);
        EXPECT_EQ(f->log(f->alpha()), 1u);
    }
}

TEST(FiniteField, MismatchedFieldElementsThrow) {
    const FieldElement a(make_field(2, 3), 3u), b(make_field(2, 4), 3u);
    EXPECT_THROW((void)(a + b), std::invalid_argument);
    EXPECT_THROW((void)(a * b), std::invalid_argument);
    const FieldElement c(make_field(2, 3), 5u);
    EXPECT_EQ((a * c).value(), make_field(2, 3)->mul(Elem{3}, Elem{5}));
}

TEST(FiniteField, SpanExamples) {
    const auto f = make_field(2, 3);
    EXPECT_EQ(span(*f, {}), (ElemSet{Elem{0}}));
    EXPECT_EQ(span(*f, {f->one()}), (ElemSet{Elem{0}, Elem{1}}));
    const ElemSet s = span(*f, {f->one(), f->alpha()});
    EXPECT_EQ(s, make_set({Elem{0}, f->one(), f->alpha(), f->add(f->one(), f->alpha())}));
}

TEST(FiniteField, SumAndProductSets) {
    const auto f = make_field(5, 1);
    const ElemSet E = make_set({Elem{1}, Elem{4}});
    EXPECT_EQ(set_sum(*f, E, {Elem{0}}), E);
    EXPECT_EQ(set_product(*f, E, {Elem{1}}), E);
    EXPECT_EQ(set_product(*f, E, make_set({Elem{1}, Elem{2}})), make_set({Elem{1}, Elem{2}, Elem{3}, Elem{4}}));
}

TEST(FiniteField, RegistryIsSmallestPrimitive) {
    // GF(8): x^3+x+1 encodes lower coefficients (1,1,0) = 3; x^3+x^2+1 is 5.
    EXPECT_EQ(make_field(2, 3)->modulus(), (std::vector<unsigned>{1, 1, 0, 1}));
    EXPECT_EQ(make_field(2, 4)->modulus(), (std::vector<unsigned>{1, 1, 0, 0, 1}));
    // GF(9): x^2+x+2 is the smallest primitive (x^2+1 is irreducible but x has order 4).
    EXPECT_EQ(make_field(3, 2)->modulus(), (std::vector<unsigned>{2, 1, 1}));
    for (auto [p, m] : {std::pair{2u, 8u}, {3u, 4u}, {5u, 3u}, {2u, 11u}, {3u, 7u}}) {
        const auto f = make_field(p, m);
        EXPECT_EQ(f->alpha().value, p) << p << "^" << m;
    }
}

TEST(FiniteField, RegistryParser) {
    std::istringstream in("# comment\n2 3 1 0 1 1\n\n5 1 3 1  # GF(5)\n");
    const auto reg = detail::parse_registry(in);
    ASSERT_EQ(reg.entries.size(), 2u);
    EXPECT_EQ(reg.entries.at({2, 3}), (std::vector<unsigned>{1, 0, 1, 1}));
    std::istringstream bad("2 3 1 1\n");
    EXPECT_THROW(detail::parse_registry(bad), std::invalid_argument);
}

TEST(FiniteField, NonPrimitiveModulusStillGivesPrimitiveGenerator) {
    // x^2+1 over GF(3) is irreducible; x has order 4, so the generator differs from x.
    const Field f(3, 2, {1, 0, 1});
    EXPECT_EQ(f.order(f.alpha()), 8u);
    EXPECT_NE(f.alpha().value, 3u);
    EXPECT_THROW(Field(2, 2, {1, 0, 1}), std::invalid_argument);
}

TEST(FiniteFieldProperty, AxiomsExhaustiveSmallFields) {
    for (std::uint64_t q : {4, 5, 8, 9, 16, 25, 27, 32, 49, 64}) {
        const auto f = make_field_of_order(q);
        const oracle::NaiveField nf(*f);
        for (std::uint32_t a = 0; a < q; ++a) {
            for (std::uint32_t b = 0; b < q; ++b) {
                ASSERT_EQ(f->mul(Elem{a}, Elem{b}).value, nf.mul(a, b));
                ASSERT_EQ(f->add(Elem{a}, Elem{b}).value, nf.add(a, b));
                for (std::uint32_t c = 0; c < q; c += (q > 16 ? 7 : 1)) {
                    const Elem A{a}, B{b}, C{c};
                    ASSERT_EQ(f->add(f->add(A, B), C), f->add(A, f->add(B, C)));
                    ASSERT_EQ(f->mul(A, f->add(B, C)), f->add(f->mul(A, B), f->mul(A, C)));
                }
            }
            if (a) {
                ASSERT_EQ(f->mul(Elem{a}, f->inv(Elem{a})), f->one());
            }
        }
    }
}

TEST(FiniteFieldProperty, AxiomsRandomLargeFields) {
    std::mt19937 rng(2024);
    for (auto [p, m] : {std::pair{2u, 11u}, {3u, 7u}, {2u, 17u}, {5u, 5u}}) {
        const auto f = make_field(p, m);
        const oracle::NaiveField nf(*f);
        std::uniform_int_distribution<std::uint32_t> d(0, f->q() - 1);
        for (int t = 0; t < 10000; ++t) {
            const Elem a{d(rng)}, b{d(rng)}, c{d(rng)};
            ASSERT_EQ(f->mul(a, b).value, nf.mul(a.value, b.value));
            ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
            ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            ASSERT_EQ(f->add(a, f->neg(a)), f->zero());
        }
    }
}

TEST(FiniteFieldProperty, AlphaPowersArePrimitiveAndLogInverts) {
    for (std::uint64_t q : {4u, 7u, 16u, 81u, 125u, 243u, 2048u, 2187u, 1u << 17}) {
        const auto f = make_field_of_order(q);
        std::set<std::uint32_t> seen;
        const std::uint64_t step = q > 5000 ? 97 : 1;
        for (std::uint64_t i = 0; i + 1 < q; i += step) {
            const Elem e = f->exp(i);
            ASSERT_NE(e.value, 0u);
            seen.insert(e.value);
            ASSERT_EQ(f->log(e), i);
        }
        if (step == 1) {
            EXPECT_EQ(seen.size(), q - 1);
        }
        EXPECT_EQ(f->pow(f->alpha(), static_cast<std::int64_t>(q - 1)), f->one());
    }
}

TEST(FiniteFieldProperty, SpanSizeMatchesRank) {
    std::mt19937 rng(7);
    for (auto [p, m] : {std::pair{2u, 6u}, {3u, 4u}, {5u, 3u}}) {
        const auto f = make_field(p, m);
        std::uniform_int_distribution<std::uint32_t> d(0, f->q() - 1);
        for (int t = 0; t < 200; ++t) {
            std::vector<Elem> b(rng() % (m + 2));
            for (auto& e : b) e = Elem{d(rng)};
            const std::size_t r = gf_rank(*f, b);
            std::uint64_t expect = 1;
            for (std::size_t i = 0; i < r; ++i) expect *= p;
            ASSERT_EQ(span(*f, b).size(), expect);
        }
    }
}

TEST(FiniteField, SubspaceSpec) {
    const auto f = make_field(2, 4);
    const auto S = SubspaceSpec::canonical(f, 2);
    EXPECT_EQ(S.dim(), 2u);
    EXPECT_EQ(S.elements(), make_set({Elem{0}, Elem{1}, Elem{2}, Elem{3}}));
    EXPECT_THROW(SubspaceSpec(f, {Elem{1}, Elem{1}}), std::invalid_argument);
    EXPECT_THROW(SubspaceSpec::canonical(f, 5), std::invalid_argument);
}

TEST(FiniteField, BabyStepGiantStepWithoutTables) {
    FieldLimits lim;
    lim.table_threshold = 0;
    const Field slow(2, 11, registry_polynomial(2, 11), lim);
    const auto fast = make_field(2, 11);
    EXPECT_FALSE(slow.has_tables());
    for (std::uint32_t a = 1; a < 2048; a += 13) {
        ASSERT_EQ(slow.log(Elem{a}), fast->log(Elem{a}));
        ASSERT_EQ(slow.mul(Elem{a}, Elem{a + 1}), fast->mul(Elem{a}, Elem{a + 1}));
    }
}
