#include <gtest/gtest.h>

#include <random>

#include "rsc/collusion.hpp"
#include "rsc/rs_code.hpp"

using namespace rsc;

namespace {

Polynomial random_poly(const Field& f, std::uint32_t k, std::mt19937& rng) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.q() - 1);
    std::vector<Elem> c(k);
    for (auto& e : c) e = Elem{d(rng)};
    return Polynomial(c);
}

}  // namespace

TEST(RsCode, ConstantEncodesToConstantWord) {
    const auto f = make_field(2, 3);
    const RsSpec spec(f, 2);
    EXPECT_EQ(encode(spec, Polynomial::constant(f->one())), Word(7, f->one()));
    EXPECT_EQ(encode(spec, Polynomial::constant(Elem{5})), Word(7, Elem{5}));
}

TEST(RsCode, IdentityOverGF5) {
    const auto f = make_field(5, 1);
    const RsSpec spec(f, 2);
    EXPECT_EQ(encode(spec, Polynomial::monomial(*f, 1, f->one())), (Word{Elem{1}, Elem{2}, Elem{4}, Elem{3}}));
}

TEST(RsCode, EncodeRejectsHighDegree) {
    const auto f = make_field(5, 1);
    EXPECT_THROW(encode(RsSpec(f, 2), Polynomial::monomial(*f, 2, f->one())), std::invalid_argument);
    EXPECT_THROW(RsSpec(f, 5), std::invalid_argument);
    EXPECT_THROW(RsSpec(f, 0), std::invalid_argument);
}

TEST(RsCode, Parameters) {
    const RsSpec spec(make_field(2, 4), 5);
    EXPECT_EQ(spec.n(), 15u);
    EXPECT_EQ(spec.d(), 11u);
    EXPECT_EQ(spec.d(), spec.n() - spec.k() + 1);
}

TEST(RsCodeProperty, EncodeIsLinear) {
    std::mt19937 rng(11);
    const auto f = make_field(3, 3);
    const RsSpec spec(f, 6);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_poly(*f, 6, rng), b = random_poly(*f, 6, rng);
        const Word ca = encode(spec, a), cb = encode(spec, b), cs = encode(spec, a.plus(*f, b));
        for (std::size_t i = 0; i < ca.size(); ++i) ASSERT_EQ(f->add(ca[i], cb[i]), cs[i]);
    }
}

TEST(RsCode, ImageOfConstant) {
    const auto f = make_field(2, 3);
    EXPECT_EQ(image(Polynomial::constant(Elem{5}), *f), (ElemSet{Elem{5}}));
}

TEST(RsCode, AdditiveImageHasSizeWSquared) {
    // f(x) = x^(q/w^2) - x with w | q
    for (auto [p, m, w] : {std::tuple{2u, 4u, 2u}, {2u, 6u, 4u}, {3u, 4u, 3u}, {2u, 8u, 4u}, {3u, 4u, 9u}}) {
        const auto f = make_field(p, m);
        const std::uint64_t e = f->q() / (w * w);
        if (e < 2) continue;
        const Polynomial g =
            Polynomial::monomial(*f, e, f->one()).plus(*f, Polynomial::monomial(*f, 1, f->neg(f->one())));
        EXPECT_EQ(image(g, *f).size(), w * w) << p << "^" << m << " w=" << w;
    }
}

TEST(RsCode, PowerImageIncludesZero) {
    for (auto [q, k1] : {std::pair{16u, 3u}, {16u, 5u}, {81u, 8u}, {125u, 4u}, {64u, 7u}}) {
        const auto f = make_field_of_order(q);
        const ElemSet im = image(Polynomial::monomial(*f, k1, f->one()), *f);
        EXPECT_EQ(im.size(), 1 + (q - 1) / k1);
        EXPECT_EQ(im.front().value, 0u);
    }
}

TEST(RsCode, ThresholdK) {
    EXPECT_EQ(threshold_k(2048, 12, 12), 16u);
    EXPECT_EQ(threshold_k(256, 15, 15), 3u);
    EXPECT_EQ(threshold_k(5, 2, 2), 2u);
    EXPECT_THROW(threshold_k(3, 2, 2), std::invalid_argument);
    EXPECT_THROW(threshold_k(16, 0, 2), std::invalid_argument);
}

TEST(RsCode, DistanceBound) {
    EXPECT_FALSE(distance_bound_equiv(5, 2, 2, 2));
    EXPECT_FALSE(distance_bound_equiv(2048, 16, 12, 12));
    for (std::uint64_t q : {4, 5, 16, 2187})
        for (std::uint64_t w : {1, 2, 7}) EXPECT_TRUE(distance_bound_equiv(q, 1, w, w));
}

TEST(RsCodeProperty, DistanceBoundEquivMatchesDirect) {
    for (std::uint64_t q = 4; q <= 2187; ++q) {
        if (!detail::prime_power(q)) continue;
        for (std::uint64_t w1 = 1; w1 <= 6; ++w1)
            for (std::uint64_t w2 = 1; w2 <= w1; ++w2)
                for (std::uint64_t k = 1; k < q; k += (q > 300 ? 37 : 1))
                    ASSERT_EQ(distance_bound_equiv(q, k, w1, w2), distance_bound_direct(q, k, w1, w2))
                        << q << " " << k << " " << w1 << " " << w2;
    }
}

TEST(RsCodeProperty, ThresholdIsSmallestViolatingDimension) {
    for (std::uint64_t q : {16, 81, 125, 2048, 2187})
        for (std::uint64_t w = 2; w * w < q; ++w) {
            const std::uint64_t k = threshold_k(q, w, w);
            ASSERT_FALSE(distance_bound_equiv(q, k, w, w));
            ASSERT_TRUE(distance_bound_equiv(q, k - 1, w, w));
        }
}

TEST(RsCodeProperty, MdsDistanceForSmallFields) {
    for (std::uint64_t q : {4, 5, 7, 8, 9}) {
        const auto f = make_field_of_order(q);
        for (std::uint32_t k = 1; k <= 3 && k < q; ++k) {
            const RsSpec spec(f, k);
            const ExplicitCode c(f, materialize_code(spec));
            if (c.size() < 2) continue;
            ASSERT_EQ(minimum_distance(c), q - k) << q << " " << k;
        }
    }
    const auto f16 = make_field(2, 4);
    const ExplicitCode c(f16, materialize_code(RsSpec(f16, 2)));
    EXPECT_EQ(minimum_distance(c), 14u);
}

TEST(RsCodeProperty, EncodeInjectiveAndNested) {
    std::mt19937 rng(5);
    const auto f = make_field(2, 5);
    for (std::uint32_t k = 1; k < 8; ++k) {
        const RsSpec a(f, k), b(f, k + 1);
        for (int t = 0; t < 50; ++t) {
            const auto g = random_poly(*f, k, rng), h = random_poly(*f, k, rng);
            // ev(g) lies in RS_{k+1} because the same polynomial has degree < k+1.
            ASSERT_EQ(encode(a, g), encode(b, g));
            if (!(g == h)) {
                ASSERT_NE(encode(a, g), encode(a, h));
            }
        }
    }
}

TEST(RsCode, SubspacePolynomialIsAdditiveWithKernel) {
    const auto f = make_field(2, 6);
    const std::vector<Elem> basis{Elem{1}, Elem{2}};
    const Polynomial g = subspace_polynomial(*f, basis);
    EXPECT_EQ(g.degree(), 4);
    for (std::uint32_t a = 0; a < 64; ++a) {
        for (std::uint32_t b = 0; b < 64; b += 5)
            ASSERT_EQ(g.eval(*f, f->add(Elem{a}, Elem{b})), f->add(g.eval(*f, Elem{a}), g.eval(*f, Elem{b})));
    }
    EXPECT_EQ(image(g, *f).size(), 16u);
}

TEST(RsCode, MaterializeGuard) {
    const auto f = make_field(2, 4);
    EXPECT_THROW(materialize_code(RsSpec(f, 6), 1000), std::invalid_argument);
    EXPECT_EQ(materialize_code(RsSpec(f, 2)).size(), 256u);
}
