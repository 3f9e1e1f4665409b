#include "support.hpp"

#include "weitz/derivation.hpp"
#include "weitz/error.hpp"
#include "weitz/parse.hpp"

#include <gtest/gtest.h>

namespace weitz {
namespace {

TEST(Derivation, ApplyExamples) {
    const WeitzenboeckDerivation d1(1, 1);
    EXPECT_TRUE(d1.apply(parse("x1", d1.ambient())).is_zero());
    EXPECT_EQ(d1.apply(parse("y1^2", d1.ambient())), parse("2*x1*y1", d1.ambient()));

    const WeitzenboeckDerivation d2(2, 2);
    EXPECT_TRUE(d2.apply(parse("x1*z2 - y1*y2 + z1*x2", d2.ambient())).is_zero());
    EXPECT_EQ(d2.apply(parse("z1", d2.ambient())), parse("y1", d2.ambient()));
}

TEST(Derivation, AnnihilatesCovariantVariables) {
    const WeitzenboeckDerivation d(2, 1);
    EXPECT_TRUE(d.apply(parse("CX^2*CY", d.ambient())).is_zero());
    EXPECT_EQ(d.apply(parse("y1*CX + y2*CY", d.ambient())), parse("x1*CX + x2*CY", d.ambient()));
}

TEST(Derivation, AmbientMismatch) {
    const WeitzenboeckDerivation d(2, 1);
    const Polynomial p = parse("x1", Ambient::make(2, 2));
    EXPECT_THROW(d.apply(p), AmbientMismatch);
    EXPECT_THROW(d.is_in_kernel(p), AmbientMismatch);
    EXPECT_THROW(d.nilpotency_index(p), AmbientMismatch);
}

TEST(Derivation, KernelMembershipExamples) {
    const WeitzenboeckDerivation d1(2, 1);
    EXPECT_TRUE(d1.is_in_kernel(parse("x1*y2 - x2*y1", d1.ambient())));
    EXPECT_FALSE(d1.is_in_kernel(parse("y1", d1.ambient())));

    // The 3x3 determinant, expanded by hand along its columns.
    const WeitzenboeckDerivation d2(3, 2);
    const Polynomial delta = parse(
        "x1*y2*z3 + x2*y3*z1 + x3*y1*z2 - x3*y2*z1 - x2*y1*z3 - x1*y3*z2", d2.ambient());
    EXPECT_TRUE(d2.is_in_kernel(delta));
}

TEST(Derivation, NilpotencyIndexExamples) {
    const WeitzenboeckDerivation d1(1, 1);
    EXPECT_EQ(d1.nilpotency_index(Polynomial(d1.ambient())), 0U);
    EXPECT_EQ(d1.nilpotency_index(parse("y1", d1.ambient())), 2U);
    EXPECT_EQ(d1.nilpotency_index(parse("x1", d1.ambient())), 1U);
    const WeitzenboeckDerivation d2(1, 2);
    EXPECT_EQ(d2.nilpotency_index(parse("z1", d2.ambient())), 3U);
    EXPECT_EQ(d2.nilpotency_index(parse("z1^2", d2.ambient())), 5U);
}

TEST(Derivation, RejectsInvalidParameters) {
    EXPECT_THROW(WeitzenboeckDerivation(0, 1), std::invalid_argument);
    EXPECT_THROW(WeitzenboeckDerivation(1, 0), std::invalid_argument);
}

TEST(Generators, NowickiSetForTwoBlocks) {
    const GeneratorSet g = generators(2, 1);
    ASSERT_EQ(g.size(), 3U);
    EXPECT_EQ(g.items[0].label, "x1");
    EXPECT_EQ(g.items[1].label, "x2");
    EXPECT_EQ(g.items[2].label, "J1,2");
    EXPECT_EQ(format(g.items[2].value), "x1*y2 - x2*y1");
}

TEST(Generators, DiagonalHIsIncluded) {
    const GeneratorSet g = generators(1, 2);
    ASSERT_EQ(g.size(), 2U);
    EXPECT_EQ(g.items[1].label, "H1,1");
    EXPECT_EQ(g.items[1].value, parse("2*x1*z1 - y1^2", Ambient::make(1, 2)));
}

TEST(Generators, CountsAndLabelOrder) {
    const GeneratorSet g = generators(3, 2);
    EXPECT_EQ(g.size(), 13U);
    std::vector<std::string> labels;
    for (const auto& item : g.items) {
        labels.push_back(item.label);
    }
    EXPECT_EQ(labels, (std::vector<std::string>{"x1", "x2", "x3", "J1,2", "J1,3", "J2,3", "H1,1", "H1,2",
                                                "H1,3", "H2,2", "H2,3", "H3,3", "D1,2,3"}));
    for (int n = 1; n <= 6; ++n) {
        EXPECT_EQ(generators(n, 1).size(), generator_count(n, 1));
        EXPECT_EQ(generators(n, 2).size(), generator_count(n, 2));
    }
    EXPECT_EQ(generator_count(4, 2), 4U + 6U + 10U + 4U);
}

TEST(Generators, UnsupportedK) {
    EXPECT_THROW(generators(2, 3), UnsupportedK);
    EXPECT_THROW(generators(0, 1), std::invalid_argument);
}

TEST(Generators, AllLieInTheKernel) {
    for (int n = 1; n <= 6; ++n) {
        for (int k = 1; k <= 2; ++k) {
            const WeitzenboeckDerivation d(n, k);
            for (const auto& g : generators(n, k).items) {
                EXPECT_TRUE(d.is_in_kernel(g.value)) << g.label << " n=" << n << " k=" << k;
            }
        }
    }
}

TEST(Generators, Without) {
    const GeneratorSet g = generators(1, 2).without({"H1,1"});
    ASSERT_EQ(g.size(), 1U);
    EXPECT_EQ(g.items[0].label, "x1");
    EXPECT_THROW(generators(1, 2).without({"H1,2"}), std::invalid_argument);
}

class DerivationProperties : public ::testing::Test {
protected:
    testing::Rng rng{7};
    std::uniform_int_distribution<int> pick_n{1, 3};
    std::uniform_int_distribution<int> pick_k{1, 3};
};

TEST_F(DerivationProperties, Leibniz) {
    for (int trial = 0; trial < 500; ++trial) {
        const WeitzenboeckDerivation d(pick_n(rng), pick_k(rng));
        const Polynomial p = testing::random_polynomial(rng, d.ambient(), 4);
        const Polynomial q = testing::random_polynomial(rng, d.ambient(), 4);
        ASSERT_EQ(d.apply(p * q), d.apply(p) * q + p * d.apply(q));
    }
}

TEST_F(DerivationProperties, Linearity) {
    for (int trial = 0; trial < 300; ++trial) {
        const WeitzenboeckDerivation d(pick_n(rng), pick_k(rng));
        const Polynomial p = testing::random_polynomial(rng, d.ambient(), 4);
        const Polynomial q = testing::random_polynomial(rng, d.ambient(), 4);
        const Rational a = testing::random_rational(rng);
        const Rational b = testing::random_rational(rng);
        ASSERT_EQ(d.apply(a * p + b * q), a * d.apply(p) + b * d.apply(q));
    }
}

TEST_F(DerivationProperties, NilpotencyBoundedByWeight) {
    for (int trial = 0; trial < 300; ++trial) {
        const WeitzenboeckDerivation d(pick_n(rng), pick_k(rng));
        const Polynomial p = testing::random_polynomial(rng, d.ambient(), 4);
        unsigned max_weight = 0;
        for (const auto& [m, c] : p.terms()) {
            max_weight = std::max(max_weight, m.weight(d.ambient()));
        }
        const unsigned index = d.nilpotency_index(p);
        ASSERT_LE(index, max_weight + 1);
        ASSERT_EQ(index == 0, p.is_zero());
    }
}

TEST(DerivationVariables, ExactNilpotencyOfEachVariable) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 4; ++k) {
            const WeitzenboeckDerivation d(n, k);
            for (int i = 1; i <= n; ++i) {
                for (int j = 0; j <= k; ++j) {
                    const Polynomial v = Polynomial::variable(d.ambient(), VariableId::ring(i, j));
                    EXPECT_EQ(d.nilpotency_index(v), static_cast<unsigned>(j + 1));
                }
            }
        }
    }
}

TEST_F(DerivationProperties, KernelIsClosedUnderSumAndProduct) {
    for (int n = 1; n <= 3; ++n) {
        for (int k = 1; k <= 2; ++k) {
            const WeitzenboeckDerivation d(n, k);
            const GeneratorSet g = generators(n, k);
            std::uniform_int_distribution<std::size_t> pick(0, g.size() - 1);
            auto random_element = [&] {
                Polynomial e = Polynomial::constant(d.ambient(), testing::random_rational(rng));
                for (int f = 0; f < 2; ++f) {
                    e = e * g.items[pick(rng)].value;
                }
                return e;
            };
            for (int trial = 0; trial < 30; ++trial) {
                const Polynomial a = random_element();
                const Polynomial b = random_element();
                ASSERT_TRUE(d.is_in_kernel(a + b));
                ASSERT_TRUE(d.is_in_kernel(a * b));
            }
        }
    }
}

} // namespace
} // namespace weitz
