#include "weitz/error.hpp"
#include "weitz/parse.hpp"

#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

namespace weitz {
namespace {

const Ambient kA21 = Ambient::make(2, 1);

TEST(Parse, JacobianDeterminant) {
    const Polynomial j = parse("x1*y2 - x2*y1", kA21);
    const Polynomial expected = Polynomial::variable(kA21, VariableId::ring(1, 0)) *
                                    Polynomial::variable(kA21, VariableId::ring(2, 1)) -
                                Polynomial::variable(kA21, VariableId::ring(2, 0)) *
                                    Polynomial::variable(kA21, VariableId::ring(1, 1));
    EXPECT_EQ(j, expected);
    EXPECT_EQ(format(j), "x1*y2 - x2*y1");
}

TEST(Parse, Zero) {
    EXPECT_TRUE(parse("0", kA21).is_zero());
    EXPECT_TRUE(parse("x1 - x1", kA21).is_zero());
    EXPECT_EQ(format(parse("0", kA21)), "0");
}

TEST(Parse, RationalCoefficientOnCovariantVariable) {
    const Polynomial p = parse("3/2*CX^2", kA21);
    ASSERT_EQ(p.term_count(), 1U);
    const auto& [m, c] = *p.terms().begin();
    EXPECT_EQ(c, Rational(mpz_class(3), mpz_class(2)));
    EXPECT_EQ(m.covariant_degree(kA21), 2U);
    EXPECT_EQ(m.ring_degree(kA21), 0U);
}

TEST(Parse, WhitespaceAndSigns) {
    EXPECT_EQ(parse("  - x1 *  y1 ^ 2 +2/4", kA21), parse("1/2 - x1*y1^2", kA21));
    EXPECT_EQ(parse("+x1", kA21), parse("x1", kA21));
    EXPECT_EQ(parse("x1*x1", kA21), parse("x1^2", kA21));
}

TEST(Parse, HighLevelNames) {
    const Ambient a = Ambient::make(2, 4);
    EXPECT_EQ(parse("v1.0 + v1.1 + v1.2", a), parse("x1 + y1 + z1", a));
    EXPECT_EQ(format(parse("v2.4", a)), "v2.4");
    EXPECT_EQ(parse_variable("v2.3", a), VariableId::ring(2, 3));
    EXPECT_EQ(parse_variable("CY", a), VariableId::cov_y());
}

TEST(Parse, SyntaxErrorsCarryPosition) {
    auto position = [](const char* text) -> std::size_t {
        try {
            parse(text, kA21);
        } catch (const SyntaxError& e) {
            return e.position();
        }
        ADD_FAILURE() << "no syntax error for '" << text << "'";
        return 0;
    };
    EXPECT_EQ(position(""), 0U);
    EXPECT_EQ(position("x1 +"), 4U);
    EXPECT_EQ(position("x1 + * y1"), 5U);
    EXPECT_EQ(position("2x1"), 1U);
    EXPECT_EQ(position("x1^0"), 3U);
    EXPECT_EQ(position("1/0*x1"), 2U);
    EXPECT_EQ(position("w1"), 0U);
    EXPECT_EQ(position("CZ"), 0U);
    EXPECT_EQ(position("v1"), 2U);
    EXPECT_EQ(position("x"), 1U);
}

TEST(Parse, VariablesOutsideAmbient) {
    EXPECT_THROW(parse("z1", kA21), AmbientMismatch);
    EXPECT_THROW(parse("x3", kA21), AmbientMismatch);
    EXPECT_THROW(parse("x0", kA21), AmbientMismatch);
    EXPECT_THROW(parse("v1.2", kA21), AmbientMismatch);
}

TEST(Parse, GoldenCorpusRoundTrip) {
    std::ifstream in(WEITZ_GOLDEN_DIR "/polynomials.txt");
    ASSERT_TRUE(in) << "missing golden corpus";
    std::string line;
    int cases = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') {
            continue;
        }
        const auto bar = line.find('|');
        ASSERT_NE(bar, std::string::npos);
        std::istringstream head(line.substr(0, bar));
        int n = 0;
        int k = 0;
        head >> n >> k;
        const std::string text = line.substr(bar + 1);
        const Ambient a = Ambient::make(n, k);
        const Polynomial p = parse(text, a);
        const std::string printed = format(p);
        EXPECT_EQ(parse(printed, a), p) << text;
        EXPECT_EQ(format(parse(printed, a)), printed);
        ++cases;
    }
    EXPECT_GE(cases, 10);
}

} // namespace
} // namespace weitz
