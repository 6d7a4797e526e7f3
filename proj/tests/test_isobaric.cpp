#include "isorec/isobaric.hpp"
#include "isorec/json_io.hpp"

#include <gtest/gtest.h>

using namespace isorec;

namespace {

IsobaricPolynomial make(int k, long n, std::initializer_list<std::pair<std::vector<unsigned>, int>> terms) {
    IsobaricPolynomial p(k, n);
    for (const auto& [alpha, c] : terms) p.add_term(ExponentVector(alpha), c);
    return p;
}

// F_n = t_1 F_{n-1} + ... + t_k F_{n-k}, F_0 = 1, F_{<0} = 0.
std::vector<IsobaricPolynomial> gfp_by_recursion(int k, long n_max) {
    std::vector<IsobaricPolynomial> f;
    f.push_back(IsobaricPolynomial::constant(k, 1));
    for (long n = 1; n <= n_max; ++n) {
        IsobaricPolynomial next(k, n);
        for (int j = 1; j <= k && j <= n; ++j) next += IsobaricPolynomial::variable(k, j) * f[static_cast<std::size_t>(n - j)];
        f.push_back(next);
    }
    return f;
}

// Newton: G_n = t_1 G_{n-1} + ... + t_{n-1} G_1 + n t_n (t_j = 0 for j > k).
std::vector<IsobaricPolynomial> glp_by_newton(int k, long n_max) {
    std::vector<IsobaricPolynomial> g;
    g.push_back(IsobaricPolynomial::constant(k, k));
    for (long n = 1; n <= n_max; ++n) {
        IsobaricPolynomial next(k, n);
        for (int j = 1; j <= k && j < n; ++j) next += IsobaricPolynomial::variable(k, j) * g[static_cast<std::size_t>(n - j)];
        if (n <= k) next += BigInt(n) * IsobaricPolynomial::variable(k, static_cast<int>(n));
        g.push_back(next);
    }
    return g;
}

} // namespace

TEST(ExponentVectors, EnumeratesPartitionsWithBoundedParts) {
    const auto v = enumerate_exponent_vectors(3, 2);
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[0], ExponentVector({3, 0}));
    EXPECT_EQ(v[1], ExponentVector({1, 1}));
    EXPECT_EQ(enumerate_exponent_vectors(0, 3).size(), 1u);
    // Partitions of 10 into parts <= 3: 14.
    EXPECT_EQ(enumerate_exponent_vectors(10, 3).size(), 14u);
    for (const auto& a : enumerate_exponent_vectors(9, 4)) EXPECT_EQ(a.weight(), 9);
}

TEST(Gfp, MatchesPublishedLowDegreeTable) {
    for (int k = 4; k <= 5; ++k) {
        EXPECT_EQ(gfp(k, 0), IsobaricPolynomial::constant(k, 1));
        EXPECT_EQ(gfp(k, 1), IsobaricPolynomial::variable(k, 1));
    }
    EXPECT_EQ(gfp(4, 2), make(4, 2, {{{2, 0, 0, 0}, 1}, {{0, 1, 0, 0}, 1}}));
    EXPECT_EQ(gfp(4, 3), make(4, 3, {{{3, 0, 0, 0}, 1}, {{1, 1, 0, 0}, 2}, {{0, 0, 1, 0}, 1}}));
    EXPECT_EQ(gfp(3, 3).to_string(), "t1^3 + 2*t1*t2 + t3");
}

TEST(Gfp, DegreeFourFollowsTheRecursion) {
    const auto expected = make(4, 4, {{{4, 0, 0, 0}, 1}, {{2, 1, 0, 0}, 3}, {{0, 2, 0, 0}, 1}, {{1, 0, 1, 0}, 2}, {{0, 0, 0, 1}, 1}});
    EXPECT_EQ(gfp(4, 4), expected);
    EXPECT_EQ(gfp(4, 4).to_string(), "t1^4 + 3*t1^2*t2 + t2^2 + 2*t1*t3 + t4");
}

TEST(Gfp, AgreesWithRecursionOracle) {
    for (int k = 1; k <= 5; ++k) {
        const auto f = gfp_by_recursion(k, 10);
        for (long n = 0; n <= 10; ++n) EXPECT_EQ(gfp(k, n), f[static_cast<std::size_t>(n)]) << "k=" << k << " n=" << n;
    }
}

TEST(Glp, AgreesWithNewtonOracle) {
    EXPECT_EQ(glp(2, 2).to_string(), "t1^2 + 2*t2");
    for (int k = 1; k <= 5; ++k) {
        const auto g = glp_by_newton(k, 10);
        for (long n = 0; n <= 10; ++n) EXPECT_EQ(glp(k, n), g[static_cast<std::size_t>(n)]) << "k=" << k << " n=" << n;
    }
}

TEST(Wip, SpecialWeightsGiveFibonacciAndLucas) {
    for (int k = 1; k <= 4; ++k)
        for (long n = 1; n <= 8; ++n) {
            EXPECT_EQ(wip(WeightVector(static_cast<std::size_t>(k), 1), k, n), gfp(k, n));
            WeightVector lucas;
            for (int j = 1; j <= k; ++j) lucas.push_back(j);
            EXPECT_EQ(wip(lucas, k, n), glp(k, n));
        }
    EXPECT_EQ(wip({1, 1}, 2, 2).to_string(), "t1^2 + t2");
    EXPECT_EQ(wip({5, -2}, 2, 0), IsobaricPolynomial::constant(2, 1));
    EXPECT_THROW(wip({1}, 2, 3), std::invalid_argument);
}

TEST(Evaluate, FibonacciAndLucasNumbers) {
    const std::vector<BigInt> t{1, 1};
    BigInt a = 1, b = 1; // F_1, F_2
    for (long n = 0; n <= 30; ++n) {
        EXPECT_EQ(gfp(2, n).evaluate<BigInt>(t), a);
        BigInt c = a + b;
        a = b;
        b = c;
    }
    EXPECT_EQ(glp(2, 5).evaluate<BigInt>(t), 11);
    const std::vector<Rational> half{Rational(1, 2), Rational(1, 3)};
    // t1^2 + t2 at (1/2, 1/3)
    EXPECT_EQ(gfp(2, 2).evaluate<Rational>(half), Rational(7, 12));
}

TEST(Partial, TermByTermDerivative) {
    EXPECT_EQ(gfp(3, 3).partial(1), make(3, 2, {{{2, 0, 0}, 3}, {{0, 1, 0}, 2}}));
    EXPECT_EQ(gfp(3, 3).partial(3), IsobaricPolynomial::constant(3, 1));
    EXPECT_THROW(gfp(3, 3).partial(4), std::out_of_range);
}

TEST(Partial, LucasDerivativeIsScaledFibonacci) {
    for (int k = 1; k <= 4; ++k)
        for (long n = 1; n <= 8; ++n)
            for (int j = 1; j <= k && j <= n; ++j)
                EXPECT_EQ(glp(k, n).partial(j), BigInt(n) * gfp(k, n - j)) << k << " " << n << " " << j;
}

TEST(Projection, DropsHigherVariables) {
    EXPECT_EQ(gfp(4, 5).project(2), gfp(2, 5));
    EXPECT_EQ(glp(4, 6).project(3), glp(3, 6));
}

TEST(Schur, RowAndColumnShapes) {
    // Single row: complete homogeneous = GFP.
    for (long n = 1; n <= 6; ++n) EXPECT_EQ(schur_via_jacobi_trudi(PartitionShape({n}), 3), gfp(3, n));
    // Column 1^j: e_j = (-1)^{j+1} t_j.
    EXPECT_EQ(schur_via_jacobi_trudi(PartitionShape({1, 1}), 3), BigInt(-1) * IsobaricPolynomial::variable(3, 2));
    EXPECT_EQ(schur_via_jacobi_trudi(PartitionShape({1, 1, 1}), 3), IsobaricPolynomial::variable(3, 3));
    // Columns longer than k vanish.
    EXPECT_TRUE(schur_via_jacobi_trudi(PartitionShape({1, 1, 1, 1}), 3).is_zero());
}

TEST(Schur, HookSatisfiesPieriSplit) {
    // h_a e_1 = S_(a+1) + S_(a,1)
    const int k = 4;
    for (long a = 1; a <= 6; ++a) {
        const auto lhs = gfp(k, a) * IsobaricPolynomial::variable(k, 1);
        const auto rhs = schur_via_jacobi_trudi(PartitionShape({a + 1}), k) + schur_via_jacobi_trudi(PartitionShape({a, 1}), k);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Schur, RejectsNonPartitions) {
    EXPECT_THROW(PartitionShape({1, 2}), std::invalid_argument);
    EXPECT_THROW(PartitionShape({-1}), std::invalid_argument);
}

TEST(Arithmetic, WeightIsChecked) {
    IsobaricPolynomial p(2, 3);
    EXPECT_THROW(p.add_term(ExponentVector({1, 0}), 1), std::invalid_argument);
    EXPECT_THROW(p.add_term(ExponentVector({3}), 1), std::invalid_argument);
    p.add_term(ExponentVector({1, 1}), 2);
    p.add_term(ExponentVector({1, 1}), -2);
    EXPECT_TRUE(p.is_zero());
}

TEST(Json, RoundTrips) {
    for (long n = 0; n <= 7; ++n) {
        const auto p = glp(4, n);
        const auto j = to_json(p);
        EXPECT_EQ(Json::parse(j.dump()), j);
        EXPECT_EQ(isobaric_from_json(Json::parse(j.dump())), p);
    }
    EXPECT_EQ(to_json(gfp(2, 2)).dump(), R"({"k":2,"n":2,"terms":[{"alpha":[2,0],"coeff":"1"},{"alpha":[0,1],"coeff":"1"}]})");
}
