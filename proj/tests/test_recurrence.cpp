#include "isorec/json_io.hpp"
#include "isorec/recurrence.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace isorec;

namespace {

CorePolynomial core_of_cyclotomic(unsigned n) {
    const auto phi = cyclotomic(n);
    const auto k = static_cast<std::size_t>(phi.degree());
    std::vector<i64> t(k);
    for (std::size_t j = 1; j <= k; ++j) t[j - 1] = -static_cast<i64>(phi.coeff(k - j));
    return CorePolynomial(t);
}

// Smallest c with f_{n+c} = f_n for the k window terms starting at rho.
u64 period_by_terms(const CorePolynomial& core, u64 rho, u64 limit) {
    const auto f = generate(core, 0, static_cast<i64>(rho + limit + core.k()));
    for (u64 c = 1; c <= limit; ++c) {
        bool same = true;
        for (int i = 0; i < core.k() && same; ++i) same = f[rho + i] == f[rho + c + i];
        if (same) return c;
    }
    return 0;
}

} // namespace

TEST(Generate, FibonacciBothDirections) {
    const auto fib = CorePolynomial::parse("[1,1]");
    EXPECT_EQ(generate(fib, 0, 9), (std::vector<BigInt>{1, 1, 2, 3, 5, 8, 13, 21, 34, 55}));
    EXPECT_EQ(generate(fib, -6, -1), (std::vector<BigInt>{5, -3, 2, -1, 1, 0}));
    EXPECT_EQ(generate(fib, 3, 6, 5), (std::vector<BigInt>{3, 0, 3, 3}));
}

TEST(Generate, SeedWindowIsUnitVector) {
    const auto core = CorePolynomial::parse("[4,-3,2,7]");
    EXPECT_EQ(generate(core, -3, 0), (std::vector<BigInt>{0, 0, 0, 1}));
    EXPECT_EQ(generate(core, 1, 1), (std::vector<BigInt>{4}));
}

TEST(Generate, NegativeIndicesNeedUnitLastCoefficient) {
    const auto core = CorePolynomial::parse("[1,2]");
    EXPECT_THROW(generate(core, -5, 0), not_invertible);
    // Over F_3, t_2 = 2 is invertible; check the recursion holds across index 0.
    const auto f = generate(core, -8, 4, 3);
    for (std::size_t i = 2; i < f.size(); ++i) EXPECT_EQ(f[i], (f[i - 1] + 2 * f[i - 2]) % 3);
    EXPECT_THROW(generate(CorePolynomial::parse("[1,3]"), -5, 0, 3), not_invertible);
}

TEST(OverIntegers, CyclotomicCoresArePurePeriodic) {
    for (unsigned n = 1; n <= 12; ++n) {
        if (euler_phi(n) > 4) continue;
        const auto core = core_of_cyclotomic(n);
        const auto v = is_periodic_over_Z(core);
        EXPECT_EQ(v.kind, PeriodKind::pure) << n;
        EXPECT_EQ(v.period, n) << n;
        EXPECT_EQ(period_by_terms(core, 0, 50), n) << n;
    }
}

TEST(OverIntegers, Verdicts) {
    auto v = is_periodic_over_Z(CorePolynomial::parse("[0,-1]"));
    EXPECT_EQ(v.kind, PeriodKind::pure);
    EXPECT_EQ(v.period, 4u);
    // X^3 - 1 = Phi_1 Phi_3
    v = is_periodic_over_Z(CorePolynomial::parse("[0,0,1]"));
    EXPECT_EQ(v.period, 3u);
    EXPECT_EQ(is_periodic_over_Z(CorePolynomial::parse("[1,1]")).kind, PeriodKind::not_periodic);
    // (X - 1)^2 gives f_n = n + 1.
    EXPECT_EQ(is_periodic_over_Z(CorePolynomial::parse("[2,-1]")).kind, PeriodKind::not_periodic);
    // Phi_2 Phi_4 = X^3 + X^2 + X + 1: period 4.
    v = is_periodic_over_Z(CorePolynomial::parse("[-1,-1,-1]"));
    EXPECT_EQ(v.kind, PeriodKind::pure);
    EXPECT_EQ(v.period, 4u);
}

TEST(OverIntegers, ZeroLastCoefficientIsEventuallyPeriodic) {
    // X^2 - X = X (X - 1): 0, 1, 1, 1, ...
    auto v = is_periodic_over_Z(CorePolynomial::parse("[1,0]"));
    EXPECT_EQ(v.kind, PeriodKind::eventually_periodic);
    EXPECT_EQ(v.period, 1u);
    EXPECT_EQ(v.preperiod, 1u);
    // X^3 + X^2 = X^2 (X + 1): window (0,0,1) then (0,1,-1), (1,-1,1), ...
    v = is_periodic_over_Z(CorePolynomial::parse("[-1,0,0]"));
    EXPECT_EQ(v.kind, PeriodKind::eventually_periodic);
    EXPECT_EQ(v.period, 2u);
    EXPECT_EQ(v.preperiod, 2u);
    EXPECT_EQ(period_by_terms(CorePolynomial::parse("[-1,0,0]"), v.preperiod + 3, 10), 2u);
    // X^2: windows (0,1), (1,0), (0,0), ...
    v = is_periodic_over_Z(CorePolynomial::parse("[0,0]"));
    EXPECT_EQ(v.kind, PeriodKind::eventually_periodic);
    EXPECT_EQ(v.preperiod, 2u);
    EXPECT_EQ(v.period, 1u);
}

TEST(ModP, PisanoPeriodsByBothAlgorithms) {
    const auto fib = CorePolynomial::parse("[1,1]");
    const std::vector<std::pair<u64, u64>> pisano{{2, 3}, {3, 8}, {5, 20}, {7, 16}, {11, 10}};
    for (auto [p, c] : pisano) {
        const auto v = period_mod_p_bruteforce(fib, p);
        EXPECT_EQ(v.kind, PeriodKind::pure);
        EXPECT_EQ(v.period, c);
        EXPECT_EQ(period_mod_p_matrix_order(fib, p), c);
    }
}

TEST(ModP, AlgorithmsAgreeOnRandomCores) {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> pk(1, 5), pt(-9, 9);
    const std::vector<u64> primes{2, 3, 5, 7, 11, 13, 17};
    for (int i = 0; i < 150; ++i) {
        std::vector<i64> t(static_cast<std::size_t>(pk(rng)));
        for (auto& v : t) v = pt(rng);
        const CorePolynomial core(t);
        const u64 p = primes[static_cast<std::size_t>(i) % primes.size()];
        if (reduce_mod(core.last(), p) == 0) continue;
        EXPECT_EQ(period_mod_p_bruteforce(core, p).period, period_mod_p_matrix_order(core, p)) << core.to_string() << " mod " << p;
    }
}

TEST(ModP, LastCoefficientDivisibleByP) {
    // X^2 - 3X - 3 = X^2 mod 3: 1, 0, 0, ...
    const auto v = period_mod_p_bruteforce(CorePolynomial::parse("[3,3]"), 3);
    EXPECT_EQ(v.kind, PeriodKind::eventually_periodic);
    EXPECT_EQ(v.preperiod, 2u);
    EXPECT_EQ(v.period, 1u);
    EXPECT_THROW(period_mod_p_matrix_order(CorePolynomial::parse("[3,3]"), 3), not_invertible);
    // X^2 - X mod 5: windows (0,1), (1,1), (1,1), ...
    const auto w = period_mod_p_bruteforce(CorePolynomial::parse("[1,5]"), 5);
    EXPECT_EQ(w.preperiod, 1u);
    EXPECT_EQ(w.period, 1u);
}

TEST(ModP, DoubleRootHasPeriodP) {
    for (u64 p : primes_in_range(2, 31)) {
        EXPECT_EQ(period_mod_p_bruteforce(CorePolynomial::parse("[2,-1]"), p).period, p);
        EXPECT_EQ(period_mod_p_matrix_order(CorePolynomial::parse("[2,-1]"), p), p);
    }
}

TEST(ModP, CompositeModulusRejected) {
    EXPECT_THROW(period_mod_p_bruteforce(CorePolynomial::parse("[1,1]"), 4), std::invalid_argument);
    EXPECT_THROW(period_mod_p_matrix_order(CorePolynomial::parse("[1,1]"), 9), std::invalid_argument);
}

TEST(FactorPeriod, OrderOfXModIrreducible) {
    EXPECT_EQ(factor_period(PolyFp(2, {1, 1, 1})), 3u);
    EXPECT_EQ(factor_period(PolyFp(3, {1, 1})), 2u);     // X + 1: order of -1
    EXPECT_EQ(factor_period(PolyFp(3, {2, 2, 1})), 8u);  // X^2 + 2X + 2
    EXPECT_EQ(factor_period(PolyFp(2, {1, 1, 0, 1})), 7u);
}

TEST(TracePeriod, DividesThePeriod) {
    const auto fib = CorePolynomial::parse("[1,1]");
    for (u64 p : {2u, 3u, 7u, 11u, 13u}) {
        const u64 c = period_mod_p_matrix_order(fib, p);
        const u64 d = trace_period_mod_p(fib, p, c);
        EXPECT_EQ(c % d, 0u);
    }
}

TEST(Scan, FibonacciRamifiesOnlyAtFive) {
    const auto rows = period_scan(CorePolynomial::parse("[1,1]"), primes_in_range(2, 11));
    ASSERT_EQ(rows.size(), 5u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.p_divides_c, r.p == 5);
        EXPECT_EQ(r.ramified, r.p == 5);
        EXPECT_TRUE(r.algorithms_agree);
        EXPECT_TRUE(r.ramification_consistent);
    }
    const auto j = to_json(rows[2]);
    EXPECT_EQ(j["c_p"], 20);
    EXPECT_EQ(j["degenerate"], false);
}

TEST(Scan, DegenerateRowsAreMarked) {
    const auto rows = period_scan(CorePolynomial::parse("[1,6]"), {2, 3, 5});
    EXPECT_TRUE(rows[0].degenerate);
    EXPECT_TRUE(rows[1].degenerate);
    EXPECT_FALSE(rows[2].degenerate);
}
