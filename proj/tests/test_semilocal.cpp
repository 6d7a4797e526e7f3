#include "isorec/json_io.hpp"
#include "isorec/semilocal.hpp"
#include "isorec/verify.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace isorec;

namespace {

const CorePolynomial example = CorePolynomial::parse("[0,2,1]");

RingElement random_element(std::mt19937_64& rng, const CorePolynomial& core, u64 p) {
    std::uniform_int_distribution<u64> d(0, p - 1);
    std::vector<u64> c(static_cast<std::size_t>(core.k()));
    for (auto& v : c) v = d(rng);
    return RingElement(core, p, c);
}

Matrix<PrimeField> mat_sum(const Matrix<PrimeField>& a, const Matrix<PrimeField>& b) { return a + b; }

} // namespace

TEST(StandardMatrix, OneLambdaAndIdempotent) {
    const PrimeField f3(3);
    EXPECT_EQ(standard_matrix(RingElement::one(example, 3)), (Matrix<PrimeField>::identity(f3, 3)));
    EXPECT_EQ(standard_matrix(RingElement::lambda(example, 3)), companion_matrix(example, f3));
    const auto e1 = RingElement::from_signed(example, 3, {-1, 1, -1});
    const auto m = standard_matrix(e1);
    EXPECT_EQ(m * m, m);
}

TEST(StandardMatrix, IsARingHomomorphism) {
    std::mt19937_64 rng(21);
    for (const auto& [text, p] : std::vector<std::pair<const char*, u64>>{{"[0,2,1]", 3}, {"[1,1]", 5}, {"[1,-2,3,1]", 7}, {"[0,1,0,1]", 2}}) {
        const auto core = CorePolynomial::parse(text);
        for (int i = 0; i < 25; ++i) {
            const auto a = random_element(rng, core, p), b = random_element(rng, core, p);
            EXPECT_EQ(standard_matrix(a * b), standard_matrix(a) * standard_matrix(b));
            EXPECT_EQ(standard_matrix(a + b), mat_sum(standard_matrix(a), standard_matrix(b)));
        }
    }
}

TEST(Trace, ExamplesAndAgreement) {
    EXPECT_EQ(trace(RingElement::one(example, 3)), 0u); // k = 3 = 0 mod 3
    EXPECT_EQ(trace(RingElement::one(CorePolynomial::parse("[1,1]"), 7)), 2u);
    EXPECT_EQ(trace(RingElement::lambda(CorePolynomial::parse("[1,1]"), 7)), 1u);
    EXPECT_EQ(trace(RingElement(example, 3, {0, 0, 1})), 1u);
    std::mt19937_64 rng(2);
    const auto core = CorePolynomial::parse("[2,-1,3,5]");
    for (int i = 0; i < 100; ++i) {
        const auto m = random_element(rng, core, 11);
        EXPECT_EQ(trace_by_matrix(m), trace_by_lucas(m));
    }
}

TEST(NormRank, Examples) {
    EXPECT_EQ(norm(RingElement::zero(example, 3)), 0u);
    EXPECT_EQ(rank(RingElement::zero(example, 3)), 0u);
    EXPECT_EQ(norm(RingElement::one(example, 3)), 1u);
    EXPECT_EQ(rank(RingElement::one(example, 3)), 3u);
    const auto e1 = RingElement::from_signed(example, 3, {-1, 1, -1});
    const auto e2 = RingElement::from_signed(example, 3, {-1, -1, 1});
    EXPECT_EQ(rank(e1) + rank(e2), 3u);
    EXPECT_EQ(rank(e1 + e2), 3u);
    // Units have full rank.
    for (u64 idx = 0; idx < 27; ++idx) {
        const RingElement m(example, 3, detail::decode(idx, 3, 3));
        if (norm(m) != 0) {
            EXPECT_EQ(rank(m), 3u);
        }
    }
}

TEST(Decompose, WorkedExample) {
    const auto st = decompose(example, 3);
    EXPECT_EQ(st.s, 2u);
    ASSERT_EQ(st.factors.size(), 2u);
    EXPECT_EQ(st.factors[0].r, 1u);
    EXPECT_EQ(st.factors[1].r, 2u);
    EXPECT_EQ(st.ring_order, 27);
    EXPECT_EQ(st.unit_group_order, 16);
    EXPECT_EQ(*st.period, 8u);
    EXPECT_EQ(*st.unit_index, 2);
    EXPECT_EQ(st.radical_order, 1);
    EXPECT_EQ(st.classification, Classification::split);
    std::set<std::vector<u64>> idem;
    for (const auto& e : st.idempotents) idem.insert(e.coords());
    EXPECT_EQ(idem, (std::set<std::vector<u64>>{{2, 1, 2}, {2, 2, 1}}));
}

TEST(Decompose, RamifiedAndInert) {
    const auto fib = CorePolynomial::parse("[1,1]");
    auto st = decompose(fib, 5);
    EXPECT_EQ(st.classification, Classification::ramified);
    EXPECT_EQ(st.radical_order, 5);
    EXPECT_EQ(st.unit_group_order, 20);
    EXPECT_EQ(*st.period, 20u);
    EXPECT_EQ(st.m_exponent, 2u);
    st = decompose(fib, 2);
    EXPECT_EQ(st.classification, Classification::inert);
    EXPECT_EQ(st.unit_group_order, 3);
    EXPECT_EQ(*st.period, 3u);
    ASSERT_EQ(st.idempotents.size(), 1u);
    EXPECT_EQ(st.idempotents[0], RingElement::one(fib, 2));
}

TEST(Decompose, DegenerateHasNoPeriod) {
    const auto st = decompose(CorePolynomial::parse("[1,3]"), 3);
    EXPECT_TRUE(st.degenerate);
    EXPECT_FALSE(st.period.has_value());
    EXPECT_EQ(st.s, 2u);
}

TEST(Idempotents, SystemProperties) {
    for (const auto& [text, p] : std::vector<std::pair<const char*, u64>>{{"[1,1]", 11}, {"[0,2,1]", 3}, {"[0,0,0,1]", 5}, {"[1,0,0,0,1]", 7}, {"[1,1,0,1]", 3}}) {
        const auto core = CorePolynomial::parse(text);
        const auto st = decompose(core, p);
        const auto& es = st.idempotents;
        EXPECT_EQ(es.size(), st.s);
        auto sum = RingElement::zero(core, p);
        for (std::size_t i = 0; i < es.size(); ++i) {
            sum = sum + es[i];
            EXPECT_EQ(es[i] * es[i], es[i]);
            for (std::size_t j = 0; j < es.size(); ++j)
                if (i != j) {
                    EXPECT_TRUE((es[i] * es[j]).is_zero());
                }
            // e_i = 1 mod f_i^{e_i}, 0 mod the other factor powers
            for (std::size_t j = 0; j < st.factors.size(); ++j) {
                PolyFp g = PolyFp::constant(p, 1);
                for (unsigned m = 0; m < st.factors[j].e; ++m) g = g * st.factors[j].f;
                EXPECT_EQ(es[i].as_poly() % g, PolyFp::constant(p, i == j ? 1 : 0) % g);
            }
        }
        EXPECT_EQ(sum, RingElement::one(core, p)) << text;
    }
}

TEST(Orbits, FibonacciModTwo) {
    const auto part = orbit_partition(CorePolynomial::parse("[1,1]"), 2);
    ASSERT_EQ(part.orbits.size(), 2u);
    EXPECT_EQ(part.orbits[0].length, 1u);
    EXPECT_EQ(part.orbits[0].kind, OrbitClass::zero);
    EXPECT_EQ(part.orbits[1].length, 3u);
    EXPECT_EQ(part.orbits[1].kind, OrbitClass::unit);
    EXPECT_TRUE(part.ok());
}

TEST(Orbits, WorkedExampleUnitCosets) {
    const auto part = orbit_partition(example, 3);
    EXPECT_TRUE(part.ok());
    u64 unit_orbits = 0, total = 0;
    for (const auto& o : part.orbits) {
        total += o.length;
        if (o.kind == OrbitClass::unit) {
            ++unit_orbits;
            EXPECT_EQ(o.length, 8u);
        }
        EXPECT_EQ(8 % o.length, 0u);
    }
    EXPECT_EQ(unit_orbits, 2u);
    EXPECT_EQ(total, 27u);
    // Canonical order: representatives increase lexicographically.
    for (std::size_t i = 1; i < part.orbits.size(); ++i) EXPECT_LT(part.orbits[i - 1].representative, part.orbits[i].representative);
}

TEST(Orbits, IdempotentOrbitIsCyclicGroup) {
    const auto lam = RingElement::lambda(example, 3);
    for (const auto& e : primitive_idempotents(example, 3)) {
        const auto ea = e * lam;
        auto pw = e, orbit = e;
        for (int n = 1; n <= 16; ++n) {
            pw = pw * ea;
            orbit = orbit * lam;
            EXPECT_EQ(pw, orbit);
        }
    }
}

TEST(Orbits, BudgetAndPreconditions) {
    EXPECT_THROW(orbit_partition(CorePolynomial::parse("[1,1,1,1,1,1,1,1]"), 7, 1000), budget_exceeded);
    EXPECT_THROW(orbit_partition(CorePolynomial::parse("[1,3]"), 3), not_invertible);
}

TEST(UnitGroupLaw, EnumeratedMatchesClosedForm) {
    auto r = verify_unit_group_law(example, 3);
    EXPECT_EQ(*r.enumerated, 16u);
    EXPECT_TRUE(r.holds());
    r = verify_unit_group_law(CorePolynomial::parse("[1,1]"), 5);
    EXPECT_EQ(*r.enumerated, 20u);
    EXPECT_TRUE(r.holds());
    r = verify_unit_group_law(CorePolynomial::parse("[2,-1]"), 3);
    EXPECT_EQ(*r.enumerated, 6u);
    EXPECT_TRUE(r.holds());
    r = verify_unit_group_law(CorePolynomial::parse("[1,1,1,1,1,1,1,1]"), 7, 1000);
    EXPECT_FALSE(r.enumerated.has_value());
    EXPECT_TRUE(r.holds());
}

TEST(PeriodLaw, Examples) {
    auto r = verify_period_law(example, 3);
    EXPECT_EQ(r.lcm_factor_periods, 8u);
    EXPECT_EQ(r.period, 8u);
    EXPECT_TRUE(r.asserted_ok());
    EXPECT_TRUE(r.radical_period_law_holds);
    r = verify_period_law(CorePolynomial::parse("[2,-1]"), 5);
    EXPECT_EQ(r.lcm_factor_periods, 1u);
    EXPECT_EQ(r.period, 5u);
    EXPECT_EQ(r.radical_order, 5);
    EXPECT_TRUE(r.radical_period_law_holds);
}

TEST(PeriodLaw, ProductLawFailsForSquaredQuadraticModTwo) {
    // (X^2 + X + 1)^2 mod 2: x has order 6 but lcm * |J| = 3 * 4.
    const auto core = CorePolynomial::parse("[0,1,0,1]");
    const auto r = verify_period_law(core, 2);
    EXPECT_EQ(r.lcm_factor_periods, 3u);
    EXPECT_EQ(r.period, 6u);
    EXPECT_EQ(r.radical_order, 4);
    EXPECT_TRUE(r.asserted_ok());
    EXPECT_FALSE(r.radical_period_law_holds);
    // Direct check: X^6 = 1 and X^3 != 1 modulo X^4 + X^2 + 1.
    const auto c = PolyFp::from(core_to_poly(core), 2);
    EXPECT_TRUE(pow_mod(PolyFp::x(2), 6, c).is_one());
    EXPECT_FALSE(pow_mod(PolyFp::x(2), 3, c).is_one());
}

TEST(Ramification, ExhaustiveQuadraticSweep) {
    const auto sweep = verify_ramification_theorem(cores_in_box(2, 2), {2, 3, 5, 7});
    EXPECT_TRUE(sweep.failures.empty());
    EXPECT_GT(sweep.checked, 50u);
}

TEST(TraceSums, WorkedExampleIdeals) {
    const auto part = orbit_partition(example, 3);
    const auto fac = factor_core_mod_p(example, 3);
    const auto r = trace_orbit_sums(part, fac, 0);
    EXPECT_EQ(r.generator, PolyFp(3, {1, 1}));
    EXPECT_EQ(r.members, 9u);
    EXPECT_EQ(r.trace_total, 0u);
    EXPECT_TRUE(r.component_law_holds());
}

TEST(TraceSums, InertRingHasOnlyZeroIdeal) {
    const auto core = CorePolynomial::parse("[1,1]");
    const auto r = trace_orbit_sums(orbit_partition(core, 2), factor_core_mod_p(core, 2), 0);
    EXPECT_EQ(r.members, 1u);
    EXPECT_EQ(r.trace_total, 0u);
}

TEST(TraceSums, IdealOfOrderTwoInCharacteristicTwo) {
    // X^3 - 1 = (X + 1)(X^2 + X + 1) mod 2. The ideal (X^2 + X + 1) is
    // {0, 1 + lambda + lambda^2}, whose trace is 3 + 0 + 0 = 1 mod 2.
    const auto core = CorePolynomial::parse("[0,0,1]");
    const auto fac = factor_core_mod_p(core, 2);
    ASSERT_EQ(fac.factors[1].f, PolyFp(2, {1, 1, 1}));
    EXPECT_EQ(trace(RingElement(core, 2, {1, 1, 1})), 1u);
    const auto r = trace_orbit_sums(orbit_partition(core, 2), fac, 1);
    EXPECT_EQ(r.members, 2u);
    EXPECT_EQ(r.trace_total, 1u);
    EXPECT_TRUE(r.component_law_holds());
}

TEST(RankAdditivity, SplitPrimes) {
    for (const auto& [text, p] : std::vector<std::pair<const char*, u64>>{{"[0,2,1]", 3}, {"[1,1]", 11}, {"[0,0,0,1]", 5}, {"[1,0,0,0,1]", 11}}) {
        const auto st = decompose(CorePolynomial::parse(text), p);
        ASSERT_FALSE(st.ramified);
        EXPECT_TRUE(rank_additivity_holds(st)) << text;
    }
}

TEST(Json, StructureSchema) {
    const auto j = to_json(decompose(example, 3));
    EXPECT_EQ(j["|G_p|"], "16");
    EXPECT_EQ(j["|J|"], "1");
    EXPECT_EQ(j["c_p"], 8);
    EXPECT_EQ(j["classification"], "split");
    EXPECT_EQ(j["factors"][1]["factor_period"], 8);
    EXPECT_EQ(Json::parse(j.dump()), j);
}
