#ifndef ISOREC_SEMILOCAL_HPP
#define ISOREC_SEMILOCAL_HPP

/// The finite ring R_p = F_p[x]/(C(x)), elements written in the basis
/// {1, lambda, ..., lambda^{k-1}}. A row vector times A is multiplication by lambda.

#include "isorec/companion.hpp"
#include "isorec/core.hpp"
#include "isorec/errors.hpp"
#include "isorec/fp_algebra.hpp"
#include "isorec/isobaric.hpp"
#include "isorec/recurrence.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

namespace isorec {

using u32 = std::uint32_t;

inline constexpr u64 default_enumeration_budget = 1'000'000;

class RingElement {
public:
    RingElement(CorePolynomial core, u64 p, std::vector<u64> coords)
        : core_(std::move(core)), p_(require_prime(p)), coords_(std::move(coords)) {
        if (coords_.size() != static_cast<std::size_t>(core_.k())) throw std::invalid_argument("element needs k coordinates");
        for (auto& c : coords_) c %= p_;
    }

    /// Signed representatives such as (-1, 1, -1) are reduced mod p.
    static RingElement from_signed(const CorePolynomial& core, u64 p, const std::vector<i64>& coords) {
        std::vector<u64> c;
        for (i64 v : coords) c.push_back(reduce_mod(v, p));
        return RingElement(core, p, std::move(c));
    }

    static RingElement from_poly(const CorePolynomial& core, const PolyFp& f) {
        const auto c = PolyFp::from(core_to_poly(core), f.p());
        const auto r = f % c;
        std::vector<u64> v(static_cast<std::size_t>(core.k()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = r.coeff(i);
        return RingElement(core, f.p(), std::move(v));
    }

    static RingElement zero(const CorePolynomial& core, u64 p) {
        return RingElement(core, p, std::vector<u64>(static_cast<std::size_t>(core.k()), 0));
    }
    static RingElement one(const CorePolynomial& core, u64 p) {
        auto e = zero(core, p);
        e.coords_[0] = 1;
        return e;
    }
    static RingElement lambda(const CorePolynomial& core, u64 p) {
        auto e = zero(core, p);
        if (core.k() == 1) e.coords_[0] = reduce_mod(core.t(1), p);
        else e.coords_[1] = 1;
        return e;
    }

    const CorePolynomial& core() const { return core_; }
    u64 p() const { return p_; }
    const std::vector<u64>& coords() const { return coords_; }
    bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](u64 c) { return c == 0; });
    }

    PolyFp as_poly() const { return PolyFp(p_, coords_); }

    friend RingElement operator+(const RingElement& a, const RingElement& b) {
        a.require_same(b);
        auto r = a;
        for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] = (r.coords_[i] + b.coords_[i]) % a.p_;
        return r;
    }
    friend RingElement operator-(const RingElement& a, const RingElement& b) {
        a.require_same(b);
        auto r = a;
        for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] = (r.coords_[i] + a.p_ - b.coords_[i]) % a.p_;
        return r;
    }
    // Polynomial product reduced mod C; independent of the matrix representation.
    friend RingElement operator*(const RingElement& a, const RingElement& b) {
        a.require_same(b);
        return from_poly(a.core_, a.as_poly() * b.as_poly());
    }
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.p_ == b.p_ && a.core_ == b.core_ && a.coords_ == b.coords_;
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + std::to_string(coords_[i]);
        return s + ")";
    }

private:
    void require_same(const RingElement& o) const {
        if (p_ != o.p_ || !(core_ == o.core_)) throw std::invalid_argument("elements of different rings");
    }

    CorePolynomial core_;
    u64 p_;
    std::vector<u64> coords_;
};

/// Rows m, mA, ..., mA^{k-1}.
inline Matrix<PrimeField> standard_matrix(const RingElement& m) {
    const PrimeField field(m.p());
    const auto a = companion_matrix(m.core(), field);
    const auto k = static_cast<std::size_t>(m.core().k());
    Matrix<PrimeField> out(field, k, k);
    auto row = m.coords();
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) out(i, j) = row[j];
        row = a.left_apply(row);
    }
    return out;
}

inline u64 trace_by_matrix(const RingElement& m) { return standard_matrix(m).trace(); }

/// Lucas values G_{k,0..k-1}(t) mod p, with G_{k,0} = k.
inline std::vector<u64> lucas_values_mod(const CorePolynomial& core, u64 p) {
    const auto t = core.as_bigints();
    std::vector<u64> g;
    for (int j = 0; j < core.k(); ++j) g.push_back(reduce_mod(glp(core.k(), j).evaluate<BigInt>(t), p));
    return g;
}

/// sum_j m_j G_{k,j}(t) mod p.
inline u64 trace_by_lucas(const RingElement& m, const std::vector<u64>& lucas) {
    u64 s = 0;
    for (std::size_t j = 0; j < lucas.size(); ++j) s = (s + mul_mod(m.coords()[j], lucas[j], m.p())) % m.p();
    return s;
}

inline u64 trace_by_lucas(const RingElement& m) { return trace_by_lucas(m, lucas_values_mod(m.core(), m.p())); }

inline u64 trace(const RingElement& m) {
    const u64 a = trace_by_matrix(m);
    if (a != trace_by_lucas(m)) throw std::logic_error("trace implementations disagree at " + m.to_string());
    return a;
}

inline u64 norm(const RingElement& m) { return standard_matrix(m).determinant(); }
inline std::size_t rank(const RingElement& m) { return standard_matrix(m).rank(); }

enum class Classification { inert, split, ramified };

inline std::string to_string(Classification c) {
    switch (c) {
    case Classification::inert: return "inert";
    case Classification::split: return "split";
    case Classification::ramified: return "ramified";
    }
    return "?";
}

struct LocalFactor {
    PolyFp f;
    unsigned r;                       // residue degree
    unsigned e;                       // multiplicity
    std::optional<u64> factor_period; // order of x mod f; absent when f = X
    BigInt local_order;               // p^{r e}
    BigInt local_units;               // p^{r(e-1)} (p^r - 1)
    BigInt residue_units;             // p^r - 1
};

struct SemilocalStructure {
    CorePolynomial core;
    u64 p = 0;
    FpFactorization factorization;
    std::vector<LocalFactor> factors = {};
    std::size_t s = 0;
    std::vector<RingElement> idempotents = {};
    std::vector<std::size_t> ranks = {};   // rank of each idempotent
    BigInt ring_order = {};                // p^k
    BigInt radical_order = {};             // |J|
    BigInt unit_group_order = {};          // |G_p|
    unsigned m_exponent = 1;          // least m with J^m = 0
    bool ramified = false;
    Classification classification = Classification::inert;
    bool degenerate = false;          // p | t_k; no period
    std::optional<u64> period = {};        // c_p = |H_p|
    std::optional<u64> lcm_factor_periods = {};
    std::optional<BigInt> unit_index = {}; // [G_p : H_p]
    std::optional<bool> ramification_consistent = {};
    std::optional<bool> radical_period_law_holds = {};
};

/// e_i = v_i h_i mod C where u_i g_i + v_i h_i = 1, g_i = f_i^{e_i}, h_i = C / g_i.
inline std::vector<RingElement> primitive_idempotents(const CorePolynomial& core, u64 p, const FpFactorization& fac) {
    const auto c = PolyFp::from(core_to_poly(core), p);
    std::vector<RingElement> out;
    if (fac.factors.size() == 1) {
        out.push_back(RingElement::one(core, p));
        return out;
    }
    for (const auto& [f, e] : fac.factors) {
        PolyFp g = PolyFp::constant(p, 1);
        for (unsigned i = 0; i < e; ++i) g = g * f;
        const auto [h, rem] = c.divmod(g);
        if (!rem.is_zero()) throw std::logic_error("factor power does not divide C");
        const auto [d, u, v] = extended_gcd(g, h);
        if (!d.is_one()) throw std::logic_error("factor powers are not coprime");
        out.push_back(RingElement::from_poly(core, v * h));
    }
    return out;
}

inline std::vector<RingElement> primitive_idempotents(const CorePolynomial& core, u64 p) {
    return primitive_idempotents(core, p, factor_core_mod_p(core, p));
}

inline SemilocalStructure decompose(const CorePolynomial& core, u64 p) {
    require_prime(p);
    SemilocalStructure st{core, p, factor_core_mod_p(core, p)};
    const auto& fac = st.factorization;
    st.s = fac.factors.size();
    const BigInt bp(p);
    unsigned sum_r = 0;
    st.unit_group_order = 1;
    for (const auto& [f, e] : fac.factors) {
        const auto r = static_cast<unsigned>(f.degree());
        sum_r += r;
        LocalFactor lf{f, r, e, std::nullopt, pow(bp, r * e), pow(bp, r * (e - 1)) * (pow(bp, r) - 1), pow(bp, r) - 1};
        if (f.coeff(0) != 0) lf.factor_period = factor_period(f);
        st.unit_group_order *= lf.local_units;
        st.m_exponent = std::max(st.m_exponent, e);
        st.factors.push_back(std::move(lf));
    }
    const auto k = static_cast<unsigned>(core.k());
    st.ring_order = pow(bp, k);
    st.radical_order = pow(bp, k - sum_r);
    st.ramified = st.m_exponent > 1;
    if (st.ramified != ramifies(core, p)) throw std::logic_error("factorization and discriminant disagree on ramification");
    st.classification = st.ramified ? Classification::ramified : st.s == 1 ? Classification::inert : Classification::split;
    st.idempotents = primitive_idempotents(core, p, fac);
    for (const auto& e : st.idempotents) st.ranks.push_back(rank(e));

    st.degenerate = reduce_mod(core.last(), p) == 0;
    if (!st.degenerate) {
        const u64 c = period_mod_p_matrix_order(core, p, fac);
        st.period = c;
        u64 l = 1;
        for (const auto& lf : st.factors) l = lcm_checked(l, *lf.factor_period);
        st.lcm_factor_periods = l;
        st.unit_index = st.unit_group_order / c;
        st.ramification_consistent = (c % p == 0) == st.ramified;
        st.radical_period_law_holds = BigInt(c) == BigInt(l) * st.radical_order;
    }
    return st;
}

enum class OrbitClass { zero, unit, ideal };

inline std::string to_string(OrbitClass c) {
    switch (c) {
    case OrbitClass::zero: return "zero";
    case OrbitClass::unit: return "unit-coset";
    case OrbitClass::ideal: return "ideal";
    }
    return "?";
}

struct Orbit {
    std::vector<u64> representative; // lexicographically least member
    u64 length;
    OrbitClass kind;
};

struct OrbitPartition {
    CorePolynomial core;
    u64 p;
    u64 period;
    u64 total = 0;
    std::vector<Orbit> orbits;      // sorted by representative
    std::vector<u32> orbit_of;      // element index -> orbit number
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

namespace detail {

// Coordinates <-> index, first coordinate most significant (lexicographic order).
inline std::vector<u64> decode(u64 idx, u64 p, std::size_t k) {
    std::vector<u64> v(k);
    for (std::size_t i = k; i-- > 0;) {
        v[i] = idx % p;
        idx /= p;
    }
    return v;
}

inline u64 encode(const std::vector<u64>& v, u64 p) {
    u64 idx = 0;
    for (u64 c : v) idx = idx * p + c;
    return idx;
}

inline u64 checked_ring_size(const CorePolynomial& core, u64 p, u64 budget) {
    unsigned __int128 n = 1;
    for (int i = 0; i < core.k(); ++i) {
        n *= p;
        if (n > budget)
            throw budget_exceeded("ring of order " + std::to_string(p) + "^" + std::to_string(core.k()) +
                                  " exceeds the enumeration budget of " + std::to_string(budget) + " elements");
    }
    return static_cast<u64>(n);
}

} // namespace detail

/// Partition of R_p into orbits under multiplication by lambda, with the
/// orbit laws checked as the partition is built.
inline OrbitPartition orbit_partition(const CorePolynomial& core, u64 p, u64 budget = default_enumeration_budget) {
    require_prime(p);
    if (reduce_mod(core.last(), p) == 0)
        throw not_invertible("p = " + std::to_string(p) + " divides t_k: lambda is not a unit");
    const u64 size = detail::checked_ring_size(core, p, budget);
    const auto k = static_cast<std::size_t>(core.k());
    const PrimeField field(p);
    const auto a = companion_matrix(core, field);
    const u64 c = period_mod_p_matrix_order(core, p);

    OrbitPartition part{core, p, c, size, {}, std::vector<u32>(size, std::numeric_limits<u32>::max()), {}};
    std::vector<u64> t;
    for (int j = 1; j <= core.k(); ++j) t.push_back(reduce_mod(core.t(j), p));
    u64 units = 0, unit_orbits = 0;

    for (u64 start = 0; start < size; ++start) {
        if (part.orbit_of[start] != std::numeric_limits<u32>::max()) continue;
        const auto id = static_cast<u32>(part.orbits.size());
        auto v = detail::decode(start, p, k);
        const RingElement rep(core, p, v);
        const u64 nm = norm(rep);
        const OrbitClass kind = start == 0 ? OrbitClass::zero : nm != 0 ? OrbitClass::unit : OrbitClass::ideal;
        std::vector<std::vector<u64>> members;
        u64 idx = start, len = 0;
        do {
            if (part.orbit_of[idx] != std::numeric_limits<u32>::max())
                throw std::logic_error("orbit walk entered another orbit");
            part.orbit_of[idx] = id;
            ++len;
            if (members.size() <= 2 * k) members.push_back(v);
            v = a.left_apply(v);
            idx = detail::encode(v, p);
        } while (idx != start);
        part.orbits.push_back({detail::decode(start, p, k), len, kind});

        const std::string where = "orbit of " + rep.to_string();
        if (kind == OrbitClass::zero && len != 1) part.violations.push_back("zero orbit is not a singleton");
        if (c % len != 0) part.violations.push_back(where + ": length " + std::to_string(len) + " does not divide c_p = " + std::to_string(c));
        if (kind == OrbitClass::unit) {
            units += len;
            ++unit_orbits;
            if (len != c) part.violations.push_back(where + ": unit orbit of length " + std::to_string(len) + " != c_p");
        }
        // Each coordinate column along the orbit follows the t-recursion.
        for (std::size_t n = k; n < members.size(); ++n)
            for (std::size_t col = 0; col < k; ++col) {
                u64 s = 0;
                for (std::size_t j = 1; j <= k; ++j) s = (s + mul_mod(t[j - 1], members[n - j][col], p)) % p;
                if (s != members[n][col]) {
                    part.violations.push_back(where + ": column " + std::to_string(col) + " is not t-recursive");
                    n = members.size();
                    break;
                }
            }
    }
    if (unit_orbits * c != units) part.violations.push_back("unit orbits do not partition G_p into cosets of H_p");
    return part;
}

struct UnitGroupReport {
    BigInt closed_form;              // |J| prod (p^{r_i} - 1)
    BigInt local_product;            // prod p^{r_i(e_i-1)} (p^{r_i} - 1)
    std::optional<u64> enumerated;   // absent above the budget
    bool holds() const { return closed_form == local_product && (!enumerated || BigInt(*enumerated) == closed_form); }
};

inline UnitGroupReport verify_unit_group_law(const CorePolynomial& core, u64 p, u64 budget = default_enumeration_budget) {
    const auto st = decompose(core, p);
    UnitGroupReport rep{st.radical_order, st.unit_group_order, std::nullopt};
    for (const auto& lf : st.factors) rep.closed_form *= lf.residue_units;
    try {
        const u64 size = detail::checked_ring_size(core, p, budget);
        const auto k = static_cast<std::size_t>(core.k());
        u64 units = 0;
        for (u64 i = 0; i < size; ++i)
            if (norm(RingElement(core, p, detail::decode(i, p, k))) != 0) ++units;
        rep.enumerated = units;
    } catch (const budget_exceeded&) {
    }
    return rep;
}

struct PeriodLawReport {
    CorePolynomial core;
    u64 p;
    u64 lcm_factor_periods;
    u64 period;
    BigInt radical_order;
    bool ramified;
    bool lcm_divides_period;
    bool equal_when_unramified;   // vacuous when ramified
    bool inflation_is_p_power;    // vacuous when unramified
    bool radical_period_law_holds;            // reported only

    bool asserted_ok() const { return lcm_divides_period && equal_when_unramified && inflation_is_p_power; }
};

inline PeriodLawReport verify_period_law(const CorePolynomial& core, u64 p) {
    const auto st = decompose(core, p);
    if (st.degenerate) throw not_invertible("p = " + std::to_string(p) + " divides t_k: period law needs a unit lambda");
    const u64 l = *st.lcm_factor_periods, c = *st.period;
    PeriodLawReport r{core, p, l, c, st.radical_order, st.ramified, c % l == 0, true, true, *st.radical_period_law_holds};
    if (r.lcm_divides_period) {
        if (st.ramified) r.inflation_is_p_power = is_positive_power_of(c / l, p);
        else r.equal_when_unramified = c == l;
    }
    return r;
}

struct RamificationSweep {
    u64 checked = 0;
    u64 skipped = 0; // p | t_k
    std::vector<std::string> failures;
};

/// p | c_p <=> p ramifies, over every (core, prime) pair with p not dividing t_k.
inline RamificationSweep verify_ramification_theorem(const std::vector<CorePolynomial>& cores, const std::vector<u64>& primes) {
    RamificationSweep out;
    for (const auto& core : cores)
        for (u64 p : primes) {
            if (reduce_mod(core.last(), p) == 0) {
                ++out.skipped;
                continue;
            }
            ++out.checked;
            const auto row = scan_prime(core, p);
            if (!row.ramification_consistent || !row.algorithms_agree) {
                const auto st = decompose(core, p);
                std::string dump = core.to_string() + " mod " + std::to_string(p) + ": c_p = " + std::to_string(row.c_p) +
                                   ", ramified = " + (row.ramified ? "yes" : "no") + ", factors";
                for (const auto& lf : st.factors) dump += " (" + lf.f.to_string() + ")^" + std::to_string(lf.e);
                out.failures.push_back(dump);
            }
        }
    return out;
}

struct TraceSumReport {
    std::size_t ideal_index;
    PolyFp generator;               // the maximal ideal is (f) in R_p
    u64 members = 0;
    u64 orbits = 0;
    u64 component_trace_mismatches = 0; // orbits where component sum != trace sum
    u64 trace_total = 0;                // sum of traces over the ideal, mod p

    bool component_law_holds() const { return component_trace_mismatches == 0; }
    bool ideal_sum_vanishes() const { return trace_total == 0; }
};

/// Trace sums over the orbits contained in the maximal ideal (f_i).
inline TraceSumReport trace_orbit_sums(const OrbitPartition& part, const FpFactorization& fac, std::size_t ideal_index) {
    if (ideal_index >= fac.factors.size()) throw std::out_of_range("no maximal ideal with index " + std::to_string(ideal_index));
    const u64 p = part.p;
    const auto k = static_cast<std::size_t>(part.core.k());
    const auto& f = fac.factors[ideal_index].f;
    const auto lucas = lucas_values_mod(part.core, p);
    TraceSumReport rep{ideal_index, f};
    std::vector<u64> comp(part.orbits.size(), 0), tr(part.orbits.size(), 0);
    std::vector<bool> inside(part.orbits.size(), false);
    for (std::size_t o = 0; o < part.orbits.size(); ++o)
        inside[o] = (PolyFp(p, part.orbits[o].representative) % f).is_zero();
    for (u64 idx = 0; idx < part.total; ++idx) {
        const u32 o = part.orbit_of[idx];
        if (!inside[o]) continue;
        const RingElement m(part.core, p, detail::decode(idx, p, k));
        for (u64 c : m.coords()) comp[o] = (comp[o] + c) % p;
        const u64 t = trace_by_lucas(m, lucas);
        tr[o] = (tr[o] + t) % p;
        rep.trace_total = (rep.trace_total + t) % p;
        ++rep.members;
    }
    for (std::size_t o = 0; o < part.orbits.size(); ++o) {
        if (!inside[o]) continue;
        ++rep.orbits;
        if (comp[o] != tr[o]) ++rep.component_trace_mismatches;
    }
    return rep;
}

/// Rank of every subset sum of the idempotents equals the sum of their ranks,
/// and the ranks of all of them add up to k.
inline bool rank_additivity_holds(const SemilocalStructure& st) {
    const std::size_t s = st.idempotents.size();
    if (s > 20) throw std::length_error("too many idempotents for a subset sweep");
    const auto k = static_cast<std::size_t>(st.core.k());
    if (std::accumulate(st.ranks.begin(), st.ranks.end(), std::size_t{0}) != k) return false;
    for (u64 mask = 1; mask < (u64{1} << s); ++mask) {
        auto sum = RingElement::zero(st.core, st.p);
        std::size_t expected = 0;
        for (std::size_t i = 0; i < s; ++i)
            if (mask >> i & 1) {
                sum = sum + st.idempotents[i];
                expected += st.ranks[i];
            }
        if (rank(sum) != expected) return false;
    }
    return true;
}

} // namespace isorec

#endif // ISOREC_SEMILOCAL_HPP
