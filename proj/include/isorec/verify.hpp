#ifndef ISOREC_VERIFY_HPP
#define ISOREC_VERIFY_HPP

// Property sweeps over families of cores and primes. Each suite separates
// asserted properties (failures) from reported-only observations (reports).

#include "isorec/companion.hpp"
#include "isorec/fp_algebra.hpp"
#include "isorec/isobaric.hpp"
#include "isorec/recurrence.hpp"
#include "isorec/semilocal.hpp"

#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace isorec {

struct SweepParams {
    int k_max = 3;
    i64 t_range = 1;
    u64 p_max = 7;
    u64 seed = 0x5eed;
    u64 budget = default_enumeration_budget;
    u64 ring_cap = 243;   // largest p^k enumerated by the orbit and trace suites
    unsigned samples = 200;
};

struct SuiteResult {
    std::string name;
    u64 checked = 0;
    std::vector<std::string> failures;
    std::vector<std::string> reports;
    std::map<std::string, u64> counts;

    bool passed() const { return failures.empty(); }
    void merge(const SuiteResult& o) {
        checked += o.checked;
        for (const auto& f : o.failures) failures.push_back(o.name + ": " + f);
        for (const auto& r : o.reports) reports.push_back(o.name + ": " + r);
        for (const auto& [key, v] : o.counts) counts[o.name + "." + key] += v;
    }
};

/// Every core with k entries in [-range, range] and t_k != 0.
inline std::vector<CorePolynomial> cores_in_box(int k, i64 range) {
    std::vector<CorePolynomial> out;
    std::vector<i64> t(static_cast<std::size_t>(k), -range);
    while (true) {
        if (t.back() != 0) out.emplace_back(t);
        std::size_t i = 0;
        while (i < t.size() && t[i] == range) t[i++] = -range;
        if (i == t.size()) break;
        ++t[i];
    }
    return out;
}

inline std::vector<CorePolynomial> cores_up_to(int k_max, i64 range) {
    std::vector<CorePolynomial> out;
    for (int k = 1; k <= k_max; ++k)
        for (auto& c : cores_in_box(k, range)) out.push_back(std::move(c));
    return out;
}

/// Pairs (core, p) where the core runs over all of F_p^k with t_k != 0 and
/// p^k <= ring_cap.
inline std::vector<std::pair<CorePolynomial, u64>> enumerable_rings(int k_max, u64 p_max, u64 ring_cap) {
    std::vector<std::pair<CorePolynomial, u64>> out;
    for (u64 p : primes_in_range(2, p_max))
        for (int k = 1; k <= k_max; ++k) {
            u64 size = 1;
            bool fits = true;
            for (int i = 0; i < k && fits; ++i) fits = (size *= p) <= ring_cap;
            if (!fits) break;
            for (u64 idx = 0; idx < size; ++idx) {
                std::vector<i64> t(static_cast<std::size_t>(k));
                u64 rest = idx;
                for (auto& v : t) {
                    v = static_cast<i64>(rest % p);
                    rest /= p;
                }
                if (t.back() != 0) out.emplace_back(CorePolynomial(std::move(t)), p);
            }
        }
    return out;
}

namespace detail {

inline std::string cell(const CorePolynomial& core, u64 p) { return core.to_string() + " mod " + std::to_string(p); }

} // namespace detail

/// p | c_p <=> C mod p is not squarefree, with both period algorithms compared.
inline SuiteResult verify_ramification_suite(const std::vector<CorePolynomial>& cores, const std::vector<u64>& primes) {
    SuiteResult r;
    r.name = "ramification";
    const auto sweep = verify_ramification_theorem(cores, primes);
    r.checked = sweep.checked;
    r.failures = sweep.failures;
    r.counts["pairs"] = sweep.checked;
    r.counts["skipped_p_divides_tk"] = sweep.skipped;
    return r;
}

/// Divisibility laws for the period, the unit count law and rank additivity.
/// The product law c_p = L |J| is reported, not asserted.
inline SuiteResult verify_period_suite(const std::vector<CorePolynomial>& cores, const std::vector<u64>& primes, u64 budget) {
    SuiteResult r;
    r.name = "periods";
    for (const auto& core : cores)
        for (u64 p : primes) {
            if (reduce_mod(core.last(), p) == 0) continue;
            ++r.checked;
            const auto where = detail::cell(core, p);
            const auto law = verify_period_law(core, p);
            if (!law.lcm_divides_period) r.failures.push_back(where + ": L = " + std::to_string(law.lcm_factor_periods) + " does not divide c_p = " + std::to_string(law.period));
            if (!law.equal_when_unramified) r.failures.push_back(where + ": unramified but c_p != L");
            if (!law.inflation_is_p_power) r.failures.push_back(where + ": ramified but c_p / L is not a positive power of p");
            if (law.radical_period_law_holds) {
                ++r.counts["product_law_holds"];
            } else {
                ++r.counts["product_law_fails"];
                r.reports.push_back(where + ": c_p = " + std::to_string(law.period) + " but L * |J| = " + std::to_string(law.lcm_factor_periods) + " * " + to_string(law.radical_order));
            }
            const auto units = verify_unit_group_law(core, p, budget);
            if (units.enumerated) ++r.counts["unit_counts_enumerated"];
            if (!units.holds()) r.failures.push_back(where + ": unit count " + (units.enumerated ? std::to_string(*units.enumerated) : "?") + " != " + to_string(units.closed_form));
            const auto st = decompose(core, p);
            if (!st.ramified) {
                ++r.counts["rank_additivity_checked"];
                if (!rank_additivity_holds(st)) r.failures.push_back(where + ": idempotent ranks are not additive");
            }
        }
    return r;
}

/// Orbit laws, and the idempotent orbit law (eA)^n = e A^n.
inline SuiteResult verify_orbit_suite(const std::vector<std::pair<CorePolynomial, u64>>& rings, u64 budget) {
    SuiteResult r;
    r.name = "orbits";
    for (const auto& [core, p] : rings) {
        ++r.checked;
        const auto where = detail::cell(core, p);
        const auto part = orbit_partition(core, p, budget);
        r.counts["orbits"] += part.orbits.size();
        for (const auto& v : part.violations) r.failures.push_back(where + ": " + v);
        // The orbit of an idempotent e is the cyclic group generated by eA.
        const auto st = decompose(core, p);
        const auto lam = RingElement::lambda(core, p);
        for (const auto& e : st.idempotents) {
            const auto ea = e * lam;
            auto power = e, orbit_elem = e;
            for (u64 n = 1; n <= part.period; ++n) {
                power = power * ea;
                orbit_elem = orbit_elem * lam;
                if (!(power == orbit_elem)) {
                    r.failures.push_back(where + ": (eA)^" + std::to_string(n) + " != eA^" + std::to_string(n) + " for e = " + e.to_string());
                    break;
                }
            }
        }
    }
    return r;
}

/// Trace agreement on every element, component and trace sums per orbit, and
/// the vanishing of trace sums over each maximal ideal.
inline SuiteResult verify_trace_suite(const std::vector<std::pair<CorePolynomial, u64>>& rings, u64 budget) {
    SuiteResult r;
    r.name = "traces";
    for (const auto& [core, p] : rings) {
        ++r.checked;
        const auto where = detail::cell(core, p);
        const auto part = orbit_partition(core, p, budget);
        const auto lucas = lucas_values_mod(core, p);
        const auto k = static_cast<std::size_t>(core.k());
        for (u64 idx = 0; idx < part.total; ++idx) {
            const RingElement m(core, p, detail::decode(idx, p, k));
            if (trace_by_matrix(m) != trace_by_lucas(m, lucas)) {
                r.failures.push_back(where + ": matrix and Lucas traces differ at " + m.to_string());
                break;
            }
        }
        const auto fac = factor_core_mod_p(core, p);
        for (std::size_t i = 0; i < fac.factors.size(); ++i) {
            const auto rep = trace_orbit_sums(part, fac, i);
            ++r.counts["ideals"];
            const auto ideal = where + ", ideal (" + rep.generator.to_string() + ")";
            if (!rep.component_law_holds())
                r.failures.push_back(ideal + ": " + std::to_string(rep.component_trace_mismatches) + " orbits whose component sum differs from their trace sum");
            if (!rep.ideal_sum_vanishes()) {
                ++r.counts["ideal_trace_sum_nonzero"];
                r.failures.push_back(ideal + ": trace sum over the ideal is " + std::to_string(rep.trace_total) + ", not 0");
            }
        }
    }
    return r;
}

/// Companion identities on random (core, n): trace = Lucas value, entries =
/// signed Schur hooks, det A^n = (-1)^{n(k+1)} t_k^n. Negative-index Schur
/// quotients for k = 3 are reported only.
inline SuiteResult verify_schur_suite(int k_max, i64 t_range, unsigned samples, u64 seed) {
    SuiteResult r;
    r.name = "schur";
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick_k(1, k_max);
    std::uniform_int_distribution<i64> pick_t(-t_range, t_range);
    std::uniform_int_distribution<i64> pick_n(1, 10);
    const IntegerRing z;
    std::map<std::tuple<int, i64, int, int>, IsobaricPolynomial> hooks;
    for (unsigned s = 0; s < samples; ++s) {
        const int k = pick_k(rng);
        std::vector<i64> t(static_cast<std::size_t>(k));
        for (auto& v : t) v = pick_t(rng);
        const i64 n = pick_n(rng);
        const CorePolynomial core(t);
        const auto tb = core.as_bigints();
        const auto an = power(core, n, z);
        ++r.checked;
        const auto where = core.to_string() + ", n = " + std::to_string(n);
        if (an.trace() != glp(k, n).evaluate<BigInt>(tb)) r.failures.push_back(where + ": tr A^n differs from the Lucas value");
        for (int row = 1; row <= k; ++row)
            for (int col = 1; col <= k; ++col) {
                auto key = std::make_tuple(k, n, row, col);
                auto it = hooks.find(key);
                if (it == hooks.end()) it = hooks.emplace(key, schur_hook_entry(k, n, row, col)).first;
                if (an(static_cast<std::size_t>(row - 1), static_cast<std::size_t>(col - 1)) != it->second.evaluate<BigInt>(tb))
                    r.failures.push_back(where + ": entry (" + std::to_string(row) + "," + std::to_string(col) + ") differs from its Schur hook");
            }
        BigInt det = pow(BigInt(core.last()), static_cast<unsigned>(n));
        if ((n * (k + 1)) % 2 != 0) det = -det;
        if (an.determinant() != det) r.failures.push_back(where + ": det A^n != (-1)^{n(k+1)} t_k^n");
    }
    if (k_max >= 3) {
        std::uniform_int_distribution<i64> nonzero(2, 3); // |t_3| > 1 separates the exponent candidates
        std::vector<i64> t{pick_t(rng), pick_t(rng), nonzero(rng)};
        const auto rep = negative_schur_identities_check(CorePolynomial(t), 3, 10);
        const char* names[] = {"S_(-n)", "S_(-n,1)", "S_(-n,1,1)"};
        for (std::size_t id = 0; id < 3; ++id) {
            u64 held = 0;
            for (const auto& row : rep.rows) held += row.classical_form_holds[id];
            r.reports.push_back(CorePolynomial(t).to_string() + ": " + names[id] + " = " + rep.classical_forms[id] + " holds for " +
                                std::to_string(held) + "/" + std::to_string(rep.rows.size()) + " of n = 3..10; consistent form: " + rep.consistent_forms[id]);
        }
    }
    return r;
}

/// dG_n/dt_j = n F_{n-j}, and the right-hand column of the orbit of the
/// different C'(lambda) is the Lucas sequence.
inline SuiteResult verify_lucas_suite(int k_max, long n_max, i64 t_range) {
    SuiteResult r;
    r.name = "lucas";
    for (int k = 1; k <= k_max; ++k)
        for (long n = 1; n <= n_max; ++n)
            for (int j = 1; j <= k && j <= n; ++j) {
                ++r.checked;
                if (!(glp(k, n).partial(j) == BigInt(n) * gfp(k, n - j)))
                    r.failures.push_back("d G_{" + std::to_string(k) + "," + std::to_string(n) + "} / d t_" + std::to_string(j) + " != n F");
            }
    const IntegerRing z;
    for (int k = 1; k <= k_max; ++k) {
        std::vector<IsobaricPolynomial> lucas;
        for (long n = 0; n <= n_max; ++n) lucas.push_back(glp(k, n));
        for (const auto& core : cores_in_box(k, t_range)) {
            ++r.checked;
            const auto a = companion_matrix(core, z);
            const auto tb = core.as_bigints();
            auto row = different_element(core);
            for (long n = 0; n <= n_max; ++n) {
                if (row.back() != lucas[static_cast<std::size_t>(n)].evaluate<BigInt>(tb)) {
                    r.failures.push_back(core.to_string() + ": different orbit column differs from G_" + std::to_string(n));
                    break;
                }
                row = a.left_apply(row);
            }
        }
    }
    return r;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"all", "ramification", "periods", "orbits", "traces", "schur", "lucas"};
    return names;
}

inline SuiteResult run_suite(const std::string& name, const SweepParams& prm) {
    const auto primes = primes_in_range(2, prm.p_max);
    if (name == "ramification") return verify_ramification_suite(cores_up_to(prm.k_max, prm.t_range), primes);
    if (name == "periods") return verify_period_suite(cores_up_to(prm.k_max, prm.t_range), primes, prm.budget);
    if (name == "orbits") return verify_orbit_suite(enumerable_rings(prm.k_max, prm.p_max, prm.ring_cap), prm.budget);
    if (name == "traces") return verify_trace_suite(enumerable_rings(prm.k_max, prm.p_max, prm.ring_cap), prm.budget);
    if (name == "schur") return verify_schur_suite(prm.k_max, prm.t_range, prm.samples, prm.seed);
    if (name == "lucas") return verify_lucas_suite(prm.k_max, 10, prm.t_range);
    if (name == "all") {
        SuiteResult all;
        all.name = "all";
        for (const auto& n : suite_names())
            if (n != "all") all.merge(run_suite(n, prm));
        return all;
    }
    throw std::invalid_argument("unknown suite: " + name);
}

} // namespace isorec

#endif // ISOREC_VERIFY_HPP
