#ifndef ISOREC_RECURRENCE_HPP
#define ISOREC_RECURRENCE_HPP

/// Numerical recursions f_n = t_1 f_{n-1} + ... + t_k f_{n-k} seeded with the
/// GFP window (f_{1-k}, ..., f_0) = (0, ..., 0, 1), and their periods.

#include "isorec/companion.hpp"
#include "isorec/core.hpp"
#include "isorec/errors.hpp"
#include "isorec/fp_algebra.hpp"
#include "isorec/rings.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isorec {

/// Terms f_lo..f_hi over an exact ring. Terms below 1-k need t_k to be a unit.
template <class Ring>
std::vector<typename Ring::value_type> generate_in(const CorePolynomial& core, i64 lo, i64 hi, const Ring& ring) {
    if (lo > hi) return {};
    const i64 k = core.k();
    const i64 first = std::min(lo, 1 - k);
    const i64 last = std::max(hi, i64{0});
    std::vector<typename Ring::value_type> f(static_cast<std::size_t>(last - first + 1), ring.zero());
    auto at = [&](i64 n) -> typename Ring::value_type& { return f[static_cast<std::size_t>(n - first)]; };
    at(0) = ring.one();
    std::vector<typename Ring::value_type> t;
    for (int j = 1; j <= core.k(); ++j) t.push_back(ring.from(BigInt(core.t(j))));
    for (i64 n = 1; n <= last; ++n) {
        auto v = ring.zero();
        for (i64 j = 1; j <= k; ++j) v = ring.add(v, ring.mul(t[static_cast<std::size_t>(j - 1)], at(n - j)));
        at(n) = v;
    }
    if (first < 1 - k) {
        const auto tk_inv = inverse_of_last(core, ring);
        // f_{n-k} = (f_n - sum_{j<k} t_j f_{n-j}) / t_k
        for (i64 n = 0; n - k >= first; --n) {
            auto v = at(n);
            for (i64 j = 1; j < k; ++j) v = ring.sub(v, ring.mul(t[static_cast<std::size_t>(j - 1)], at(n - j)));
            at(n - k) = ring.mul(v, tk_inv);
        }
    }
    return {f.begin() + (lo - first), f.begin() + (hi - first) + 1};
}

/// Terms over Z, or residues 0..p-1 when a modulus is given.
inline std::vector<BigInt> generate(const CorePolynomial& core, i64 lo, i64 hi, std::optional<u64> modulus = std::nullopt) {
    if (!modulus) return generate_in(core, lo, hi, IntegerRing{});
    const auto residues = generate_in(core, lo, hi, PrimeField(*modulus));
    return {residues.begin(), residues.end()};
}

enum class PeriodKind { pure, eventually_periodic, not_periodic };

inline std::string to_string(PeriodKind k) {
    switch (k) {
    case PeriodKind::pure: return "pure";
    case PeriodKind::eventually_periodic: return "eventually-periodic";
    case PeriodKind::not_periodic: return "not-periodic";
    }
    return "?";
}

struct PeriodVerdict {
    PeriodKind kind = PeriodKind::not_periodic;
    u64 preperiod = 0;
    u64 period = 0;
    std::string witness;
};

namespace detail {

// Least rho >= 0 with window(rho) == window(rho + c), windows seeded at 0.
inline u64 preperiod_over_z(const CorePolynomial& core, u64 c, u64 horizon) {
    const auto f = generate_in(core, 1 - core.k(), static_cast<i64>(horizon + c), IntegerRing{});
    const auto k = static_cast<std::size_t>(core.k());
    for (u64 rho = 0; rho <= horizon; ++rho) {
        bool same = true;
        for (std::size_t i = 0; i < k && same; ++i) same = f[rho + i] == f[rho + c + i];
        if (same) return rho;
    }
    throw std::logic_error("preperiod search exceeded its horizon");
}

} // namespace detail

/// Periodicity over Z: C(X) (after removing factors X) must be a squarefree
/// product of cyclotomic polynomials; the period is the lcm of their orders.
inline PeriodVerdict is_periodic_over_Z(const CorePolynomial& core) {
    auto t = core.coefficients();
    std::size_t zeros = 0;
    while (!t.empty() && t.back() == 0) {
        t.pop_back();
        ++zeros;
    }
    if (t.empty()) {
        // C = X^k: f_0 = 1 then zeros forever.
        return {PeriodKind::eventually_periodic, static_cast<u64>(core.k()), 1,
                "C = X^" + std::to_string(core.k()) + ": sequence is 1 then identically 0"};
    }
    const CorePolynomial reduced(t);
    PolyZ rest = core_to_poly(reduced);
    const auto k = static_cast<u64>(reduced.k());
    u64 period = 1;
    std::string factors;
    for (unsigned m = 1; m <= 2 * k * k + 2; ++m) {
        if (euler_phi(m) > k) continue;
        const PolyZ phi = cyclotomic(m);
        unsigned mult = 0;
        while (rest.degree() >= phi.degree()) {
            auto [q, r] = rest.divmod_monic(phi);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        if (mult == 0) continue;
        factors += (factors.empty() ? "" : "*") + std::string("Phi_") + std::to_string(m) +
                   (mult > 1 ? "^" + std::to_string(mult) : "");
        if (mult > 1)
            return {PeriodKind::not_periodic, 0, 0,
                    "repeated cyclotomic factor Phi_" + std::to_string(m) + "^" + std::to_string(mult) +
                        ": terms grow polynomially"};
        period = lcm_checked(period, m);
    }
    if (rest.degree() > 0)
        return {PeriodKind::not_periodic, 0, 0, "non-cyclotomic factor " + rest.to_string() + " has a root off the unit circle or of infinite order"};
    if (zeros == 0) return {PeriodKind::pure, 0, period, "C = " + factors};
    const u64 rho = detail::preperiod_over_z(core, period, zeros + static_cast<u64>(core.k()) + period);
    return {PeriodKind::eventually_periodic, rho, period,
            "C = X^" + std::to_string(zeros) + "*" + factors + " (t_k = 0, recursion not invertible)"};
}

namespace detail {

struct StateMap {
    const std::vector<u64>& t; // t_1..t_k mod p
    u64 p;
    // state = (f_{n-k+1}, ..., f_n)
    void advance(std::vector<u64>& s) const {
        const std::size_t k = s.size();
        u64 next = 0;
        for (std::size_t j = 1; j <= k; ++j) next = (next + mul_mod(t[j - 1], s[k - j], p)) % p;
        for (std::size_t i = 0; i + 1 < k; ++i) s[i] = s[i + 1];
        s[k - 1] = next;
    }
};

inline std::vector<u64> seed_window(std::size_t k) {
    std::vector<u64> s(k, 0);
    s[k - 1] = 1;
    return s;
}

} // namespace detail

/// Period of the recursion mod p by cycling the state window. For p | t_k the
/// state map is not invertible and Brent's cycle detection reports the
/// preperiod and period instead.
inline PeriodVerdict period_mod_p_bruteforce(const CorePolynomial& core, u64 p) {
    require_prime(p);
    const auto k = static_cast<std::size_t>(core.k());
    std::vector<u64> t;
    for (int j = 1; j <= core.k(); ++j) t.push_back(reduce_mod(core.t(j), p));
    const detail::StateMap step{t, p};
    const auto seed = detail::seed_window(k);

    if (t.back() != 0) {
        const unsigned __int128 bound = [&] {
            unsigned __int128 b = 1;
            for (std::size_t i = 0; i < k; ++i) b *= p;
            return b - 1;
        }();
        auto s = seed;
        u64 c = 0;
        do {
            step.advance(s);
            ++c;
            if (c > bound) throw std::logic_error("state cycle longer than p^k - 1");
        } while (s != seed);
        return {PeriodKind::pure, 0, c,
                "window (f_" + std::to_string(c - k + 1) + ", ..., f_" + std::to_string(c) + ") = (0, ..., 0, 1)"};
    }

    // Brent: find cycle length lam, then the first index mu of the cycle.
    u64 power = 1, lam = 1;
    auto tortoise = seed;
    auto hare = seed;
    step.advance(hare);
    while (tortoise != hare) {
        if (power == lam) {
            tortoise = hare;
            power *= 2;
            lam = 0;
        }
        step.advance(hare);
        ++lam;
    }
    tortoise = seed;
    hare = seed;
    for (u64 i = 0; i < lam; ++i) step.advance(hare);
    u64 mu = 0;
    while (tortoise != hare) {
        step.advance(tortoise);
        step.advance(hare);
        ++mu;
    }
    return {mu == 0 ? PeriodKind::pure : PeriodKind::eventually_periodic, mu, lam,
            "p | t_k: state map singular; cycle entered after " + std::to_string(mu) + " steps"};
}

/// The core whose polynomial is the monic f over F_p (t_j = -f_{k-j} mod p).
inline CorePolynomial core_from_monic(const PolyFp& f) {
    const auto m = f.monic();
    const auto k = static_cast<std::size_t>(m.degree());
    if (k == 0) throw std::invalid_argument("constant polynomial has no core");
    std::vector<i64> t(k);
    for (std::size_t j = 1; j <= k; ++j) t[j - 1] = static_cast<i64>((m.p() - m.coeff(k - j)) % m.p());
    return CorePolynomial(std::move(t));
}

/// Multiplicative order of A over F_p. The exponent bound is the lcm over the
/// factors f^e of C mod p of (p^deg f - 1) * p^ceil(log_p e); it is then
/// reduced one prime at a time.
inline u64 period_mod_p_matrix_order(const CorePolynomial& core, u64 p, const FpFactorization& fac) {
    const PrimeField field(p);
    if (reduce_mod(core.last(), p) == 0)
        throw not_invertible("p = " + std::to_string(p) + " divides t_k: companion matrix is singular");
    u64 bound = 1;
    std::map<u64, unsigned> primes;
    for (const auto& [f, e] : fac.factors) {
        const u64 unit_order = pow_checked(p, static_cast<unsigned>(f.degree())) - 1;
        u64 inflation = 1;
        while (inflation < e) inflation *= p;
        bound = lcm_checked(bound, lcm_checked(unit_order, 1) * inflation);
        for (auto [q, m] : factor_u64(unit_order)) primes[q] = 1;
        if (inflation > 1) primes[p] = 1;
    }
    const auto a = companion_matrix(core, field);
    const auto id = Matrix<PrimeField>::identity(field, static_cast<std::size_t>(core.k()));
    if (!(matrix_power(a, bound) == id)) throw std::logic_error("exponent bound does not annihilate A");
    u64 order = bound;
    for (const auto& [q, unused] : primes)
        while (order % q == 0 && matrix_power(a, order / q) == id) order /= q;
    return order;
}

inline u64 period_mod_p_matrix_order(const CorePolynomial& core, u64 p) {
    require_prime(p);
    if (reduce_mod(core.last(), p) == 0)
        throw not_invertible("p = " + std::to_string(p) + " divides t_k: companion matrix is singular");
    return period_mod_p_matrix_order(core, p, factor_core_mod_p(core, p));
}

/// Period of the recursion attached to a monic factor f (f(0) != 0): the
/// order of x in F_p[x]/(f).
inline u64 factor_period(const PolyFp& f) {
    return period_mod_p_matrix_order(core_from_monic(f), f.p());
}

/// Minimal period of n -> tr(A^n) mod p, searched among divisors of c_p.
inline u64 trace_period_mod_p(const CorePolynomial& core, u64 p, u64 c_p) {
    const PrimeField field(p);
    const auto tr = trace_sequence(core, 0, static_cast<i64>(c_p) - 1, field);
    for (u64 d = 1; d <= c_p; ++d) {
        if (c_p % d != 0) continue;
        bool ok = true;
        for (u64 n = 0; n < c_p && ok; ++n) ok = tr[n] == tr[(n + d) % c_p];
        if (ok) return d;
    }
    return c_p;
}

struct ScanRow {
    u64 p;
    u64 c_p;                // eventual period when degenerate
    u64 preperiod = 0;
    bool p_divides_c;
    bool ramified;
    bool degenerate;        // p | t_k
    bool algorithms_agree;  // brute force vs matrix order (true when degenerate)
    bool ramification_consistent;  // (p | c_p) == ramified; true when degenerate
};

inline ScanRow scan_prime(const CorePolynomial& core, u64 p) {
    require_prime(p);
    const auto verdict = period_mod_p_bruteforce(core, p);
    ScanRow row{p, verdict.period, verdict.preperiod, verdict.period % p == 0, ramifies(core, p), false, true, true};
    if (reduce_mod(core.last(), p) == 0) {
        row.degenerate = true;
        return row;
    }
    row.algorithms_agree = period_mod_p_matrix_order(core, p) == verdict.period;
    row.ramification_consistent = row.p_divides_c == row.ramified;
    return row;
}

/// One row per prime, ordered as given.
inline std::vector<ScanRow> period_scan(const CorePolynomial& core, const std::vector<u64>& primes) {
    std::vector<ScanRow> rows;
    rows.reserve(primes.size());
    for (u64 p : primes) rows.push_back(scan_prime(core, p));
    return rows;
}

} // namespace isorec

#endif // ISOREC_RECURRENCE_HPP
