#ifndef ISOREC_FP_ALGEBRA_HPP
#define ISOREC_FP_ALGEBRA_HPP

#include "isorec/core.hpp"
#include "isorec/matrix.hpp"
#include "isorec/poly.hpp"

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace isorec {

/// C(X) = X^k - t_1 X^{k-1} - ... - t_k.
inline PolyZ core_to_poly(const CorePolynomial& core) {
    const auto k = static_cast<std::size_t>(core.k());
    std::vector<BigInt> c(k + 1, 0);
    c[k] = 1;
    for (int j = 1; j <= core.k(); ++j) c[k - static_cast<std::size_t>(j)] = -BigInt(core.t(j));
    return PolyZ(std::move(c));
}

inline PolyZ derivative(const PolyZ& f) { return f.derivative(); }

/// det of the Sylvester matrix of (f, g), f's rows first.
inline BigInt resultant(const PolyZ& f, const PolyZ& g) {
    if (f.is_zero() && g.is_zero()) throw std::invalid_argument("resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return 0;
    const auto m = static_cast<std::size_t>(f.degree());
    const auto n = static_cast<std::size_t>(g.degree());
    const std::size_t size = m + n;
    Matrix<IntegerRing> s(IntegerRing{}, size, size);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t i = 0; i <= m; ++i) s(r, r + i) = f.coeff(m - i);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t i = 0; i <= n; ++i) s(n + r, r + i) = g.coeff(n - i);
    return s.determinant();
}

/// Discriminant of the monic core: (-1)^{k(k-1)/2} Res(C, C').
inline BigInt discriminant(const CorePolynomial& core) {
    const auto c = core_to_poly(core);
    const BigInt r = resultant(c, c.derivative());
    const long k = core.k();
    return (k * (k - 1) / 2) % 2 == 0 ? r : BigInt(-r);
}

/// C'(lambda) in the basis {1, lambda, ..., lambda^{k-1}}:
/// (-t_{k-1}, -2 t_{k-2}, ..., -(k-1) t_1, k).
inline std::vector<BigInt> different_element(const CorePolynomial& core) {
    const int k = core.k();
    std::vector<BigInt> v(static_cast<std::size_t>(k));
    for (int i = 0; i + 1 < k; ++i) v[static_cast<std::size_t>(i)] = -BigInt(i + 1) * core.t(k - 1 - i);
    v[static_cast<std::size_t>(k - 1)] = k;
    return v;
}

inline int moebius(u64 n) {
    int mu = 1;
    for (auto [q, e] : factor_u64(n)) {
        if (e > 1) return 0;
        mu = -mu;
    }
    return mu;
}

/// n-th cyclotomic polynomial: prod_{d | n} (X^d - 1)^{mu(n/d)}, with the
/// negative-exponent factors removed by exact monic division.
inline PolyZ cyclotomic(unsigned n) {
    if (n == 0) throw std::invalid_argument("cyclotomic index must be positive");
    PolyZ num = PolyZ::monomial(1, 0);
    std::vector<PolyZ> den;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        const PolyZ f = PolyZ::monomial(1, d) - PolyZ::monomial(1, 0);
        const int mu = moebius(n / d);
        if (mu == 1) num = num * f;
        if (mu == -1) den.push_back(f);
    }
    for (const auto& f : den) num = num.divmod_monic(f).first;
    return num;
}

struct FpFactor {
    PolyFp f;
    unsigned e;
    bool operator==(const FpFactor&) const = default;
};

/// Monic irreducible factors with multiplicities, sorted by degree then
/// coefficients (leading first).
struct FpFactorization {
    u64 p;
    std::vector<FpFactor> factors;

    PolyFp product() const {
        PolyFp r = PolyFp::constant(p, 1);
        for (const auto& [f, e] : factors)
            for (unsigned i = 0; i < e; ++i) r = r * f;
        return r;
    }
    bool squarefree() const {
        for (const auto& fe : factors)
            if (fe.e > 1) return false;
        return true;
    }
};

/// Rabin's test: f of degree n is irreducible iff X^{p^n} = X mod f and
/// gcd(X^{p^{n/q}} - X, f) = 1 for every prime q | n.
inline bool is_irreducible(const PolyFp& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    const u64 p = f.p();
    const auto n = static_cast<unsigned>(f.degree());
    const PolyFp g = f.monic();
    const PolyFp x = PolyFp::x(p);
    auto frob = [&](unsigned times) {
        PolyFp h = x % g;
        for (unsigned i = 0; i < times; ++i) h = pow_mod(h, p, g);
        return h;
    };
    for (auto [q, mult] : factor_u64(n)) {
        if (!gcd(g, frob(n / static_cast<unsigned>(q)) - x).is_one()) return false;
    }
    return (frob(n) - x) % g == PolyFp(p);
}

inline std::vector<FpFactor> squarefree_decomposition(const PolyFp& f) {
    std::vector<FpFactor> out;
    auto rec = [&](auto&& self, PolyFp g, unsigned scale) -> void {
        if (g.degree() < 1) return;
        PolyFp c = gcd(g, g.derivative());
        PolyFp w = g / c;
        unsigned i = 1;
        while (!w.is_one()) {
            PolyFp y = gcd(w, c);
            PolyFp fac = w / y;
            if (!fac.is_one()) out.push_back({fac.monic(), i * scale});
            ++i;
            w = std::move(y);
            c = c / w;
        }
        if (!c.is_one()) self(self, c.monic().pth_root(), scale * static_cast<unsigned>(g.p()));
    };
    rec(rec, f.monic(), 1);
    return out;
}

/// Splits a squarefree monic polynomial into products of equal-degree factors.
inline std::vector<std::pair<PolyFp, unsigned>> distinct_degree_factorization(const PolyFp& f) {
    const u64 p = f.p();
    std::vector<std::pair<PolyFp, unsigned>> out;
    PolyFp rest = f.monic();
    const PolyFp x = PolyFp::x(p);
    PolyFp h = x % rest;
    for (unsigned d = 1; rest.degree() >= 2 * static_cast<long>(d); ++d) {
        h = pow_mod(h, p, rest);
        PolyFp g = gcd(h - x, rest);
        if (!g.is_one()) {
            out.emplace_back(g, d);
            rest = rest / g;
            h = h % rest;
        }
    }
    if (rest.degree() >= 1) out.emplace_back(rest, static_cast<unsigned>(rest.degree()));
    return out;
}

/// Cantor-Zassenhaus splitting of a product of distinct degree-d irreducibles.
inline std::vector<PolyFp> equal_degree_factorization(const PolyFp& f, unsigned d, std::mt19937_64& rng) {
    const u64 p = f.p();
    const auto n = static_cast<std::size_t>(f.degree());
    const std::size_t r = n / d;
    std::vector<PolyFp> parts{f.monic()};
    if (r <= 1) return parts;
    std::uniform_int_distribution<u64> coef(0, p - 1);
    const BigInt exponent = (pow(BigInt(p), d) - 1) / 2;
    while (parts.size() < r) {
        std::vector<u64> a(n);
        for (auto& v : a) v = coef(rng);
        PolyFp rand_poly(p, std::move(a));
        if (rand_poly.degree() < 1) continue;
        PolyFp b(p);
        if (p == 2) {
            PolyFp term = rand_poly % f;
            b = term;
            for (unsigned i = 1; i < d; ++i) {
                term = (term * term) % f;
                b = b + term;
            }
        } else {
            b = pow_mod(rand_poly, exponent, f) - PolyFp::constant(p, 1);
        }
        std::vector<PolyFp> next;
        for (auto& u : parts) {
            if (u.degree() == static_cast<long>(d)) {
                next.push_back(u);
                continue;
            }
            PolyFp g = gcd(u, b % u);
            if (g.degree() > 0 && g.degree() < u.degree()) {
                next.push_back(g);
                next.push_back((u / g).monic());
            } else {
                next.push_back(u);
            }
        }
        parts = std::move(next);
    }
    return parts;
}

/// Factorization by trial division with monic polynomials of increasing
/// degree; the first divisor found at each degree is irreducible.
inline FpFactorization factor_mod_p_exhaustive(const PolyFp& f) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    const u64 p = f.p();
    FpFactorization out{p, {}};
    PolyFp rest = f.monic();
    for (long d = 1; 2 * d <= rest.degree(); ++d) {
        const u64 count = pow_checked(p, static_cast<unsigned>(d));
        for (u64 idx = 0; idx < count && 2 * d <= rest.degree(); ++idx) {
            std::vector<u64> c(static_cast<std::size_t>(d) + 1);
            u64 v = idx;
            for (long i = 0; i < d; ++i) {
                c[static_cast<std::size_t>(i)] = v % p;
                v /= p;
            }
            c[static_cast<std::size_t>(d)] = 1;
            PolyFp cand(p, std::move(c));
            unsigned e = 0;
            while (true) {
                auto [q, r] = rest.divmod(cand);
                if (!r.is_zero()) break;
                rest = std::move(q);
                ++e;
            }
            if (e) out.factors.push_back({cand, e});
        }
    }
    if (rest.degree() >= 1) {
        bool merged = false;
        for (auto& fe : out.factors)
            if (fe.f == rest) {
                ++fe.e;
                merged = true;
            }
        if (!merged) out.factors.push_back({rest, 1});
    }
    std::sort(out.factors.begin(), out.factors.end(), [](const FpFactor& a, const FpFactor& b) { return a.f < b.f; });
    return out;
}

/// Complete factorization over F_p: squarefree decomposition, distinct-degree
/// splitting and randomized equal-degree splitting. Tiny cases (p <= 7,
/// degree <= 3) use exhaustive trial division. The result is unique and
/// sorted, so it does not depend on the generator; only runtime does.
inline FpFactorization factor_mod_p(const PolyFp& f, std::mt19937_64& rng) {
    if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
    if (f.p() <= 7 && f.degree() <= 3) return factor_mod_p_exhaustive(f);
    FpFactorization out{f.p(), {}};
    for (const auto& [sqf, e] : squarefree_decomposition(f))
        for (const auto& [block, d] : distinct_degree_factorization(sqf))
            for (auto& irr : equal_degree_factorization(block, d, rng)) out.factors.push_back({irr.monic(), e});
    std::sort(out.factors.begin(), out.factors.end(), [](const FpFactor& a, const FpFactor& b) { return a.f < b.f; });
    return out;
}

inline FpFactorization factor_mod_p(const PolyFp& f, u64 seed = 0x5eed) {
    std::mt19937_64 rng(seed);
    return factor_mod_p(f, rng);
}

inline FpFactorization factor_core_mod_p(const CorePolynomial& core, u64 p, u64 seed = 0x5eed) {
    return factor_mod_p(PolyFp::from(core_to_poly(core), require_prime(p)), seed);
}

/// p | disc(C), cross-checked against squarefreeness of C mod p.
inline bool ramifies(const CorePolynomial& core, u64 p) {
    require_prime(p);
    const bool by_disc = reduce_mod(discriminant(core), p) == 0;
    const auto c = PolyFp::from(core_to_poly(core), p);
    const bool by_gcd = gcd(c, c.derivative()).degree() >= 1;
    const bool by_factors = !factor_mod_p(c).squarefree();
    if (by_disc != by_gcd || by_gcd != by_factors)
        throw std::logic_error("discriminant and squarefreeness tests disagree for " + core.to_string() + " mod " +
                               std::to_string(p));
    return by_disc;
}

} // namespace isorec

#endif // ISOREC_FP_ALGEBRA_HPP
