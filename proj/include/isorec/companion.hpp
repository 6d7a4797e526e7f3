#ifndef ISOREC_COMPANION_HPP
#define ISOREC_COMPANION_HPP

/// Companion matrix of a core, its signed powers, and the doubly infinite
/// orbit matrix whose rows are e_k A^n.
///
/// Indexing: row n of the orbit is e_k A^n, so rows 1-k..0 form the identity
/// block, row 1 is (t_k, ..., t_1) and the last entry of row n is F_{k,n}.
/// The coordinates of lambda^n in the basis {1, lambda, ..., lambda^{k-1}}
/// are e_1 A^n, i.e. orbit row n-k+1.

#include "isorec/core.hpp"
#include "isorec/errors.hpp"
#include "isorec/isobaric.hpp"
#include "isorec/matrix.hpp"
#include "isorec/rings.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace isorec {

template <class Ring>
Matrix<Ring> companion_matrix(const CorePolynomial& core, const Ring& ring) {
    const auto k = static_cast<std::size_t>(core.k());
    Matrix<Ring> a(ring, k, k);
    for (std::size_t i = 0; i + 1 < k; ++i) a(i, i + 1) = ring.one();
    for (std::size_t j = 0; j < k; ++j) a(k - 1, j) = ring.from(BigInt(core.t(static_cast<int>(k - j))));
    return a;
}

template <class Ring>
typename Ring::value_type inverse_of_last(const CorePolynomial& core, const Ring& ring) {
    const auto tk = ring.from(BigInt(core.last()));
    auto inv = ring.inverse(tk);
    if (!inv) {
        std::string where = ring.tag().name();
        if (ring.tag().kind == DomainKind::prime_field) where += " (p = " + std::to_string(ring.tag().p) + ")";
        throw not_invertible("companion matrix of " + core.to_string() + " is not invertible over " + where +
                             ": t_k = " + std::to_string(core.last()) + " is not a unit");
    }
    return *inv;
}

/// A^{-1}: first row (-t_{k-1}/t_k, ..., -t_1/t_k, 1/t_k), then the shifted identity.
template <class Ring>
Matrix<Ring> inverse(const CorePolynomial& core, const Ring& ring) {
    const auto k = static_cast<std::size_t>(core.k());
    const auto tk_inv = inverse_of_last(core, ring);
    Matrix<Ring> b(ring, k, k);
    for (std::size_t j = 0; j + 1 < k; ++j)
        b(0, j) = ring.neg(ring.mul(ring.from(BigInt(core.t(static_cast<int>(k - 1 - j)))), tk_inv));
    b(0, k - 1) = tk_inv;
    for (std::size_t i = 1; i < k; ++i) b(i, i - 1) = ring.one();
    return b;
}

template <class Ring>
Matrix<Ring> matrix_power(Matrix<Ring> base, u64 e) {
    auto result = Matrix<Ring>::identity(base.ring(), base.rows());
    while (e) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

/// A^n for any integer n by binary exponentiation; n < 0 needs t_k to be a unit.
template <class Ring>
Matrix<Ring> power(const CorePolynomial& core, i64 n, const Ring& ring) {
    if (n >= 0) return matrix_power(companion_matrix(core, ring), static_cast<u64>(n));
    return matrix_power(inverse(core, ring), static_cast<u64>(-(n + 1)) + 1);
}

template <class Ring>
class InfiniteSlice {
public:
    using value_type = typename Ring::value_type;

    InfiniteSlice(CorePolynomial core, i64 lo, std::vector<std::vector<value_type>> rows)
        : core_(std::move(core)), lo_(lo), rows_(std::move(rows)) {}

    const CorePolynomial& core() const { return core_; }
    i64 lo() const { return lo_; }
    i64 hi() const { return lo_ + static_cast<i64>(rows_.size()) - 1; }
    const std::vector<value_type>& row(i64 n) const { return rows_.at(static_cast<std::size_t>(n - lo_)); }

private:
    CorePolynomial core_;
    i64 lo_;
    std::vector<std::vector<value_type>> rows_;
};

/// Rows lo..hi of the doubly infinite orbit. Rows below 1-k require A^{-1}.
template <class Ring>
InfiniteSlice<Ring> infinite_slice(const CorePolynomial& core, i64 lo, i64 hi, const Ring& ring) {
    if (lo > hi) throw std::invalid_argument("slice window is empty");
    const auto k = static_cast<std::size_t>(core.k());
    const i64 ki = core.k();
    const auto a = companion_matrix(core, ring);
    std::vector<typename Ring::value_type> start(k, ring.zero());
    if (lo >= 1 - ki && lo <= 0) {
        start[static_cast<std::size_t>(lo + ki - 1)] = ring.one();
    } else {
        std::vector<typename Ring::value_type> ek(k, ring.zero());
        ek[k - 1] = ring.one();
        start = power(core, lo, ring).left_apply(ek);
    }
    std::vector<std::vector<typename Ring::value_type>> rows;
    rows.reserve(static_cast<std::size_t>(hi - lo + 1));
    rows.push_back(std::move(start));
    for (i64 n = lo + 1; n <= hi; ++n) rows.push_back(a.left_apply(rows.back()));
    return InfiniteSlice<Ring>(core, lo, std::move(rows));
}

/// tr(A^n) for n = lo..hi.
template <class Ring>
std::vector<typename Ring::value_type> trace_sequence(const CorePolynomial& core, i64 lo, i64 hi, const Ring& ring) {
    if (lo > hi) return {};
    const auto a = companion_matrix(core, ring);
    auto m = power(core, lo, ring);
    std::vector<typename Ring::value_type> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (i64 n = lo; n <= hi; ++n) {
        out.push_back(m.trace());
        if (n < hi) m = m * a;
    }
    return out;
}

/// Coordinates of lambda^n in the basis {1, lambda, ..., lambda^{k-1}}: e_1 A^n.
template <class Ring>
std::vector<typename Ring::value_type> root_power_coordinates(const CorePolynomial& core, i64 n, const Ring& ring) {
    const auto k = static_cast<std::size_t>(core.k());
    std::vector<typename Ring::value_type> e1(k, ring.zero());
    e1[0] = ring.one();
    return power(core, n, ring).left_apply(e1);
}

/// Signed Schur-hook reflect occupying entry (r, j) (1-based) of A^n:
/// (-1)^{k-j} S_{(n-k+r, 1^{k-j})}, with small or negative arms straightened
/// by the Jacobi-Trudi determinant.
inline IsobaricPolynomial schur_hook_entry(int k, i64 n, int r, int j) {
    std::vector<long> parts{static_cast<long>(n - k + r)};
    parts.insert(parts.end(), static_cast<std::size_t>(k - j), 1L);
    auto s = jacobi_trudi(parts, k);
    if ((k - j) % 2 != 0) s = BigInt(-1) * std::move(s);
    return s;
}

/// One candidate closed form for a negatively indexed Schur entry:
/// sign * S_shape(t) / t_3^(n + exponent_offset), where the shape is
/// (n + offsets..., tail...).
struct SchurQuotientForm {
    int sign;
    std::vector<long> offsets;
    std::vector<long> tail;
    int exponent_offset;

    std::vector<long> shape(i64 n) const {
        std::vector<long> parts;
        for (long o : offsets) parts.push_back(static_cast<long>(n) + o);
        parts.insert(parts.end(), tail.begin(), tail.end());
        return parts;
    }

    std::string describe() const {
        auto rel = [](long o) { return o == 0 ? std::string("n") : "n" + std::string(o > 0 ? "+" : "") + std::to_string(o); };
        std::string s = sign < 0 ? "-S_(" : "S_(";
        bool first = true;
        for (long o : offsets) {
            s += (first ? "" : ",") + rel(o);
            first = false;
        }
        for (long v : tail) s += "," + std::to_string(v);
        return s + ")/t3^(" + rel(exponent_offset) + ")";
    }
};

struct NegativeSchurRow {
    i64 n;
    std::vector<Rational> entries;                    // S_(-n), S_(-n,1), S_(-n,1^2)
    std::vector<bool> classical_form_holds;             // per identity
    std::vector<std::optional<std::string>> matching; // per identity, first matching candidate
};

struct NegativeSchurReport {
    CorePolynomial core;
    std::vector<NegativeSchurRow> rows;
    std::vector<std::string> classical_forms;
    std::vector<std::string> consistent_forms; // first candidate holding for every n in range, or "none"
};

namespace detail {

// Identity 0: S_(-n); 1: S_(-n,1); 2: S_(-n,1^2). The classical form
// of each identity comes first, then two-row shapes, hooks and single rows
// with either sign and a range of t_3 exponents.
inline std::vector<std::vector<SchurQuotientForm>> negative_schur_candidates() {
    std::vector<std::vector<SchurQuotientForm>> c(3);
    c[0].push_back({1, {-3, -3}, {}, -2});
    c[1].push_back({-1, {-2}, {1}, -2});
    c[2].push_back({1, {-2, -2}, {}, -2});
    for (auto& list : c)
        for (int e = -3; e <= 1; ++e)
            for (int sign : {1, -1}) {
                for (long a = 0; a >= -4; --a)
                    for (long b = a; b >= -4; --b) list.push_back({sign, {a, b}, {}, e});
                for (long a = 0; a >= -4; --a) {
                    list.push_back({sign, {a}, {1}, e});
                    list.push_back({sign, {a}, {1, 1}, e});
                    list.push_back({sign, {a}, {}, e});
                }
            }
    return c;
}

using SchurValueCache = std::map<std::vector<long>, BigInt>;

inline std::optional<Rational> evaluate_quotient(const SchurQuotientForm& f, i64 n, std::span<const BigInt> t,
                                                 SchurValueCache& cache) {
    auto parts = f.shape(n);
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0) return std::nullopt;
        if (i && parts[i] > parts[i - 1]) return std::nullopt;
    }
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    const i64 e = n + f.exponent_offset;
    if (e < 0) return std::nullopt;
    auto it = cache.find(parts);
    if (it == cache.end()) it = cache.emplace(parts, jacobi_trudi(parts, 3).evaluate<BigInt>(t)).first;
    const BigInt& s = it->second;
    return Rational(f.sign * s) / Rational(pow(t[2], static_cast<unsigned>(e)));
}

} // namespace detail

/// Compares rows -n (n in [n_lo, n_hi]) of the orbit of a k = 3 core, computed
/// over Q via A^{-1}, against quotients of positively indexed Schur
/// polynomials. Mismatches are reported, never thrown.
inline NegativeSchurReport negative_schur_identities_check(const CorePolynomial& core, i64 n_lo, i64 n_hi) {
    if (core.k() != 3) throw std::invalid_argument("negative Schur identities are checked for k = 3 only");
    if (core.last() == 0) throw not_invertible("t_3 = 0: negative rows undefined");
    if (n_lo < 1 || n_lo > n_hi) throw std::invalid_argument("n range must satisfy 1 <= n_lo <= n_hi");
    const RationalField q;
    const auto slice = infinite_slice(core, -n_hi, -n_lo, q);
    const auto t = core.as_bigints();
    const auto candidates = detail::negative_schur_candidates();
    detail::SchurValueCache cache;

    NegativeSchurReport report{core, {}, {}, {}};
    for (const auto& c : candidates) report.classical_forms.push_back(c.front().describe());
    std::vector<std::vector<bool>> holds_everywhere(3);
    for (std::size_t id = 0; id < 3; ++id) holds_everywhere[id].assign(candidates[id].size(), true);

    for (i64 n = n_lo; n <= n_hi; ++n) {
        const auto& row = slice.row(-n);
        // row -n = (S_(-n,1^2), -S_(-n,1), S_(-n))
        const std::vector<Rational> target{row[2], -row[1], row[0]};
        NegativeSchurRow r{n, target, {}, {}};
        for (std::size_t id = 0; id < 3; ++id) {
            std::optional<std::string> first;
            for (std::size_t ci = 0; ci < candidates[id].size(); ++ci) {
                const auto v = detail::evaluate_quotient(candidates[id][ci], n, t, cache);
                const bool ok = v && *v == target[id];
                if (!ok) holds_everywhere[id][ci] = false;
                if (ok && !first) first = candidates[id][ci].describe();
            }
            const auto classical = detail::evaluate_quotient(candidates[id].front(), n, t, cache);
            r.classical_form_holds.push_back(classical && *classical == target[id]);
            r.matching.push_back(first);
        }
        report.rows.push_back(std::move(r));
    }
    for (std::size_t id = 0; id < 3; ++id) {
        std::string found = "none";
        for (std::size_t ci = 0; ci < candidates[id].size(); ++ci)
            if (holds_everywhere[id][ci]) {
                found = candidates[id][ci].describe();
                break;
            }
        report.consistent_forms.push_back(found);
    }
    return report;
}

} // namespace isorec

#endif // ISOREC_COMPANION_HPP
