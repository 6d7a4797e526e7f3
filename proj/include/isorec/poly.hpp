#ifndef ISOREC_POLY_HPP
#define ISOREC_POLY_HPP

#include "isorec/bigint.hpp"
#include "isorec/modular.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace isorec {

namespace detail {

template <class Coeff>
std::string render_poly(const std::vector<Coeff>& c, auto is_negative, auto magnitude) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0) continue;
        const bool neg = is_negative(c[i]);
        const std::string mag = magnitude(c[i]);
        os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
        first = false;
        const std::string mono = i == 0 ? "" : (i == 1 ? "X" : "X^" + std::to_string(i));
        if (mono.empty())
            os << mag;
        else if (mag == "1")
            os << mono;
        else
            os << mag << "*" << mono;
    }
    return first ? "0" : os.str();
}

} // namespace detail

/// Dense integer polynomial, coefficients low to high, no trailing zeros.
class PolyZ {
public:
    PolyZ() = default;
    explicit PolyZ(std::vector<BigInt> c) : c_(std::move(c)) { normalize(); }

    static PolyZ monomial(const BigInt& c, std::size_t deg) {
        std::vector<BigInt> v(deg + 1, 0);
        v[deg] = c;
        return PolyZ(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const BigInt& lead() const { return c_.back(); }
    BigInt coeff(std::size_t i) const { return i < c_.size() ? c_[i] : BigInt(0); }
    const std::vector<BigInt>& coefficients() const { return c_; }

    BigInt evaluate(const BigInt& x) const {
        BigInt r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
        return r;
    }

    friend PolyZ operator+(const PolyZ& a, const PolyZ& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return PolyZ(std::move(r));
    }
    friend PolyZ operator-(const PolyZ& a, const PolyZ& b) {
        std::vector<BigInt> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return PolyZ(std::move(r));
    }
    friend PolyZ operator*(const PolyZ& a, const PolyZ& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigInt> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return PolyZ(std::move(r));
    }
    friend bool operator==(const PolyZ&, const PolyZ&) = default;

    /// Division by a monic divisor; quotient and remainder are exact over Z.
    std::pair<PolyZ, PolyZ> divmod_monic(const PolyZ& d) const {
        if (d.is_zero() || d.lead() != 1) throw std::invalid_argument("divisor must be monic");
        std::vector<BigInt> rem = c_;
        const std::size_t dd = d.c_.size() - 1;
        if (rem.size() <= dd) return {PolyZ(), *this};
        std::vector<BigInt> q(rem.size() - dd, 0);
        for (std::size_t i = rem.size(); i-- > dd;) {
            const BigInt f = rem[i];
            if (f == 0) continue;
            q[i - dd] = f;
            for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] -= f * d.c_[j];
        }
        rem.resize(dd);
        return {PolyZ(std::move(q)), PolyZ(std::move(rem))};
    }

    PolyZ derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<BigInt> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * i;
        return PolyZ(std::move(r));
    }

    /// "X^3 - 2*X - 1"
    std::string to_string() const {
        return detail::render_poly(c_, [](const BigInt& v) { return v < 0; },
                                   [](const BigInt& v) { return (v < 0 ? BigInt(-v) : v).str(); });
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigInt> c_;
};

/// Dense polynomial over F_p, coefficients low to high in canonical residues.
class PolyFp {
public:
    explicit PolyFp(u64 p) : p_(p) {}
    PolyFp(u64 p, std::vector<u64> c) : p_(p), c_(std::move(c)) {
        for (auto& v : c_) v %= p_;
        normalize();
    }
    static PolyFp from_signed(u64 p, const std::vector<i64>& c) {
        std::vector<u64> r;
        r.reserve(c.size());
        for (i64 v : c) r.push_back(reduce_mod(v, p));
        return PolyFp(p, std::move(r));
    }
    static PolyFp from(const PolyZ& f, u64 p) {
        std::vector<u64> r;
        for (const auto& v : f.coefficients()) r.push_back(reduce_mod(v, p));
        return PolyFp(p, std::move(r));
    }
    static PolyFp constant(u64 p, u64 c) { return PolyFp(p, {c}); }
    static PolyFp x(u64 p) { return PolyFp(p, {0, 1}); }

    u64 p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    u64 lead() const { return c_.back(); }
    u64 coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
    const std::vector<u64>& coefficients() const { return c_; }

    u64 evaluate(u64 x) const {
        u64 r = 0;
        for (std::size_t i = c_.size(); i-- > 0;) r = (mul_mod(r, x, p_) + c_[i]) % p_;
        return r;
    }

    PolyFp monic() const {
        if (is_zero()) return *this;
        const u64 inv = inv_mod(lead(), p_);
        PolyFp r = *this;
        for (auto& v : r.c_) v = mul_mod(v, inv, p_);
        return r;
    }

    friend PolyFp operator+(const PolyFp& a, const PolyFp& b) {
        std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(i) + b.coeff(i)) % a.p_;
        return PolyFp(a.p_, std::move(r));
    }
    friend PolyFp operator-(const PolyFp& a, const PolyFp& b) {
        std::vector<u64> r(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t i = 0; i < r.size(); ++i) r[i] = (a.coeff(i) + a.p_ - b.coeff(i)) % a.p_;
        return PolyFp(a.p_, std::move(r));
    }
    friend PolyFp operator*(const PolyFp& a, const PolyFp& b) {
        if (a.is_zero() || b.is_zero()) return PolyFp(a.p_);
        std::vector<u64> r(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = (r[i + j] + mul_mod(a.c_[i], b.c_[j], a.p_)) % a.p_;
        }
        return PolyFp(a.p_, std::move(r));
    }
    PolyFp scaled(u64 s) const {
        PolyFp r = *this;
        for (auto& v : r.c_) v = mul_mod(v, s % p_, p_);
        r.normalize();
        return r;
    }
    friend bool operator==(const PolyFp&, const PolyFp&) = default;

    /// Orders by degree, then coefficients from the leading term down.
    friend bool operator<(const PolyFp& a, const PolyFp& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
    }

    std::pair<PolyFp, PolyFp> divmod(const PolyFp& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial division by zero");
        std::vector<u64> rem = c_;
        const std::size_t dd = d.c_.size() - 1;
        if (rem.size() <= dd) return {PolyFp(p_), *this};
        const u64 inv = inv_mod(d.lead(), p_);
        std::vector<u64> q(rem.size() - dd, 0);
        for (std::size_t i = rem.size(); i-- > dd;) {
            const u64 f = mul_mod(rem[i], inv, p_);
            if (f == 0) continue;
            q[i - dd] = f;
            for (std::size_t j = 0; j <= dd; ++j) rem[i - dd + j] = (rem[i - dd + j] + p_ - mul_mod(f, d.c_[j], p_)) % p_;
        }
        rem.resize(dd);
        return {PolyFp(p_, std::move(q)), PolyFp(p_, std::move(rem))};
    }
    friend PolyFp operator/(const PolyFp& a, const PolyFp& b) { return a.divmod(b).first; }
    friend PolyFp operator%(const PolyFp& a, const PolyFp& b) { return a.divmod(b).second; }

    PolyFp derivative() const {
        if (c_.size() <= 1) return PolyFp(p_);
        std::vector<u64> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = mul_mod(c_[i], i % p_, p_);
        return PolyFp(p_, std::move(r));
    }

    /// For f(X) = g(X^p), returns g^{1/p}; coefficients are fixed by Frobenius on F_p.
    PolyFp pth_root() const {
        std::vector<u64> r;
        for (std::size_t i = 0; i < c_.size(); i += p_) r.push_back(c_[i]);
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (i % p_ != 0 && c_[i] != 0) throw std::logic_error("polynomial is not a p-th power");
        return PolyFp(p_, std::move(r));
    }

    std::string to_string() const {
        return detail::render_poly(c_, [](u64) { return false; }, [](u64 v) { return std::to_string(v); });
    }

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    u64 p_;
    std::vector<u64> c_;
};

/// Monic gcd.
inline PolyFp gcd(PolyFp a, PolyFp b) {
    while (!b.is_zero()) {
        auto r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
inline std::tuple<PolyFp, PolyFp, PolyFp> extended_gcd(const PolyFp& a, const PolyFp& b) {
    const u64 p = a.p();
    PolyFp r0 = a, r1 = b;
    PolyFp s0 = PolyFp::constant(p, 1), s1(p);
    PolyFp t0(p), t1 = PolyFp::constant(p, 1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::move(r1);
        r1 = std::move(r);
        auto s2 = s0 - q * s1;
        s0 = std::move(s1);
        s1 = std::move(s2);
        auto t2 = t0 - q * t1;
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const u64 inv = inv_mod(r0.lead(), p);
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

/// base^e mod m, with e an arbitrary-precision exponent.
inline PolyFp pow_mod(PolyFp base, BigInt e, const PolyFp& m) {
    PolyFp r = PolyFp::constant(base.p(), 1) % m;
    base = base % m;
    while (e > 0) {
        if (boost::multiprecision::bit_test(e, 0)) r = (r * base) % m;
        e >>= 1;
        if (e > 0) base = (base * base) % m;
    }
    return r;
}

} // namespace isorec

#endif // ISOREC_POLY_HPP
