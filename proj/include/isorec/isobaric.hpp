#ifndef ISOREC_ISOBARIC_HPP
#define ISOREC_ISOBARIC_HPP

/// Isobaric polynomials: symmetric polynomials written in the signed
/// elementary basis t_j, graded by isobaric degree n = sum j*alpha_j.

#include "isorec/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace isorec {

/// Exponent vector alpha = (alpha_1, ..., alpha_k) of a monomial t^alpha.
class ExponentVector {
public:
    ExponentVector() = default;
    explicit ExponentVector(std::vector<unsigned> alpha) : alpha_(std::move(alpha)) {}

    std::size_t size() const { return alpha_.size(); }
    unsigned operator[](std::size_t j) const { return alpha_[j]; }
    unsigned& operator[](std::size_t j) { return alpha_[j]; }
    std::span<const unsigned> values() const { return alpha_; }

    /// sum j*alpha_j
    long weight() const {
        long w = 0;
        for (std::size_t j = 0; j < alpha_.size(); ++j) w += static_cast<long>(j + 1) * alpha_[j];
        return w;
    }
    /// |alpha| = sum alpha_j
    unsigned length() const { return std::accumulate(alpha_.begin(), alpha_.end(), 0u); }

    bool operator==(const ExponentVector&) const = default;
    auto operator<=>(const ExponentVector&) const = default;

private:
    std::vector<unsigned> alpha_;
};

/// Print order: larger |alpha| first, ties by graded reverse lexicographic
/// comparison (smaller exponent on the last differing variable first).
struct TermOrder {
    bool operator()(const ExponentVector& a, const ExponentVector& b) const {
        const unsigned la = a.length(), lb = b.length();
        if (la != lb) return la > lb;
        for (std::size_t j = a.size(); j-- > 0;)
            if (a[j] != b[j]) return a[j] < b[j];
        return false;
    }
};

using WeightVector = std::vector<std::int64_t>;

/// All alpha in N^k with sum j*alpha_j = n, in descending lexicographic order.
inline std::vector<ExponentVector> enumerate_exponent_vectors(long n, int k) {
    if (k < 1) throw std::invalid_argument("grading level k must be positive");
    if (n < 0) return {};
    std::vector<ExponentVector> out;
    std::vector<unsigned> alpha(static_cast<std::size_t>(k), 0);
    auto rec = [&](auto&& self, std::size_t j, long remaining) -> void {
        if (j + 1 == alpha.size()) {
            if (remaining % static_cast<long>(j + 1) == 0) {
                alpha[j] = static_cast<unsigned>(remaining / static_cast<long>(j + 1));
                out.emplace_back(alpha);
            }
            return;
        }
        for (long a = remaining / static_cast<long>(j + 1); a >= 0; --a) {
            alpha[j] = static_cast<unsigned>(a);
            self(self, j + 1, remaining - a * static_cast<long>(j + 1));
        }
        alpha[j] = 0;
    };
    rec(rec, 0, n);
    return out;
}

class IsobaricPolynomial {
public:
    using TermMap = std::map<ExponentVector, BigInt, TermOrder>;

    IsobaricPolynomial(int k, long n) : k_(k), n_(n) {
        if (k < 1) throw std::invalid_argument("grading level k must be positive");
    }

    static IsobaricPolynomial constant(int k, const BigInt& c) {
        IsobaricPolynomial p(k, 0);
        p.add_term(ExponentVector(std::vector<unsigned>(static_cast<std::size_t>(k), 0)), c);
        return p;
    }

    /// The generator t_j (1-based), of isobaric degree j.
    static IsobaricPolynomial variable(int k, int j) {
        if (j < 1 || j > k) throw std::out_of_range("variable index out of range");
        IsobaricPolynomial p(k, j);
        std::vector<unsigned> a(static_cast<std::size_t>(k), 0);
        a[static_cast<std::size_t>(j - 1)] = 1;
        p.add_term(ExponentVector(std::move(a)), 1);
        return p;
    }

    int k() const { return k_; }
    long n() const { return n_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    BigInt coefficient(const ExponentVector& alpha) const {
        auto it = terms_.find(alpha);
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Adds c*t^alpha; zero results are dropped so no stored coefficient is zero.
    void add_term(const ExponentVector& alpha, const BigInt& c) {
        if (alpha.size() != static_cast<std::size_t>(k_)) throw std::invalid_argument("exponent vector length != k");
        if (alpha.weight() != n_) throw std::invalid_argument("term weight differs from isobaric degree");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(alpha, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    IsobaricPolynomial& operator+=(const IsobaricPolynomial& o) { return accumulate(o, 1); }
    IsobaricPolynomial& operator-=(const IsobaricPolynomial& o) { return accumulate(o, -1); }

    friend IsobaricPolynomial operator+(IsobaricPolynomial a, const IsobaricPolynomial& b) { return a += b; }
    friend IsobaricPolynomial operator-(IsobaricPolynomial a, const IsobaricPolynomial& b) { return a -= b; }

    friend IsobaricPolynomial operator*(const BigInt& s, IsobaricPolynomial p) {
        if (s == 0) p.terms_.clear();
        for (auto& [a, c] : p.terms_) c *= s;
        return p;
    }

    friend IsobaricPolynomial operator*(const IsobaricPolynomial& a, const IsobaricPolynomial& b) {
        if (a.k_ != b.k_) throw std::invalid_argument("grading levels differ");
        IsobaricPolynomial r(a.k_, a.n_ + b.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                ExponentVector e = ea;
                for (std::size_t j = 0; j < e.size(); ++j) e[j] += eb[j];
                r.add_term(e, ca * cb);
            }
        return r;
    }

    /// Two zero polynomials are equal whatever degree they were built at.
    friend bool operator==(const IsobaricPolynomial& a, const IsobaricPolynomial& b) {
        if (a.k_ != b.k_) return false;
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

    /// Exact evaluation at t (BigInt or Rational scalars).
    template <class Scalar>
    Scalar evaluate(std::span<const Scalar> t) const {
        if (t.size() != static_cast<std::size_t>(k_)) throw std::invalid_argument("evaluation point length != k");
        Scalar sum = 0;
        for (const auto& [alpha, c] : terms_) {
            Scalar term = Scalar(c);
            for (std::size_t j = 0; j < alpha.size(); ++j)
                for (unsigned e = 0; e < alpha[j]; ++e) term *= t[j];
            sum += term;
        }
        return sum;
    }

    /// Formal derivative with respect to t_j (1-based).
    IsobaricPolynomial partial(int j) const {
        if (j < 1 || j > k_) throw std::out_of_range("derivative index out of range");
        const auto idx = static_cast<std::size_t>(j - 1);
        IsobaricPolynomial r(k_, n_ - j);
        for (const auto& [alpha, c] : terms_) {
            if (alpha[idx] == 0) continue;
            ExponentVector e = alpha;
            e[idx] -= 1;
            r.add_term(e, c * alpha[idx]);
        }
        return r;
    }

    /// Setting t_j = 0 for j > level projects onto grading level `level`.
    IsobaricPolynomial project(int level) const {
        if (level < 1 || level > k_) throw std::out_of_range("projection level out of range");
        IsobaricPolynomial r(level, n_);
        for (const auto& [alpha, c] : terms_) {
            bool survives = true;
            for (std::size_t j = static_cast<std::size_t>(level); j < alpha.size(); ++j) survives &= alpha[j] == 0;
            if (!survives) continue;
            r.add_term(ExponentVector({alpha.values().begin(), alpha.values().begin() + level}), c);
        }
        return r;
    }

    /// Canonical text, e.g. "t1^3 + 2*t1*t2 + t3".
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [alpha, c] : terms_) {
            const bool negative = c < 0;
            const BigInt mag = negative ? BigInt(-c) : c;
            if (first)
                os << (negative ? "-" : "");
            else
                os << (negative ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t j = 0; j < alpha.size(); ++j) {
                if (alpha[j] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += "t" + std::to_string(j + 1);
                if (alpha[j] > 1) mono += "^" + std::to_string(alpha[j]);
            }
            if (mono.empty())
                os << mag.str();
            else if (mag == 1)
                os << mono;
            else
                os << mag.str() << "*" << mono;
        }
        return os.str();
    }

private:
    IsobaricPolynomial& accumulate(const IsobaricPolynomial& o, int sign) {
        if (o.k_ != k_) throw std::invalid_argument("grading levels differ");
        if (o.is_zero()) return *this;
        if (is_zero()) n_ = o.n_;
        if (o.n_ != n_) throw std::invalid_argument("cannot add isobaric polynomials of different degree");
        for (const auto& [a, c] : o.terms_) add_term(a, sign * c);
        return *this;
    }

    int k_;
    long n_;
    TermMap terms_;
};

inline std::ostream& operator<<(std::ostream& os, const IsobaricPolynomial& p) { return os << p.to_string(); }

/// Generalized Fibonacci polynomial F_{k,n}: coefficient multinomial(|alpha|; alpha).
inline IsobaricPolynomial gfp(int k, long n) {
    IsobaricPolynomial p(k, n);
    for (const auto& alpha : enumerate_exponent_vectors(n, k)) p.add_term(alpha, multinomial(alpha.values()));
    return p;
}

/// Generalized Lucas polynomial G_{k,n}: coefficient (n/|alpha|)*multinomial.
/// G_{k,0} is the constant k (trace of the identity).
inline IsobaricPolynomial glp(int k, long n) {
    if (n == 0) return IsobaricPolynomial::constant(k, k);
    IsobaricPolynomial p(k, n);
    for (const auto& alpha : enumerate_exponent_vectors(n, k)) {
        const BigInt num = n * multinomial(alpha.values());
        if (num % alpha.length() != 0) throw std::logic_error("non-integral GLP coefficient");
        p.add_term(alpha, num / alpha.length());
    }
    return p;
}

/// Weighted isobaric polynomial P_{omega,k,n}; wip(omega,k,0) = 1.
inline IsobaricPolynomial wip(const WeightVector& omega, int k, long n) {
    if (omega.size() < static_cast<std::size_t>(k)) throw std::invalid_argument("weight vector shorter than k");
    if (n == 0) return IsobaricPolynomial::constant(k, 1);
    IsobaricPolynomial p(k, n);
    for (const auto& alpha : enumerate_exponent_vectors(n, k)) {
        // multinomial(|alpha|;alpha)*alpha_j/|alpha| = multinomial(|alpha|-1; alpha - e_j)
        BigInt c = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (alpha[j] == 0) continue;
            ExponentVector reduced = alpha;
            reduced[j] -= 1;
            c += omega[j] * multinomial(reduced.values());
        }
        p.add_term(alpha, c);
    }
    return p;
}

/// Young diagram shape: strictly positive, weakly decreasing parts.
class PartitionShape {
public:
    explicit PartitionShape(std::vector<long> parts) : parts_(std::move(parts)) {
        if (parts_.empty()) throw std::invalid_argument("partition shape must be non-empty");
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    /// Hook (arm, 1^leg).
    static PartitionShape hook(long arm, std::size_t leg) {
        std::vector<long> p{arm};
        p.insert(p.end(), leg, 1);
        return PartitionShape(std::move(p));
    }
    std::span<const long> parts() const { return parts_; }
    long size() const { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

private:
    std::vector<long> parts_;
};

/// det(h_{lambda_i - i + j}) with h_m = F_{k,m}, h_0 = 1, h_m = 0 for m < 0.
/// `parts` may be any integer sequence; this is the straightened Schur
/// function used for the entries of negative and small-arm companion rows.
inline IsobaricPolynomial jacobi_trudi(std::span<const long> parts, int k) {
    const std::size_t n = parts.size();
    if (n == 0) return IsobaricPolynomial::constant(k, 1);
    if (n > 20) throw std::invalid_argument("Jacobi-Trudi determinant too large");
    std::map<long, IsobaricPolynomial> h;
    auto entry = [&](std::size_t i, std::size_t j) -> const IsobaricPolynomial& {
        const long m = parts[i] - static_cast<long>(i) + static_cast<long>(j);
        auto it = h.find(m);
        if (it == h.end()) it = h.emplace(m, m < 0 ? IsobaricPolynomial(k, m) : gfp(k, m)).first;
        return it->second;
    };
    // Laplace expansion row by row; dp[mask] covers the first popcount(mask)
    // rows placed in the columns of mask.
    std::vector<IsobaricPolynomial> dp(std::size_t{1} << n, IsobaricPolynomial(k, 0));
    dp[0] = IsobaricPolynomial::constant(k, 1);
    for (std::size_t mask = 0; mask + 1 < dp.size(); ++mask) {
        if (dp[mask].is_zero()) continue;
        const auto row = static_cast<std::size_t>(std::popcount(mask));
        int sign = 1;
        for (std::size_t col = n; col-- > 0;) {
            if (mask & (std::size_t{1} << col)) {
                sign = -sign;
                continue;
            }
            const auto& e = entry(row, col);
            if (e.is_zero()) continue;
            auto term = dp[mask] * e;
            if (sign < 0) term = BigInt(-1) * std::move(term);
            dp[mask | (std::size_t{1} << col)] += term;
        }
    }
    return dp.back();
}

inline IsobaricPolynomial schur_via_jacobi_trudi(const PartitionShape& shape, int k) {
    return jacobi_trudi(shape.parts(), k);
}

} // namespace isorec

#endif // ISOREC_ISOBARIC_HPP
