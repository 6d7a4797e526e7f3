#ifndef ISOREC_RINGS_HPP
#define ISOREC_RINGS_HPP

#include "isorec/bigint.hpp"
#include "isorec/errors.hpp"
#include "isorec/modular.hpp"

#include <optional>
#include <string>

namespace isorec {

/// Scalar domains for exact matrices. Each policy supplies the arithmetic and
/// a domain tag; PrimeField also carries its modulus so values can stay u64.
enum class DomainKind { integers, rationals, prime_field };

struct DomainTag {
    DomainKind kind;
    u64 p = 0;

    std::string name() const {
        switch (kind) {
        case DomainKind::integers: return "Z";
        case DomainKind::rationals: return "Q";
        case DomainKind::prime_field: return "Fp";
        }
        return "?";
    }
    bool operator==(const DomainTag&) const = default;
};

class IntegerRing {
public:
    using value_type = BigInt;
    static constexpr bool is_field = false;

    DomainTag tag() const { return {DomainKind::integers}; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from(const BigInt& v) const { return v; }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return a == 0; }
    std::optional<value_type> inverse(const value_type& a) const {
        if (a == 1 || a == -1) return a;
        return std::nullopt;
    }
    std::string str(const value_type& a) const { return to_string(a); }
};

class RationalField {
public:
    using value_type = Rational;
    static constexpr bool is_field = true;

    DomainTag tag() const { return {DomainKind::rationals}; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from(const BigInt& v) const { return Rational(v); }
    value_type add(const value_type& a, const value_type& b) const { return a + b; }
    value_type sub(const value_type& a, const value_type& b) const { return a - b; }
    value_type mul(const value_type& a, const value_type& b) const { return a * b; }
    value_type neg(const value_type& a) const { return -a; }
    bool is_zero(const value_type& a) const { return a == 0; }
    std::optional<value_type> inverse(const value_type& a) const {
        if (a == 0) return std::nullopt;
        return 1 / a;
    }
    std::string str(const value_type& a) const { return to_string(a); }
};

class PrimeField {
public:
    using value_type = u64;
    static constexpr bool is_field = true;

    explicit PrimeField(u64 p) : p_(require_prime(p)) {}

    u64 modulus() const { return p_; }
    DomainTag tag() const { return {DomainKind::prime_field, p_}; }
    value_type zero() const { return 0; }
    value_type one() const { return 1; }
    value_type from(const BigInt& v) const { return reduce_mod(v, p_); }
    value_type from(i64 v) const { return reduce_mod(v, p_); }
    value_type add(value_type a, value_type b) const { return (a + b) % p_; }
    value_type sub(value_type a, value_type b) const { return (a + p_ - b) % p_; }
    value_type mul(value_type a, value_type b) const { return mul_mod(a, b, p_); }
    value_type neg(value_type a) const { return (p_ - a) % p_; }
    bool is_zero(value_type a) const { return a == 0; }
    std::optional<value_type> inverse(value_type a) const {
        if (a % p_ == 0) return std::nullopt;
        return inv_mod(a, p_);
    }
    std::string str(value_type a) const { return std::to_string(a); }

private:
    u64 p_;
};

} // namespace isorec

#endif // ISOREC_RINGS_HPP
