#ifndef ISOREC_BIGINT_HPP
#define ISOREC_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <span>
#include <string>

namespace isorec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

inline std::string to_string(const Rational& v) {
    if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
}

inline BigInt factorial(unsigned n) {
    BigInt r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

/// |alpha|! / (alpha_1! ... alpha_k!), built as a product of binomials so no
/// intermediate exceeds the result by more than one factor.
inline BigInt multinomial(std::span<const unsigned> alpha) {
    BigInt r = 1;
    unsigned total = 0;
    for (unsigned a : alpha) {
        for (unsigned i = 1; i <= a; ++i) {
            ++total;
            r *= total;
            r /= i;
        }
    }
    return r;
}

inline BigInt pow(const BigInt& base, unsigned e) { return boost::multiprecision::pow(base, e); }

} // namespace isorec

#endif // ISOREC_BIGINT_HPP
