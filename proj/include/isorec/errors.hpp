#ifndef ISOREC_ERRORS_HPP
#define ISOREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace isorec {

/// Raised when an operation needs an inverse the scalar domain does not have
/// (negative powers of a singular companion matrix, t_k = 0 mod p, ...).
class not_invertible : public std::domain_error {
public:
    explicit not_invertible(const std::string& what) : std::domain_error(what) {}
};

/// Raised when an exhaustive enumeration would exceed its element budget.
class budget_exceeded : public std::length_error {
public:
    explicit budget_exceeded(const std::string& what) : std::length_error(what) {}
};

} // namespace isorec

#endif // ISOREC_ERRORS_HPP
