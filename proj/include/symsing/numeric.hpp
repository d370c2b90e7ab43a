#pragma once

// Exact integer and rational types shared by every module.

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace symsing {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Raised when a requested enumeration or sweep exceeds its desk-scale budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// "num/den" with den > 0; integers still carry "/1".
std::string to_fraction_string(const Rational& q);

/// Parses "num/den" or a bare integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Nearest double (used only for reporting and float-vs-exact comparisons).
double to_double(const Rational& q);

inline Rational make_rational(std::int64_t num, std::int64_t den = 1)
{
    return Rational(Integer(num), Integer(den));
}

Integer binomial(unsigned n, unsigned k);

Integer ipow(const Integer& base, unsigned exponent);

}  // namespace symsing
