#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polydeg {

using Integer = mpz_class;
/// Exact rational. gmpxx keeps every arithmetic result canonical
/// (gcd(num, den) = 1, den > 0, zero is 0/1).
using Rational = mpq_class;

/// num/den in lowest terms (the two-argument mpq_class constructor does
/// not reduce).
Rational ratio(long num, long den);

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer factorial(unsigned long n);
Integer binomial(long n, long k);

/// n! / prod(parts_i!). Throws UsageError unless sum(parts) == n.
Integer multinomial(unsigned long n, const std::vector<unsigned long>& parts);

/// All a = (a_1..a_len) of naturals with a_1 + 2 a_2 + ... + len a_len == weight,
/// in lexicographic order of the exponent vector.
std::vector<std::vector<unsigned long>> weighted_compositions(unsigned long weight, std::size_t len);

}  // namespace polydeg
