#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symcone {

// Exact rational scalar. mpq_class keeps values canonical after every
// arithmetic operation; values built from raw num/den go through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

// Parameter outside the domain of a construction (vanishing denominator,
// forbidden value, malformed literal).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// A form that is not in the span of the requested basis.
class MembershipError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Rational make_rational(long num, long den = 1);

// Accepts "p" or "p/q" with optional sign; q must be nonzero.
Rational parse_rational(std::string_view text);

// "num/den", or "num" when the denominator is 1.
std::string to_string(const Rational& r);

std::string to_string(const std::vector<Rational>& v);

int sign(const Rational& r);

Rational pow(const Rational& base, unsigned exponent);

Rational abs(const Rational& r);

}  // namespace symcone
