#ifndef SYMISO_EXACT_HPP
#define SYMISO_EXACT_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symiso {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Thrown when an internal identity that must hold exactly does not
/// (non-integral closed form, broken row sum, indivisible boundary sum).
/// Always indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Malformed textual input (cycle-type strings, rationals).
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

std::string to_string(const BigInt &x);
std::string to_string(const Rational &x);

/// Narrowing conversion; throws std::overflow_error if x does not fit.
std::int64_t to_int64(const BigInt &x);

/// log2 of a positive rational, accurate for numerators and denominators
/// far outside double range.
double log2_of(const Rational &x);
double ln_of(const Rational &x);

/// Parses "a/b", an integer, or a decimal with optional exponent
/// ("0.25", "1e-30") into an exact rational.
Rational parse_rational(std::string_view text);

} // namespace symiso

#endif // SYMISO_EXACT_HPP
