#include "symiso/exact.hpp"

#include <cctype>
#include <cmath>

namespace symiso {

BigInt factorial(unsigned n)
{
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(unsigned n, unsigned k)
{
  if (k > n)
    return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

std::string to_string(const BigInt &x) { return x.get_str(); }

std::string to_string(const Rational &x)
{
  Rational c(x);
  c.canonicalize();
  if (c.get_den() == 1)
    return c.get_num().get_str();
  return c.get_str();
}

std::int64_t to_int64(const BigInt &x)
{
  if (!mpz_fits_slong_p(x.get_mpz_t()))
    throw std::overflow_error("integer does not fit in 64 bits: " + x.get_str());
  return static_cast<std::int64_t>(mpz_get_si(x.get_mpz_t()));
}

namespace {

double log2_abs(const BigInt &x)
{
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, x.get_mpz_t());
  return std::log2(std::fabs(mant)) + static_cast<double>(exp);
}

} // namespace

double log2_of(const Rational &x)
{
  if (sgn(x) <= 0)
    throw std::domain_error("log of non-positive rational");
  return log2_abs(x.get_num()) - log2_abs(x.get_den());
}

double ln_of(const Rational &x) { return log2_of(x) * std::log(2.0); }

Rational parse_rational(std::string_view text)
{
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s.push_back(c);
  if (s.empty())
    throw ParseError("empty rational");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    Rational r;
    if (r.set_str(s, 10) != 0)
      throw ParseError("malformed rational: " + s);
    if (r.get_den() == 0)
      throw ParseError("zero denominator: " + s);
    r.canonicalize();
    return r;
  }

  // decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-')
    negative = s[pos++] == '-';
  std::string digits;
  long scale = 0;
  bool seen_digit = false, seen_point = false;
  for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
    char c = s[pos];
    if (c == '.' && !seen_point) {
      seen_point = true;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point)
        --scale;
    } else {
      throw ParseError("malformed number: " + s);
    }
  }
  if (!seen_digit)
    throw ParseError("malformed number: " + s);
  if (pos < s.size()) {
    std::string exp = s.substr(pos + 1);
    if (exp.empty())
      throw ParseError("malformed exponent: " + s);
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exp, &used);
    } catch (const std::exception &) {
      throw ParseError("malformed exponent: " + s);
    }
    if (used != exp.size() || e > 100000 || e < -100000)
      throw ParseError("malformed exponent: " + s);
    scale += e;
  }

  BigInt num(digits, 10);
  BigInt pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
  Rational r = scale >= 0 ? Rational(num * pow10) : Rational(num, pow10);
  r.canonicalize();
  return negative ? Rational(-r) : r;
}

} // namespace symiso
