#include "symiso/counting.hpp"

#include <string>

namespace symiso {

BigInt derangement_count(int m)
{
  if (m < 0)
    throw std::invalid_argument("derangement_count: m must be non-negative");
  // each m!/i! is an integer, so the alternating sum stays in Z
  const BigInt mf = factorial(static_cast<unsigned>(m));
  BigInt total = 0;
  for (int i = 0; i <= m; ++i) {
    BigInt term = mf / factorial(static_cast<unsigned>(i));
    if (i % 2)
      total -= term;
    else
      total += term;
  }
  return total;
}

BigInt cycle_count_census(int n, int i, int j)
{
  if (i < 1 || i > n)
    throw std::invalid_argument("cycle_count_census: need 1 <= i <= n");
  if (j < 0 || j > n / i)
    throw std::invalid_argument("cycle_count_census: need 0 <= j <= n/i");

  BigInt ipow_j;
  mpz_ui_pow_ui(ipow_j.get_mpz_t(), static_cast<unsigned long>(i), static_cast<unsigned long>(j));
  Rational prefactor(factorial(static_cast<unsigned>(n)), ipow_j * factorial(static_cast<unsigned>(j)));
  prefactor.canonicalize();

  Rational sum = 0;
  BigInt ipow_l = 1;
  for (int l = 0; l <= n / i - j; ++l) {
    Rational term(1, ipow_l * factorial(static_cast<unsigned>(l)));
    term.canonicalize();
    if (l % 2)
      sum -= term;
    else
      sum += term;
    ipow_l *= i;
  }

  Rational value = prefactor * sum;
  value.canonicalize();
  if (value.get_den() != 1 || sgn(value) < 0)
    throw InvariantViolation("Goncharov sum is not a non-negative integer for (n,i,j) = (" + std::to_string(n) + "," +
                             std::to_string(i) + "," + std::to_string(j) + "): " + value.get_str());
  return value.get_num();
}

} // namespace symiso
