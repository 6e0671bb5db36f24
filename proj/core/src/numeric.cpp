#include "lambdamaps/numeric.hpp"

namespace lambdamaps {

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + '/' + den.str();
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

namespace {

BigInt power(int base, int e) {
  BigInt p = 1;
  for (int i = 0; i < e; ++i) p *= base;
  return p;
}

}  // namespace

Rational planar_map_formula(int n) {
  return Rational(2 * power(3, n) * factorial(2 * n), factorial(n) * factorial(n + 2));
}

Rational bipartite_map_formula(int n) {
  if (n == 0) return 1;
  return Rational(3 * power(2, n - 1) * factorial(2 * n), factorial(n) * factorial(n + 2));
}

Rational loopless_map_formula(int n) {
  return Rational(2 * factorial(4 * n + 1), factorial(n + 1) * factorial(3 * n + 2));
}

Rational printed_three_connected_formula(int n) {
  return Rational(power(2, n) * binomial(2 * n + 1, n), BigInt((n + 1) * (n + 2)));
}

}  // namespace lambdamaps
