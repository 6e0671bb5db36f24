#pragma once

// Exact integer and rational arithmetic helpers.

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lambdamaps {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt factorial(int n);
// Zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

// `p/q` in lowest terms, or just `p` when the denominator is 1.
std::string to_string(const Rational& r);
bool is_integer(const Rational& r);

// Closed-form counts by number of edges.
// Rooted planar maps: 2 * 3^n (2n)! / (n! (n+2)!).
Rational planar_map_formula(int n);
// Rooted bipartite planar maps: 3 * 2^(n-1) (2n)! / (n! (n+2)!), 1 at n = 0.
Rational bipartite_map_formula(int n);
// Rooted loopless planar maps: 2 (4n+1)! / ((n+1)! (3n+2)!).
Rational loopless_map_formula(int n);
// 2^n / ((n+1)(n+2)) * C(2n+1, n), as printed for 3-connected terms of size
// n+2; not integral in general.
Rational printed_three_connected_formula(int n);

}  // namespace lambdamaps
