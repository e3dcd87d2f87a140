#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace lwc {

using Rational = mpq_class;
using BigInt = mpz_class;

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

// accepts "p/q", "p" or a decimal like "0.25" (converted exactly)
Rational parse_rational(const std::string& s);
std::string to_string(const Rational& q);

BigInt factorial(unsigned n);
// (n-1)!! for even n, the number of perfect matchings of n points; 1 for n == 0
BigInt matchings_count(unsigned n);
// n (n-1) ... (n-k+1)
BigInt falling(long n, unsigned k);
// ((n))_k = (n-1)!! / (n-k-1)!!, k even
BigInt falling_double(long n, unsigned k);
BigInt binomial(unsigned n, unsigned k);

double log_factorial(double n);

}  // namespace lwc
