#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace charfluct {

// Exact arithmetic everywhere in the algebraic core; floating point only at
// the Monte-Carlo boundary.
using Int = mpz_class;
using Rational = mpq_class;

inline double to_double(const Rational& r) { return r.get_d(); }

// "p/q" with canonical sign on the numerator; integers render as "p/1".
std::string fraction_string(const Rational& r);
Rational rational_from_string(const std::string& s);

Int factorial(int n);
Int binomial(int n, int k);

// q (q-1) ... (q-k+1); zero when k > q.
Int falling_factorial(int q, int k);

// p^e for integer e >= 0.
Rational rational_pow(const Rational& p, int e);

}  // namespace charfluct
