#include "charfluct/rational.hpp"

#include <stdexcept>

namespace charfluct {

std::string fraction_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational literal: " + s);
  }
  r.canonicalize();
  return r;
}

Int factorial(int n) {
  Int f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return b;
}

Int falling_factorial(int q, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial: negative k");
  Int result = 1;
  for (int i = 0; i < k; ++i) result *= (q - i);
  return result;
}

Rational rational_pow(const Rational& p, int e) {
  if (e < 0) throw std::invalid_argument("rational_pow: negative exponent");
  Rational out = 1;
  Rational base = p;
  while (e > 0) {
    if (e & 1) out *= base;
    base *= base;
    e >>= 1;
  }
  return out;
}

}  // namespace charfluct
