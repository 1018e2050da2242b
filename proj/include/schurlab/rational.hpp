#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace schurlab {

using Integer = mpz_class;
using Rational = mpq_class;

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Integer factorial(unsigned long k) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), k);
  return out;
}

inline Integer binomial(long top, unsigned long k) {
  // Generalized binomial top(top-1)...(top-k+1)/k!, valid for negative top.
  Integer out;
  Integer t = top;
  mpz_bin_ui(out.get_mpz_t(), t.get_mpz_t(), k);
  return out;
}

/// Raised when an operation would exceed the desk-scale resource bound.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace schurlab
