#pragma once

// Arbitrary-precision integer and rational coefficient types.

#include <gmpxx.h>

#include <string>

namespace deutsch {

using BigInt = mpz_class;
using BigRat = mpq_class;

inline std::string to_string(const BigInt& x) { return x.get_str(); }

inline std::string to_string(const BigRat& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline BigRat make_rat(long num, long den = 1) {
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const BigRat& x) { return x.get_den() == 1; }

inline BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt parse_bigint(const std::string& s) { return BigInt(s, 10); }

inline BigRat parse_bigrat(const std::string& s) {
  BigRat r(s, 10);
  r.canonicalize();
  return r;
}

}  // namespace deutsch
