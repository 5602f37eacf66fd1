#pragma once

#include <gmpxx.h>

#include <string>

namespace perlef {

using BigInt = mpz_class;
using Rational = mpq_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// True when |v| < 2^53, i.e. the value survives a round trip through a double.
inline bool fits_double_exactly(const BigInt& v) {
  static const BigInt limit = BigInt(1) << 53;
  return abs(v) < limit;
}

}  // namespace perlef
