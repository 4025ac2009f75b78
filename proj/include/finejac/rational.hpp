#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace finejac {

// Exact rational scalar used throughout. GMP keeps the arithmetic
// overflow-free; everything downstream assumes no rounding ever happens.
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Largest integer <= q.
inline mpz_class floor_z(const Rat& q) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Smallest integer >= q.
inline mpz_class ceil_z(const Rat& q) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline long ceil_long(const Rat& q) { return ceil_z(q).get_si(); }
inline long floor_long(const Rat& q) { return floor_z(q).get_si(); }

// Mathematical floor division for machine integers (rounds toward -inf).
inline long floor_div(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

}  // namespace finejac
