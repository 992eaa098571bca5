#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "wdp/errors.hpp"

namespace wdp {

// Exact arbitrary-precision arithmetic. mpq_class keeps values canonical
// (lowest terms, positive denominator); nothing in the engine ever rounds.
using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline int sign(const Rat& q) { return sgn(q); }

inline Rat rat_min(const Rat& a, const Rat& b) { return a < b ? a : b; }
inline Rat rat_max(const Rat& a, const Rat& b) { return a < b ? b : a; }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

// Canonical text form: "num/den", or just "num" when den == 1.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline Rat rat_parse(const std::string& s) {
  Rat q;
  if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Exact square root, or nullopt when q is not the square of a rational.
inline std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  const Int& num = q.get_num();
  const Int& den = q.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return std::nullopt;
  if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rat(rn, rd);
}

}  // namespace wdp
