#pragma once
// Exact integer and rational scalars (GMP-backed) and the small helpers the
// lattice and linear algebra layers need: floors, fractional parts, binomials
// with integer upper argument, and exact integer bounds of sqrt expressions.

#include <gmpxx.h>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbispec {

using Int = mpz_class;
using Rat = mpq_class;  // kept canonical: reduced, positive denominator

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

// Reduced copy; two-argument Rat construction does not reduce on its own and
// exact equality requires canonical operands.
inline Rat canonical(const Rat& r) {
  Rat c = r;
  c.canonicalize();
  return c;
}

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

inline Int floor_rat(const Rat& r) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

inline Int ceil_rat(const Rat& r) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

// r - floor(r), always in [0, 1).
inline Rat frac_mod1(const Rat& r) { return r - Rat(floor_rat(r)); }

inline Int round_rat(const Rat& r) { return floor_rat(r + Rat(1, 2)); }

// Binomial coefficient with arbitrary integer upper argument:
// C(x, j) = x(x-1)...(x-j+1)/j!.  Vanishes for 0 <= x < j; nonzero for x < 0.
inline Int binomial(const Int& x, long j) {
  if (j < 0) return Int(0);
  Int r;
  mpz_bin_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(j));
  return r;
}

inline Int binomial(long x, long j) { return binomial(Int(x), j); }

// Largest integer n with n + c <= sqrt(x), for rational x >= 0.
// A double guess is corrected by exact comparisons, so the result is exact.
inline Int floor_sqrt_shift(const Rat& x, const Rat& c) {
  if (x < 0) throw std::domain_error("floor_sqrt_shift: negative radicand");
  auto ok = [&](const Int& m) {
    Rat s = Rat(m) + c;
    return s <= 0 || s * s <= x;
  };
  double guess = std::sqrt(x.get_d()) - c.get_d();
  Int n;
  mpz_set_d(n.get_mpz_t(), std::floor(guess));
  while (ok(n + 1)) n += 1;
  while (!ok(n)) n -= 1;
  return n;
}

// Smallest integer n with n + c >= -sqrt(x), for rational x >= 0.
inline Int ceil_neg_sqrt_shift(const Rat& x, const Rat& c) {
  if (x < 0) throw std::domain_error("ceil_neg_sqrt_shift: negative radicand");
  auto ok = [&](const Int& m) {
    Rat s = Rat(m) + c;
    return s >= 0 || s * s <= x;
  };
  double guess = -std::sqrt(x.get_d()) - c.get_d();
  Int n;
  mpz_set_d(n.get_mpz_t(), std::ceil(guess));
  while (ok(n - 1)) n -= 1;
  while (!ok(n)) n += 1;
  return n;
}

// Parses "p/q" or "p"; the result is canonical.
inline Rat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash));
    Int den(s.substr(slash + 1));
    return make_rat(num, den);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("parse_rat: bad rational literal '" + s + "'");
  }
}

inline std::string rat_string(const Rat& r) {
  if (is_integer(r)) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace orbispec
