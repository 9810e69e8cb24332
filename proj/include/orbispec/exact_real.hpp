#pragma once
// Exact arithmetic in the ring of finite sums  sum_r c_r sqrt(r)  with
// rational c_r and squarefree positive integer radicands r.  Distinct
// squarefree radicands give Q-linearly independent square roots, so equality
// is coefficient-map equality.  Used for stratum volumes and their rational
// aggregates, which all live in this ring.

#include <orbispec/rational.hpp>

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

namespace orbispec {

// n = s^2 * r with r squarefree (n >= 1), by trial division.
inline void squarefree_split(const Int& n, Int& s, Int& r) {
  if (n < 1) throw std::domain_error("squarefree_split: argument must be positive");
  s = 1;
  r = 1;
  Int m = n;
  for (Int p = 2; p * p <= m; p += (p == 2 ? 1 : 2)) {
    long e = 0;
    while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
      m /= p;
      ++e;
    }
    for (long i = 0; i < e / 2; ++i) s *= p;
    if (e % 2) r *= p;
  }
  r *= m;
}

class ExactReal {
 public:
  ExactReal() = default;
  ExactReal(const Rat& r) {
    Rat c = canonical(r);
    if (c != 0) t_[Int(1)] = c;
  }
  ExactReal(long n) : ExactReal(Rat(n)) {}

  // sqrt(p/q) = sqrt(p q)/q, with the square part of p q pulled out.
  static ExactReal sqrt_of(const Rat& radicand) {
    Rat x = canonical(radicand);
    if (x < 0) throw std::domain_error("ExactReal::sqrt_of: negative radicand");
    ExactReal out;
    if (x == 0) return out;
    Int s, r;
    squarefree_split(x.get_num() * x.get_den(), s, r);
    out.t_[r] = make_rat(s, x.get_den());
    return out;
  }

  const std::map<Int, Rat>& terms() const { return t_; }

  bool is_zero() const { return t_.empty(); }
  bool is_rational() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == 1);
  }
  Rat rational_value() const {
    if (t_.empty()) return Rat(0);
    if (!is_rational()) throw std::domain_error("ExactReal: value is irrational");
    return t_.begin()->second;
  }

  double to_double() const {
    double v = 0;
    for (const auto& [rad, c] : t_) v += c.get_d() * std::sqrt(rad.get_d());
    return v;
  }

  bool operator==(const ExactReal& o) const { return t_ == o.t_; }
  bool operator!=(const ExactReal& o) const { return !(*this == o); }

  ExactReal& operator+=(const ExactReal& o) {
    for (const auto& [rad, c] : o.t_) {
      Rat& mine = t_[rad];
      mine += c;
      if (mine == 0) t_.erase(rad);
    }
    return *this;
  }
  ExactReal& operator-=(const ExactReal& o) {
    for (const auto& [rad, c] : o.t_) {
      Rat& mine = t_[rad];
      mine -= c;
      if (mine == 0) t_.erase(rad);
    }
    return *this;
  }

  friend ExactReal operator+(ExactReal a, const ExactReal& b) { return a += b; }
  friend ExactReal operator-(ExactReal a, const ExactReal& b) { return a -= b; }
  friend ExactReal operator-(const ExactReal& a) {
    ExactReal out;
    for (const auto& [rad, c] : a.t_) out.t_[rad] = -c;
    return out;
  }

  // sqrt(r1) sqrt(r2) = g sqrt(r1 r2 / g^2) with g = gcd(r1, r2); the reduced
  // radicand is squarefree because r1/g and r2/g are coprime squarefrees.
  friend ExactReal operator*(const ExactReal& a, const ExactReal& b) {
    ExactReal out;
    for (const auto& [r1, c1] : a.t_)
      for (const auto& [r2, c2] : b.t_) {
        Int g = gcd(r1, r2);
        Int rad = (r1 / g) * (r2 / g);
        Rat& slot = out.t_[rad];
        slot += c1 * c2 * Rat(g);
        if (slot == 0) out.t_.erase(rad);
      }
    return out;
  }
  friend ExactReal operator*(const Rat& c, const ExactReal& a) {
    ExactReal out;
    Rat cc = canonical(c);
    if (cc == 0) return out;
    for (const auto& [rad, co] : a.t_) out.t_[rad] = cc * co;
    return out;
  }
  friend ExactReal operator*(const ExactReal& a, const Rat& c) { return c * a; }

  std::string str() const {
    if (t_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [rad, c] : t_) {
      Rat mag = c < 0 ? Rat(-c) : c;
      if (first)
        s += (c < 0 ? "-" : "");
      else
        s += (c < 0 ? " - " : " + ");
      first = false;
      if (rad == 1) {
        s += rat_string(mag);
      } else {
        if (mag != 1) s += rat_string(mag) + "*";
        s += "sqrt(" + rad.get_str() + ")";
      }
    }
    return s;
  }

 private:
  std::map<Int, Rat> t_;  // squarefree radicand -> nonzero coefficient
};

}  // namespace orbispec
