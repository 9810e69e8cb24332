#pragma once
// Univariate polynomial helpers: exact synthetic division and evaluation over
// Z, monic gcd and Yun squarefree decomposition over Q, and a Durand-Kerner
// root finder used only on squarefree factors (all roots simple there).
// Coefficients are stored leading-first throughout.

#include <orbispec/rational.hpp>

#include <algorithm>
#include <complex>
#include <stdexcept>
#include <vector>

namespace orbispec {

using IPoly = std::vector<Int>;  // leading-first
using RPoly = std::vector<Rat>;  // leading-first

inline Int poly_eval(const IPoly& p, const Int& x) {
  Int v(0);
  for (const auto& c : p) v = v * x + c;
  return v;
}

// Divides p by (x - root); returns the quotient and writes the remainder.
inline IPoly poly_divide_linear(const IPoly& p, const Int& root, Int& remainder) {
  if (p.empty()) throw std::invalid_argument("poly_divide_linear: empty polynomial");
  IPoly q(p.size() - 1);
  Int acc(0);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    acc = acc * root + p[i];
    q[i] = acc;
  }
  remainder = acc * root + p.back();
  return q;
}

inline RPoly to_rat_poly(const IPoly& p) {
  RPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = Rat(p[i]);
  return r;
}

inline long degree(const RPoly& p) { return static_cast<long>(p.size()) - 1; }

inline RPoly trim(RPoly p) {
  size_t i = 0;
  while (i + 1 < p.size() && p[i] == 0) ++i;
  p.erase(p.begin(), p.begin() + i);
  return p;
}

inline bool is_zero_poly(const RPoly& p) { return p.size() == 1 && p[0] == 0; }

inline RPoly monic(RPoly p) {
  p = trim(std::move(p));
  if (p[0] == 0) return p;  // zero polynomial
  Rat lead = p[0];
  for (auto& c : p) c /= lead;
  return p;
}

inline RPoly derivative(const RPoly& p) {
  if (p.size() <= 1) return RPoly{Rat(0)};
  RPoly d(p.size() - 1);
  long n = degree(p);
  for (size_t i = 0; i + 1 < p.size(); ++i) d[i] = p[i] * Rat(n - static_cast<long>(i));
  return trim(d);
}

// Euclidean division p = q * g + r over Q.
inline void poly_divmod(const RPoly& p, const RPoly& g, RPoly& q, RPoly& r) {
  RPoly gg = trim(g);
  if (is_zero_poly(gg)) throw std::domain_error("poly_divmod: division by zero polynomial");
  RPoly rr = trim(p);
  long dg = degree(gg);
  if (degree(rr) < dg || is_zero_poly(rr)) {
    q = RPoly{Rat(0)};
    r = rr;
    return;
  }
  q.assign(degree(rr) - dg + 1, Rat(0));
  while (!is_zero_poly(rr) && degree(rr) >= dg) {
    long shift = degree(rr) - dg;
    Rat f = rr[0] / gg[0];
    q[q.size() - 1 - shift] = f;
    for (long i = 0; i <= dg; ++i) rr[i] -= f * gg[i];
    rr = trim(rr);
    if (rr.size() == 1 && rr[0] == 0) break;
    if (static_cast<long>(rr.size()) - 1 >= dg && rr[0] == 0) rr = trim(rr);
  }
  r = trim(rr);
}

inline RPoly poly_div_exact(const RPoly& p, const RPoly& g) {
  RPoly q, r;
  poly_divmod(p, g, q, r);
  if (!is_zero_poly(r)) throw std::logic_error("poly_div_exact: nonzero remainder");
  return q;
}

inline RPoly poly_gcd(RPoly a, RPoly b) {
  a = monic(std::move(a));
  b = monic(std::move(b));
  while (!is_zero_poly(b)) {
    RPoly q, r;
    poly_divmod(a, b, q, r);
    a = std::move(b);
    b = monic(std::move(r));
  }
  return monic(std::move(a));
}

inline RPoly poly_sub(const RPoly& x, const RPoly& y) {
  size_t n = std::max(x.size(), y.size());
  RPoly r(n, Rat(0));
  for (size_t i = 0; i < x.size(); ++i) r[n - x.size() + i] += x[i];
  for (size_t i = 0; i < y.size(); ++i) r[n - y.size() + i] -= y[i];
  return trim(r);
}

// Yun squarefree decomposition of a monic polynomial: out[i] is the monic
// squarefree product of the roots of multiplicity i+1, so
// p = prod_i out[i]^(i+1) and the out[i] are pairwise coprime.
inline std::vector<RPoly> squarefree_decomposition(const RPoly& p_in) {
  RPoly p = monic(p_in);
  std::vector<RPoly> out;
  if (degree(p) <= 0) return out;
  RPoly dp = derivative(p);
  RPoly g = poly_gcd(p, dp);
  RPoly b = poly_div_exact(p, g);
  RPoly c = poly_div_exact(dp, g);
  RPoly d = poly_sub(c, derivative(b));
  while (degree(b) > 0) {
    RPoly f = poly_gcd(b, d);
    out.push_back(f);
    b = poly_div_exact(b, f);
    c = poly_div_exact(d, f);
    d = poly_sub(c, derivative(b));
  }
  return out;
}

// Durand-Kerner iteration; intended for squarefree inputs where all roots
// are simple and convergence is fast.
inline std::vector<std::complex<double>> poly_roots(const std::vector<double>& coeff) {
  size_t n = coeff.size() - 1;
  std::vector<std::complex<double>> roots(n);
  if (n == 0) return roots;
  std::complex<double> seed(0.4, 0.9);
  std::complex<double> z(1.0, 0.0);
  for (size_t i = 0; i < n; ++i) {
    z *= seed;
    roots[i] = z;
  }
  auto eval = [&](std::complex<double> x) {
    std::complex<double> v(0.0, 0.0);
    for (double c : coeff) v = v * x + c;
    return v;
  };
  for (int iter = 0; iter < 500; ++iter) {
    double delta = 0.0;
    for (size_t i = 0; i < n; ++i) {
      std::complex<double> num = eval(roots[i]) / coeff[0];
      std::complex<double> den(1.0, 0.0);
      for (size_t j = 0; j < n; ++j)
        if (j != i) den *= roots[i] - roots[j];
      std::complex<double> step = num / den;
      roots[i] -= step;
      delta = std::max(delta, std::abs(step));
    }
    if (delta < 1e-14) break;
  }
  return roots;
}

}  // namespace orbispec
