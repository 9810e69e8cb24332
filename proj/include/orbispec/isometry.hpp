#pragma once
// Affine lattice isometries x -> M x + t in lattice coordinates: composition,
// inversion, the translational part a with f = M . (x + a), finite group
// closure over the torus, exterior traces, eigenvalue types on the unit
// circle, and the determinant of Id - M restricted to the moved subspace.

#include <orbispec/matrix.hpp>
#include <orbispec/polynomial.hpp>
#include <orbispec/rational.hpp>

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbispec {

struct AffineIsometry {
  IntMat M;
  RatVec t;

  AffineIsometry() = default;
  AffineIsometry(IntMat m, RatVec tr) : M(std::move(m)), t(std::move(tr)) {
    if (M.rows != M.cols || M.rows != static_cast<long>(t.size()))
      throw std::invalid_argument("AffineIsometry: inconsistent dimensions");
  }

  long dim() const { return M.rows; }
  bool operator==(const AffineIsometry& o) const { return M == o.M && t == o.t; }

  static AffineIsometry identity(long d) {
    return AffineIsometry(IntMat::identity(d), RatVec(d, Rat(0)));
  }
  static AffineIsometry linear(IntMat m) {
    long d = m.rows;
    return AffineIsometry(std::move(m), RatVec(d, Rat(0)));
  }
};

// (f o g)(x) = M_f (M_g x + t_g) + t_f.
inline AffineIsometry compose(const AffineIsometry& f, const AffineIsometry& g) {
  if (f.dim() != g.dim()) throw std::invalid_argument("compose: dimension mismatch");
  RatVec t = mul(f.M, g.t);
  for (long i = 0; i < f.dim(); ++i) t[i] += f.t[i];
  return AffineIsometry(mul(f.M, g.M), std::move(t));
}

inline AffineIsometry inverse(const AffineIsometry& f) {
  IntMat inv = int_inverse(f.M);
  RatVec t = mul(inv, f.t);
  for (auto& v : t) v = -v;
  return AffineIsometry(std::move(inv), std::move(t));
}

// Reduces the translation entries into [0, 1); this identifies coset
// representatives modulo lattice translations.
inline AffineIsometry normalize_mod1(AffineIsometry f) {
  for (auto& v : f.t) v = frac_mod1(v);
  return f;
}

// The vector a with f = M . L_a, i.e. f(x) = M(x + a):  a = M^{-1} t mod 1.
inline RatVec a_of(const AffineIsometry& f) {
  RatVec a = mul(int_inverse(f.M), f.t);
  for (auto& v : a) v = frac_mod1(v);
  return a;
}

inline bool is_gram_orthogonal(const IntMat& M, const RatMat& gram) {
  if (M.rows != gram.rows || M.rows != M.cols) return false;
  RatMat mt = to_rat(transpose(M));
  return mul(mul(mt, gram), to_rat(M)) == gram;
}

inline bool is_orientation_preserving(const IntMat& M) { return det(M) == 1; }

// Trace of the induced map on p-forms (p-th elementary symmetric function of
// the eigenvalues); an exact integer since M is integral.
inline Int exterior_trace(const AffineIsometry& f, long p) {
  return principal_minor_sum(f.M, p);
}

namespace detail {
inline std::string mat_key(const IntMat& m) {
  std::string s;
  for (const auto& v : m.a) {
    s += v.get_str();
    s += ',';
  }
  return s;
}
}  // namespace detail

// Closure of the generated group of torus maps, one element per point matrix,
// translations reduced mod 1, identity first, remainder sorted by matrix
// entries.  Errors: a generator not orthogonal for the given Gram, more than
// max_order elements, or the same point matrix recurring with a different
// translation mod 1 (the translation lattice given is then not the full
// translation subgroup; such holonomy data is rejected).
inline std::vector<AffineIsometry> group_closure(const std::vector<AffineIsometry>& generators,
                                                 const RatMat& gram, long max_order = 2048) {
  if (generators.empty() && gram.rows == 0)
    throw std::invalid_argument("group_closure: no generators and no dimension");
  long d = generators.empty() ? gram.rows : generators.front().dim();
  for (const auto& g : generators) {
    if (g.dim() != d) throw std::invalid_argument("group_closure: mixed dimensions");
    if (!is_gram_orthogonal(g.M, gram))
      throw std::domain_error("group_closure: generator does not preserve the Gram form");
  }

  std::map<std::string, AffineIsometry> seen;
  std::vector<AffineIsometry> queue;
  auto insert = [&](const AffineIsometry& f) -> bool {
    AffineIsometry n = normalize_mod1(f);
    std::string key = detail::mat_key(n.M);
    auto it = seen.find(key);
    if (it != seen.end()) {
      if (!(it->second.t == n.t))
        throw std::domain_error(
            "group_closure: point matrix recurs with a different translation mod 1 "
            "(lattice is not the full translation subgroup)");
      return false;
    }
    if (static_cast<long>(seen.size()) >= max_order)
      throw std::domain_error("group_closure: group order exceeds cap");
    seen.emplace(key, n);
    queue.push_back(n);
    return true;
  };

  insert(AffineIsometry::identity(d));
  for (const auto& g : generators) insert(g);
  for (size_t head = 0; head < queue.size(); ++head) {
    AffineIsometry f = queue[head];  // copy: queue may reallocate
    for (const auto& g : generators) {
      insert(compose(f, g));
      insert(compose(g, f));
    }
  }

  std::vector<AffineIsometry> out;
  out.reserve(seen.size());
  out.push_back(normalize_mod1(AffineIsometry::identity(d)));
  for (const auto& [key, f] : seen)
    if (!f.M.is_identity()) out.push_back(f);
  return out;
}

// Eigenvalue structure of a finite-order integer matrix: multiplicity of +1,
// of -1, and the rotation angles in (0, pi) with multiplicity, ascending.
struct EigenvalueType {
  long d = 0;
  long plus_mult = 0;             // eigenvalue +1
  long minus_mult = 0;            // eigenvalue -1 (written r below)
  std::vector<double> angles;     // one entry per conjugate pair
  long s() const { return static_cast<long>(angles.size()); }
  long moved_dim() const { return minus_mult + 2 * s(); }  // codim of fixed space
};

// Extracts the eigenvalue type.  The +1 multiplicity is the exact kernel
// dimension of M - I and the -1 multiplicity the kernel dimension of M + I;
// the corresponding linear factors are divided out exactly.  The remaining
// even part is split into exact squarefree factors, whose roots are simple
// and found numerically.  Errors if any root strays from the unit circle by
// more than 1e-9, if two distinct roots come within 1e-9 of each other, or if
// a real root survives (the matrix then has infinite order).
inline EigenvalueType eigenvalue_type(const IntMat& M) {
  constexpr double kTol = 1e-9;
  if (M.rows != M.cols) throw std::invalid_argument("eigenvalue_type: not square");
  long d = M.rows;
  EigenvalueType type;
  type.d = d;

  IntMat m_minus = M, m_plus = M;
  for (long i = 0; i < d; ++i) {
    m_minus(i, i) -= 1;
    m_plus(i, i) += 1;
  }
  type.plus_mult = nullity(m_minus);
  type.minus_mult = nullity(m_plus);

  IPoly poly = char_poly(M);
  Int rem;
  for (long i = 0; i < type.plus_mult; ++i) {
    poly = poly_divide_linear(poly, Int(1), rem);
    if (rem != 0) throw std::domain_error("eigenvalue_type: matrix is not of finite order");
  }
  for (long i = 0; i < type.minus_mult; ++i) {
    poly = poly_divide_linear(poly, Int(-1), rem);
    if (rem != 0) throw std::domain_error("eigenvalue_type: matrix is not of finite order");
  }
  if (poly_eval(poly, Int(1)) == 0 || poly_eval(poly, Int(-1)) == 0)
    throw std::domain_error("eigenvalue_type: matrix is not of finite order");

  if (poly.size() > 1) {
    std::vector<std::pair<double, long>> found;  // (angle, multiplicity)
    auto factors = squarefree_decomposition(to_rat_poly(poly));
    for (size_t fi = 0; fi < factors.size(); ++fi) {
      if (degree(factors[fi]) == 0) continue;
      std::vector<double> coeffs;
      for (const auto& c : factors[fi]) coeffs.push_back(c.get_d());
      auto roots = poly_roots(coeffs);
      for (const auto& z : roots) {
        if (std::abs(std::abs(z) - 1.0) > kTol)
          throw std::domain_error("eigenvalue_type: root off the unit circle");
        if (std::abs(z.imag()) <= kTol)
          throw std::domain_error("eigenvalue_type: unexpected real root");
        if (z.imag() < 0) continue;  // keep one representative per conjugate pair
        found.emplace_back(std::arg(z), static_cast<long>(fi) + 1);
      }
    }
    std::sort(found.begin(), found.end());
    for (size_t i = 0; i + 1 < found.size(); ++i)
      if (found[i + 1].first - found[i].first < kTol)
        throw std::domain_error("eigenvalue_type: root clustering ambiguity");
    for (const auto& [angle, mult] : found)
      for (long c = 0; c < mult; ++c) type.angles.push_back(angle);
    std::sort(type.angles.begin(), type.angles.end());
  }

  if (type.plus_mult + type.minus_mult + 2 * type.s() != d)
    throw std::logic_error("eigenvalue_type: multiplicities do not sum to d");
  return type;
}

// |det(Id - M)| restricted to the complement of the fixed space: with
// char_poly(M) = (x - 1)^m q(x) and m the exact fixed-space dimension, this
// is |q(1)|, always a nonnegative integer.
inline Int det_complement(const AffineIsometry& f) {
  long d = f.dim();
  IntMat m_minus = f.M;
  for (long i = 0; i < d; ++i) m_minus(i, i) -= 1;
  long m = nullity(m_minus);
  IPoly poly = char_poly(f.M);
  Int rem;
  for (long i = 0; i < m; ++i) {
    poly = poly_divide_linear(poly, Int(1), rem);
    if (rem != 0) throw std::domain_error("det_complement: matrix is not semisimple at 1");
  }
  Int q1 = poly_eval(poly, Int(1));
  return q1 < 0 ? Int(-q1) : q1;
}

// Multiplicative order, or throws past the cap.
inline long order_of(const IntMat& M, long cap = 4096) {
  IntMat p = M;
  for (long n = 1; n <= cap; ++n) {
    if (p.is_identity()) return n;
    p = mul(p, M);
  }
  throw std::domain_error("order_of: order exceeds cap");
}

}  // namespace orbispec
