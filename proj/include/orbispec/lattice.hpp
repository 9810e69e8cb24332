#pragma once
// Lattices given by a rational Gram matrix, shells of dual vectors ordered by
// dual norm (exact enumeration), and covolumes of sublattices.  The dual norm
// of an integer covector n is  n^T G^{-1} n.

#include <orbispec/exact_real.hpp>
#include <orbispec/matrix.hpp>
#include <orbispec/rational.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

namespace orbispec {

struct Lattice {
  long d = 0;
  RatMat gram;
  RatMat gram_inv;
};

// A = R^T diag(D) R with R unit upper triangular; requires symmetric positive
// definite input (exact check: every pivot positive).
struct LdlResult {
  RatMat R;
  RatVec D;
};

inline LdlResult ldl(const RatMat& A) {
  long d = A.rows;
  if (d != A.cols) throw std::invalid_argument("ldl: not square");
  for (long i = 0; i < d; ++i)
    for (long j = i + 1; j < d; ++j)
      if (A(i, j) != A(j, i)) throw std::invalid_argument("ldl: not symmetric");
  RatMat W = A;
  LdlResult out{RatMat::identity(d), RatVec(d, Rat(0))};
  for (long i = 0; i < d; ++i) {
    out.D[i] = W(i, i);
    if (out.D[i] <= 0) throw std::domain_error("ldl: matrix is not positive definite");
    for (long j = i + 1; j < d; ++j) out.R(i, j) = W(i, j) / out.D[i];
    for (long k = i + 1; k < d; ++k)
      for (long l = k; l < d; ++l) {
        W(k, l) -= out.D[i] * out.R(i, k) * out.R(i, l);
        if (l != k) W(l, k) = W(k, l);
      }
  }
  return out;
}

inline Lattice make_lattice(RatMat gram) {
  if (gram.rows < 1 || gram.rows != gram.cols)
    throw std::invalid_argument("make_lattice: Gram matrix must be square and nonempty");
  ldl(gram);  // validates symmetry and positive definiteness
  Lattice L;
  L.d = gram.rows;
  L.gram_inv = inverse(gram);
  L.gram = std::move(gram);
  return L;
}

inline Rat dual_norm(const Lattice& L, const IntVec& n) {
  if (static_cast<long>(n.size()) != L.d) throw std::invalid_argument("dual_norm: bad size");
  Rat q(0);
  for (long i = 0; i < L.d; ++i)
    for (long j = 0; j < L.d; ++j) q += Rat(n[i]) * L.gram_inv(i, j) * Rat(n[j]);
  return q;
}

struct Shell {
  Rat q;                        // dual norm
  std::vector<IntVec> vectors;  // all covectors of this norm, lexicographic
};

// All integer covectors with dual norm <= Q, grouped into shells by norm,
// shells ascending.  Exact: the quadratic form is decomposed as
// sum_i D_i (n_i + c_i)^2 and each coordinate range is bounded by exact
// integer square-root brackets.  The q = 0 shell holds only the zero vector.
inline std::vector<Shell> shells_up_to(const Lattice& L, const Rat& Q) {
  if (Q < 0) throw std::invalid_argument("shells_up_to: negative norm bound");
  LdlResult f = ldl(L.gram_inv);
  long d = L.d;
  std::map<Rat, std::vector<IntVec>> found;
  IntVec n(d, Int(0));

  // Chooses n_i for i = d-1 down to 0; budget is Q minus the completed terms.
  auto descend = [&](auto&& self, long i, const Rat& budget) -> void {
    if (i < 0) {
      found[Q - budget].push_back(n);
      return;
    }
    Rat c(0);
    for (long j = i + 1; j < d; ++j) c += f.R(i, j) * Rat(n[j]);
    Rat x = budget / f.D[i];
    Int lo = ceil_neg_sqrt_shift(x, c);
    Int hi = floor_sqrt_shift(x, c);
    for (Int v = lo; v <= hi; v += 1) {
      n[i] = v;
      Rat s = Rat(v) + c;
      self(self, i - 1, budget - f.D[i] * s * s);
    }
    n[i] = 0;
  };
  descend(descend, d - 1, Q);

  std::vector<Shell> shells;
  shells.reserve(found.size());
  for (auto& [q, vecs] : found) {
    std::sort(vecs.begin(), vecs.end());
    shells.push_back(Shell{q, std::move(vecs)});
  }
  return shells;
}

// Covolume sqrt(det(U^T G U)) of the sublattice spanned by the columns of U;
// the empty basis gives 1.  Throws if the columns are dependent.
inline ExactReal sublattice_covolume(const RatMat& gram, const IntMat& U) {
  if (U.rows != gram.rows) throw std::invalid_argument("sublattice_covolume: bad shapes");
  if (U.cols == 0) return ExactReal(1);
  RatMat Ur = to_rat(U);
  Rat g = det(mul(mul(to_rat(transpose(U)), gram), Ur));
  if (g <= 0) throw std::domain_error("sublattice_covolume: columns are dependent");
  return ExactReal::sqrt_of(g);
}

}  // namespace orbispec
