#pragma once
// Dense exact matrices over Z and Q with the integer normal forms the
// orbifold machinery is built on: Hermite and Smith forms with unimodular
// transforms, saturated integer kernels, fraction-free determinants,
// characteristic polynomials and principal minor sums.

#include <orbispec/rational.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace orbispec {

struct IntMat {
  long rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMat() = default;
  IntMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  IntMat(long r, long c, std::vector<Int> entries) : rows(r), cols(c), a(std::move(entries)) {
    if (a.size() != static_cast<size_t>(r) * c) throw std::invalid_argument("IntMat: entry count");
  }

  Int& operator()(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Int& operator()(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static IntMat identity(long n) {
    IntMat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  bool operator==(const IntMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool is_identity() const {
    if (rows != cols) return false;
    for (long i = 0; i < rows; ++i)
      for (long j = 0; j < cols; ++j)
        if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }
  bool is_zero() const {
    for (const auto& v : a)
      if (v != 0) return false;
    return true;
  }
};

struct RatMat {
  long rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& operator()(long i, long j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& operator()(long i, long j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static RatMat identity(long n) {
    RatMat m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  bool operator==(const RatMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
};

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

inline IntMat transpose(const IntMat& m) {
  IntMat r(m.cols, m.rows);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
  return r;
}

inline RatMat transpose(const RatMat& m) {
  RatMat r(m.cols, m.rows);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) r(j, i) = m(i, j);
  return r;
}

inline IntMat mul(const IntMat& x, const IntMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
  IntMat r(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (long j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

inline RatMat mul(const RatMat& x, const RatMat& y) {
  if (x.cols != y.rows) throw std::invalid_argument("mul: dimension mismatch");
  RatMat r(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (long j = 0; j < y.cols; ++j) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

inline IntVec mul(const IntMat& m, const IntVec& v) {
  if (m.cols != static_cast<long>(v.size())) throw std::invalid_argument("mul: dimension mismatch");
  IntVec r(m.rows);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
  return r;
}

inline RatVec mul(const IntMat& m, const RatVec& v) {
  if (m.cols != static_cast<long>(v.size())) throw std::invalid_argument("mul: dimension mismatch");
  RatVec r(m.rows);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) r[i] += Rat(m(i, j)) * v[j];
  return r;
}

inline RatVec mul(const RatMat& m, const RatVec& v) {
  if (m.cols != static_cast<long>(v.size())) throw std::invalid_argument("mul: dimension mismatch");
  RatVec r(m.rows);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) r[i] += m(i, j) * v[j];
  return r;
}

inline IntMat add(const IntMat& x, const IntMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("add: dimension mismatch");
  IntMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
  return r;
}

inline IntMat sub(const IntMat& x, const IntMat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw std::invalid_argument("sub: dimension mismatch");
  IntMat r = x;
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
  return r;
}

inline IntMat negate(const IntMat& x) {
  IntMat r = x;
  for (auto& v : r.a) v = -v;
  return r;
}

inline Int trace(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("trace: not square");
  Int t;
  for (long i = 0; i < m.rows; ++i) t += m(i, i);
  return t;
}

// Fraction-free (Bareiss) determinant; exact for any square integer matrix.
inline Int det(const IntMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  long n = m.rows;
  if (n == 0) return Int(1);
  IntMat b = m;
  Int prev(1);
  int sign = 1;
  for (long k = 0; k + 1 < n; ++k) {
    if (b(k, k) == 0) {
      long piv = -1;
      for (long i = k + 1; i < n; ++i)
        if (b(i, k) != 0) {
          piv = i;
          break;
        }
      if (piv < 0) return Int(0);
      for (long j = 0; j < n; ++j) std::swap(b(k, j), b(piv, j));
      sign = -sign;
    }
    for (long i = k + 1; i < n; ++i) {
      for (long j = k + 1; j < n; ++j) {
        Int v = b(i, j) * b(k, k) - b(i, k) * b(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        b(i, j) = v;
      }
      b(i, k) = 0;
    }
    prev = b(k, k);
  }
  return sign < 0 ? Int(-b(n - 1, n - 1)) : b(n - 1, n - 1);
}

inline Rat det(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("det: not square");
  long n = m.rows;
  RatMat b = m;
  Rat result(1);
  for (long k = 0; k < n; ++k) {
    long piv = -1;
    for (long i = k; i < n; ++i)
      if (b(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) return Rat(0);
    if (piv != k) {
      for (long j = 0; j < n; ++j) std::swap(b(k, j), b(piv, j));
      result = -result;
    }
    result *= b(k, k);
    Rat inv_p = Rat(1) / b(k, k);
    for (long i = k + 1; i < n; ++i) {
      Rat f = b(i, k) * inv_p;
      if (f == 0) continue;
      for (long j = k; j < n; ++j) b(i, j) -= f * b(k, j);
    }
  }
  return result;
}

inline RatMat inverse(const RatMat& m) {
  if (m.rows != m.cols) throw std::invalid_argument("inverse: not square");
  long n = m.rows;
  RatMat b = m, inv = RatMat::identity(n);
  for (long k = 0; k < n; ++k) {
    long piv = -1;
    for (long i = k; i < n; ++i)
      if (b(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::domain_error("inverse: singular matrix");
    if (piv != k)
      for (long j = 0; j < n; ++j) {
        std::swap(b(k, j), b(piv, j));
        std::swap(inv(k, j), inv(piv, j));
      }
    Rat inv_p = Rat(1) / b(k, k);
    for (long j = 0; j < n; ++j) {
      b(k, j) *= inv_p;
      inv(k, j) *= inv_p;
    }
    for (long i = 0; i < n; ++i) {
      if (i == k || b(i, k) == 0) continue;
      Rat f = b(i, k);
      for (long j = 0; j < n; ++j) {
        b(i, j) -= f * b(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

// Inverse of a unimodular integer matrix, exact; throws if |det| != 1.
inline IntMat int_inverse(const IntMat& m) {
  Int d = det(m);
  if (d != 1 && d != -1) throw std::domain_error("int_inverse: matrix is not unimodular");
  RatMat inv = inverse(to_rat(m));
  IntMat r(m.rows, m.cols);
  for (long i = 0; i < m.rows; ++i)
    for (long j = 0; j < m.cols; ++j) {
      if (!is_integer(inv(i, j))) throw std::logic_error("int_inverse: non-integer entry");
      r(i, j) = inv(i, j).get_num();
    }
  return r;
}

// Row Hermite normal form: U * A = H with U unimodular, H in row echelon
// form with positive pivots and entries above each pivot reduced into
// [0, pivot).  rank = number of nonzero rows of H.
struct HnfResult {
  IntMat H, U;
  long rank = 0;
};

inline HnfResult row_hermite(const IntMat& A) {
  HnfResult res{A, IntMat::identity(A.rows), 0};
  IntMat& H = res.H;
  IntMat& U = res.U;
  auto swap_rows = [&](long i, long j) {
    if (i == j) return;
    for (long c = 0; c < H.cols; ++c) std::swap(H(i, c), H(j, c));
    for (long c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
  };
  auto add_row = [&](long dst, long src, const Int& f) {  // row dst += f * row src
    if (f == 0) return;
    for (long c = 0; c < H.cols; ++c) H(dst, c) += f * H(src, c);
    for (long c = 0; c < U.cols; ++c) U(dst, c) += f * U(src, c);
  };
  auto negate_row = [&](long i) {
    for (long c = 0; c < H.cols; ++c) H(i, c) = -H(i, c);
    for (long c = 0; c < U.cols; ++c) U(i, c) = -U(i, c);
  };

  long r = 0;
  for (long c = 0; c < H.cols && r < H.rows; ++c) {
    // Euclidean reduction of column c below row r.
    while (true) {
      long best = -1;
      for (long i = r; i < H.rows; ++i) {
        if (H(i, c) == 0) continue;
        if (best < 0 || mpz_cmpabs(H(i, c).get_mpz_t(), H(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best < 0) break;
      swap_rows(r, best);
      bool clean = true;
      for (long i = r + 1; i < H.rows; ++i) {
        if (H(i, c) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
        add_row(i, r, -q);
        if (H(i, c) != 0) clean = false;
      }
      if (clean) break;
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) negate_row(r);
    for (long i = 0; i < r; ++i) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), H(i, c).get_mpz_t(), H(r, c).get_mpz_t());
      add_row(i, r, -q);
    }
    ++r;
  }
  res.rank = r;
  return res;
}

// Smith normal form: U * A * V = D with U, V unimodular and D diagonal with
// nonnegative entries d_1 | d_2 | ... ; rank = number of nonzero d_i.
struct SnfResult {
  IntMat D, U, V;
  long rank = 0;
};

inline SnfResult smith(const IntMat& A) {
  SnfResult res{A, IntMat::identity(A.rows), IntMat::identity(A.cols), 0};
  IntMat& D = res.D;
  IntMat& U = res.U;
  IntMat& V = res.V;
  auto swap_rows = [&](long i, long j) {
    if (i == j) return;
    for (long c = 0; c < D.cols; ++c) std::swap(D(i, c), D(j, c));
    for (long c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
  };
  auto swap_cols = [&](long i, long j) {
    if (i == j) return;
    for (long r = 0; r < D.rows; ++r) std::swap(D(r, i), D(r, j));
    for (long r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
  };
  auto add_row = [&](long dst, long src, const Int& f) {
    if (f == 0) return;
    for (long c = 0; c < D.cols; ++c) D(dst, c) += f * D(src, c);
    for (long c = 0; c < U.cols; ++c) U(dst, c) += f * U(src, c);
  };
  auto add_col = [&](long dst, long src, const Int& f) {
    if (f == 0) return;
    for (long r = 0; r < D.rows; ++r) D(r, dst) += f * D(r, src);
    for (long r = 0; r < V.rows; ++r) V(r, dst) += f * V(r, src);
  };

  long n = std::min(D.rows, D.cols);
  for (long t = 0; t < n; ++t) {
    // Locate a minimal-magnitude nonzero entry in the trailing block.
    long pi = -1, pj = -1;
    for (long i = t; i < D.rows; ++i)
      for (long j = t; j < D.cols; ++j) {
        if (D(i, j) == 0) continue;
        if (pi < 0 || mpz_cmpabs(D(i, j).get_mpz_t(), D(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
        }
      }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);

    bool stable = false;
    while (!stable) {
      stable = true;
      for (long i = t + 1; i < D.rows; ++i) {
        if (D(i, t) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
        add_row(i, t, -q);
        if (D(i, t) != 0) {
          swap_rows(t, i);
          stable = false;
        }
      }
      for (long j = t + 1; j < D.cols; ++j) {
        if (D(t, j) == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
        add_col(j, t, -q);
        if (D(t, j) != 0) {
          swap_cols(t, j);
          stable = false;
        }
      }
      if (!stable) continue;
      // Enforce divisibility of the trailing block by D(t,t).
      for (long i = t + 1; i < D.rows && stable; ++i)
        for (long j = t + 1; j < D.cols && stable; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row(t, i, Int(1));
            stable = false;
          }
    }
    if (D(t, t) < 0) {
      for (long c = 0; c < D.cols; ++c) D(t, c) = -D(t, c);
      for (long c = 0; c < U.cols; ++c) U(t, c) = -U(t, c);
    }
  }
  for (long t = 0; t < n; ++t)
    if (D(t, t) != 0) ++res.rank;
  return res;
}

// Basis of the saturated lattice {x in Z^cols : A x = 0}, returned as the
// columns of a cols x nullity matrix in a canonical (Hermite) form.
inline IntMat integer_kernel(const IntMat& A) {
  HnfResult h = row_hermite(transpose(A));
  long k = A.cols - h.rank;
  IntMat rows_mat(k, A.cols);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < A.cols; ++j) rows_mat(i, j) = h.U(h.rank + i, j);
  HnfResult canon = row_hermite(rows_mat);
  IntMat result(A.cols, k);
  for (long i = 0; i < k; ++i)
    for (long j = 0; j < A.cols; ++j) result(j, i) = canon.H(i, j);
  return result;
}

inline long nullity(const IntMat& A) { return A.cols - row_hermite(transpose(A)).rank; }

// Characteristic polynomial det(xI - M) by the Faddeev-LeVerrier recurrence;
// all divisions are exact.  Coefficients are returned leading-first, so the
// result c satisfies p(x) = sum_i c[i] x^(n-i) with c[0] = 1.
inline std::vector<Int> char_poly(const IntMat& M) {
  if (M.rows != M.cols) throw std::invalid_argument("char_poly: not square");
  long n = M.rows;
  std::vector<Int> c(n + 1);
  c[0] = 1;
  IntMat Ak = M;
  for (long k = 1; k <= n; ++k) {
    Int tr = trace(Ak);
    Int ck = -tr;
    mpz_divexact_ui(ck.get_mpz_t(), ck.get_mpz_t(), static_cast<unsigned long>(k));
    c[k] = ck;
    if (k < n) {
      IntMat tmp = Ak;
      for (long i = 0; i < n; ++i) tmp(i, i) += ck;
      Ak = mul(M, tmp);
    }
  }
  return c;
}

// Sum of all p x p principal minors of M (the trace of the p-th exterior
// power).  Direct enumeration; deliberately independent of char_poly so the
// two can cross-check each other.
inline Int principal_minor_sum(const IntMat& M, long p) {
  if (M.rows != M.cols) throw std::invalid_argument("principal_minor_sum: not square");
  long n = M.rows;
  if (p < 0 || p > n) throw std::domain_error("principal_minor_sum: p out of [0, d]");
  if (p == 0) return Int(1);
  std::vector<long> idx(p);
  for (long i = 0; i < p; ++i) idx[i] = i;
  Int total(0);
  while (true) {
    IntMat minor(p, p);
    for (long i = 0; i < p; ++i)
      for (long j = 0; j < p; ++j) minor(i, j) = M(idx[i], idx[j]);
    total += det(minor);
    long i = p - 1;
    while (i >= 0 && idx[i] == n - p + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (long j = i + 1; j < p; ++j) idx[j] = idx[j - 1] + 1;
  }
  return total;
}

}  // namespace orbispec
