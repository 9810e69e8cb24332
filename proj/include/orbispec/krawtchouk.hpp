#pragma once
// Krawtchouk polynomial values K_p^d(x) = sum_j (-1)^j C(x,j) C(d-x,p-j) in
// exact integers, their integral zero tables, and the odd-dimension zero scan.
// These values are the exterior traces of +-1 diagonal isometries, which is
// why their zeros decide when reflection strata drop out of heat invariants.

#include <orbispec/rational.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace orbispec {

inline Int krawtchouk(long d, long p, const Int& x) {
  if (d < 1) throw std::domain_error("krawtchouk: d must be >= 1");
  if (p < 0 || p > d) throw std::domain_error("krawtchouk: p out of [0, d]");
  Int total(0);
  for (long j = 0; j <= p; ++j) {
    Int term = binomial(x, j) * binomial(Int(d) - x, p - j);
    if (j % 2 != 0) term = -term;
    total += term;
  }
  return total;
}

inline Int krawtchouk(long d, long p, long x) { return krawtchouk(d, p, Int(x)); }

// All k in [0, d] with K_p^d(k) = 0, ascending.
inline std::vector<long> krawtchouk_zeros(long d, long p) {
  std::vector<long> zeros;
  for (long k = 0; k <= d; ++k)
    if (krawtchouk(d, p, k) == 0) zeros.push_back(k);
  return zeros;
}

// For each odd d in [3, max_d]: all (p, k) in [1, d-1]^2 with K_p^d(k) = 0.
struct OddDimZeros {
  long d = 0;
  std::vector<std::pair<long, long>> zeros;  // (p, k) pairs, lexicographic
};

inline std::vector<OddDimZeros> odd_dimension_zero_scan(long max_d) {
  if (max_d < 3) throw std::domain_error("odd_dimension_zero_scan: max_d must be >= 3");
  std::vector<OddDimZeros> out;
  for (long d = 3; d <= max_d; d += 2) {
    OddDimZeros row;
    row.d = d;
    for (long p = 1; p < d; ++p)
      for (long k = 1; k < d; ++k)
        if (krawtchouk(d, p, k) == 0) row.zeros.emplace_back(p, k);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace orbispec
