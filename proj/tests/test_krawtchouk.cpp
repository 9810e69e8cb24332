#include <catch2/catch_amalgamated.hpp>

#include <orbispec/krawtchouk.hpp>
#include <orbispec/matrix.hpp>

using namespace orbispec;

namespace {

// Exact expansion of (1 - z)^k (1 + z)^(d - k); coefficient i is the z^i
// term.  Independent of the binomial-sum evaluation used by krawtchouk().
std::vector<Int> generating_product(long d, long k) {
  std::vector<Int> poly{Int(1)};
  auto mul_linear = [&](long sign) {
    std::vector<Int> next(poly.size() + 1);
    for (size_t i = 0; i < poly.size(); ++i) {
      next[i] += poly[i];
      next[i + 1] += sign * poly[i];
    }
    poly = std::move(next);
  };
  for (long i = 0; i < k; ++i) mul_linear(-1);
  for (long i = 0; i < d - k; ++i) mul_linear(+1);
  return poly;
}

IntMat sign_diag(long d, long k) {
  IntMat m = IntMat::identity(d);
  for (long i = 0; i < k; ++i) m(i, i) = -1;
  return m;
}

}  // namespace

TEST_CASE("point values") {
  CHECK(krawtchouk(4, 0, 2) == 1);
  CHECK(krawtchouk(9, 0, 5) == 1);
  CHECK(krawtchouk(6, 1, 3) == 0);   // K_1^d(k) = d - 2k
  CHECK(krawtchouk(6, 1, 1) == 4);
  CHECK(krawtchouk(4, 2, 1) == 0);
  CHECK(krawtchouk(9, 2, 3) == 0);
  CHECK(krawtchouk(5, 5, 3) == -1);  // K_d^d(k) = (-1)^k
  for (long d = 1; d <= 12; ++d)
    for (long k = 0; k <= d; ++k) CHECK(krawtchouk(d, d, k) == (k % 2 == 0 ? 1 : -1));
}

TEST_CASE("symmetry K_p^d(d - x) = (-1)^p K_p^d(x)") {
  for (long d = 1; d <= 12; ++d)
    for (long p = 0; p <= d; ++p)
      for (long x = 0; x <= d; ++x) {
        Int lhs = krawtchouk(d, p, d - x);
        Int rhs = krawtchouk(d, p, x);
        if (p % 2 != 0) rhs = -rhs;
        CHECK(lhs == rhs);
      }
}

TEST_CASE("generating identity sum_p K_p^d(k) z^p = (1-z)^k (1+z)^(d-k)") {
  for (long d = 1; d <= 10; ++d)
    for (long k = 0; k <= d; ++k) {
      auto coeffs = generating_product(d, k);
      REQUIRE(coeffs.size() == static_cast<size_t>(d + 1));
      for (long p = 0; p <= d; ++p) CHECK(krawtchouk(d, p, k) == coeffs[p]);
    }
}

TEST_CASE("values are exterior traces of sign-diagonal matrices") {
  for (long d = 1; d <= 8; ++d)
    for (long k = 0; k <= d; ++k)
      for (long p = 0; p <= d; ++p)
        CHECK(krawtchouk(d, p, k) == principal_minor_sum(sign_diag(d, k), p));
}

TEST_CASE("zero tables") {
  CHECK(krawtchouk_zeros(2, 1) == std::vector<long>{1});
  CHECK(krawtchouk_zeros(6, 1) == std::vector<long>{3});
  CHECK(krawtchouk_zeros(6, 3) == std::vector<long>{1, 3, 5});
  CHECK(krawtchouk_zeros(4, 2) == std::vector<long>{1, 3});
  CHECK(krawtchouk_zeros(9, 2) == std::vector<long>{3, 6});
  CHECK(krawtchouk_zeros(16, 2) == std::vector<long>{6, 10});
  CHECK(krawtchouk_zeros(3, 1).empty());
  CHECK(krawtchouk_zeros(8, 0).empty());  // K_0 is constant 1
}

TEST_CASE("square-dimension quadratic zeros at n(n-1)/2 and n(n+1)/2") {
  for (long n = 2; n <= 5; ++n) {
    long d = n * n;
    auto z = krawtchouk_zeros(d, 2);
    REQUIRE(z.size() == 2);
    CHECK(z[0] == n * (n - 1) / 2);
    CHECK(z[1] == n * (n + 1) / 2);
  }
}

TEST_CASE("half-dimension zeros in even dimension") {
  // p = d/2: every odd k is a zero; odd p: k = d/2 is a zero.
  for (long d = 4; d <= 10; d += 2) {
    for (long k = 1; k < d; k += 2) CHECK(krawtchouk(d, d / 2, k) == 0);
    for (long p = 1; p <= d; p += 2) CHECK(krawtchouk(d, p, d / 2) == 0);
  }
}

TEST_CASE("odd-dimension scan: first integral zeros appear at d = 9 and d = 17") {
  auto scan = odd_dimension_zero_scan(17);
  REQUIRE(scan.size() == 8);  // d = 3, 5, ..., 17
  for (const auto& row : scan) {
    if (row.d == 9) {
      std::vector<std::pair<long, long>> expect{{2, 3}, {2, 6}, {3, 2}, {3, 7},
                                                {6, 2}, {6, 7}, {7, 3}, {7, 6}};
      CHECK(row.zeros == expect);
    } else if (row.d == 17) {
      CHECK_FALSE(row.zeros.empty());
    } else {
      CHECK(row.zeros.empty());
    }
  }
}

TEST_CASE("domain errors") {
  CHECK_THROWS_AS(krawtchouk(0, 0, 0), std::domain_error);
  CHECK_THROWS_AS(krawtchouk(4, 5, 1), std::domain_error);
  CHECK_THROWS_AS(krawtchouk(4, -1, 1), std::domain_error);
  CHECK_THROWS_AS(odd_dimension_zero_scan(1), std::domain_error);
}
