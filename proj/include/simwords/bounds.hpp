#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "simwords/rational.hpp"

namespace simwords {

using BigInt = mpz_class;

// M-th Catalan number, exactly.
BigInt catalan(unsigned long m);

BigInt binomial(unsigned long n, unsigned long k);

// ceil(alpha * m), exactly.
long long ceil_multiple(const Rational& alpha, long long m);

// Exact count bound on the number of logs after M steps:
//   (k^{n+1} - 1)/(k - 1) * C_M * sum_{j = ceil(alpha M)}^{M} C(M, j)^2 k^{M-j}
BigInt log_count_upper_bound(int k, const Rational& alpha, long long n,
                             long long m);

struct BoundReport {
  int k = 0;
  Rational alpha{0};
  long long n = 0;
  long long m = 0;
  BigInt lhs;          // k^M choice sequences
  BigInt rhs;          // log-count upper bound
  bool contradiction = false;  // rhs < lhs
};

BoundReport bound_report(int k, const Rational& alpha, long long n, long long m);

// Smallest M <= m_max whose exact bound falls below k^M, if any. This checks
// the pre-asymptotic product, which is stronger than the asymptotic claim.
std::optional<BoundReport> find_contradiction_m(int k, const Rational& alpha,
                                                long long n, long long m_max);

// Smallest integer k with k > 16^(1/alpha): with alpha = a/b in lowest terms,
// the smallest k with k^a > 16^b, found by exact root extraction.
BigInt min_alphabet(const Rational& alpha);

// Diagnostic reproduction of the asymptotic chain (C_M ~ 4^M/(M sqrt(pi M)),
// binom(M, j) < 2^M, geometric tail absorbed into k^{n+2}/(k-1)^2). Natural
// logarithms; floating point is fine here because nothing decides on it.
struct RelaxedBound {
  double ln_lhs = 0.0;
  double ln_rhs = 0.0;
};
RelaxedBound relaxed_bound(int k, const Rational& alpha, long long n, long long m);

// Natural log of a positive big integer, for comparing exact against relaxed.
double ln_bigint(const BigInt& value);

// Header plus one row per report: k,alpha,n,M,lhs,rhs,contradiction.
void write_bound_csv(std::ostream& out, const std::vector<BoundReport>& rows);

}  // namespace simwords
