#include "simwords/bounds.hpp"

#include <cmath>
#include <ostream>

#include "simwords/error.hpp"

namespace simwords {

namespace {

void validate_bound_params(int k, const Rational& alpha, long long n, long long m) {
  if (k < 2) fail(ErrorKind::kInvalidParams, "k must be at least 2");
  if (n < 1) fail(ErrorKind::kInvalidParams, "n must be at least 1");
  if (m < 1) fail(ErrorKind::kInvalidParams, "M must be at least 1");
  if (alpha <= Rational(0) || alpha >= Rational(1)) {
    fail(ErrorKind::kInvalidParams, "alpha must lie strictly between 0 and 1");
  }
}

}  // namespace

BigInt catalan(unsigned long m) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), 2 * m, m);
  mpz_divexact_ui(result.get_mpz_t(), result.get_mpz_t(), m + 1);
  return result;
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

long long ceil_multiple(const Rational& alpha, long long m) {
  const auto a = static_cast<__int128>(alpha.numerator());
  const auto b = static_cast<__int128>(alpha.denominator());
  return static_cast<long long>((a * m + b - 1) / b);
}

BigInt log_count_upper_bound(int k, const Rational& alpha, long long n,
                             long long m) {
  validate_bound_params(k, alpha, n, m);
  const long long j_low = ceil_multiple(alpha, m);

  // Words of length <= n: (k^{n+1} - 1)/(k - 1).
  BigInt prefactor;
  mpz_ui_pow_ui(prefactor.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(n + 1));
  prefactor -= 1;
  mpz_divexact_ui(prefactor.get_mpz_t(), prefactor.get_mpz_t(),
                  static_cast<unsigned long>(k - 1));

  // Sum over the star counts, walking j downward so the k power and the
  // binomial update incrementally.
  BigInt sum = 0;
  BigInt k_power = 1;  // k^{m - j}
  BigInt binom = 1;    // C(m, j)
  for (long long j = m; j >= j_low; --j) {
    sum += binom * binom * k_power;
    if (j > j_low) {
      k_power *= k;
      binom *= static_cast<unsigned long>(j);
      mpz_divexact_ui(binom.get_mpz_t(), binom.get_mpz_t(),
                      static_cast<unsigned long>(m - j + 1));
    }
  }
  return prefactor * catalan(static_cast<unsigned long>(m)) * sum;
}

BoundReport bound_report(int k, const Rational& alpha, long long n, long long m) {
  BoundReport report;
  report.k = k;
  report.alpha = alpha;
  report.n = n;
  report.m = m;
  mpz_ui_pow_ui(report.lhs.get_mpz_t(), static_cast<unsigned long>(k),
                static_cast<unsigned long>(m));
  report.rhs = log_count_upper_bound(k, alpha, n, m);
  report.contradiction = report.rhs < report.lhs;
  return report;
}

std::optional<BoundReport> find_contradiction_m(int k, const Rational& alpha,
                                                long long n, long long m_max) {
  validate_bound_params(k, alpha, n, m_max);
  BigInt lhs = 1;
  for (long long m = 1; m <= m_max; ++m) {
    lhs *= k;
    const BigInt rhs = log_count_upper_bound(k, alpha, n, m);
    if (rhs < lhs) {
      BoundReport report;
      report.k = k;
      report.alpha = alpha;
      report.n = n;
      report.m = m;
      report.lhs = lhs;
      report.rhs = rhs;
      report.contradiction = true;
      return report;
    }
  }
  return std::nullopt;
}

BigInt min_alphabet(const Rational& alpha) {
  if (alpha <= Rational(0) || alpha >= Rational(1)) {
    fail(ErrorKind::kInvalidParams, "alpha must lie strictly between 0 and 1");
  }
  const auto a = static_cast<unsigned long>(alpha.numerator());
  const auto b = static_cast<unsigned long>(alpha.denominator());
  BigInt power16 = 1;
  mpz_mul_2exp(power16.get_mpz_t(), power16.get_mpz_t(), 4 * b);  // 16^b
  BigInt root;
  mpz_root(root.get_mpz_t(), power16.get_mpz_t(), a);  // floor((16^b)^{1/a})
  return root + 1;
}

RelaxedBound relaxed_bound(int k, const Rational& alpha, long long n,
                           long long m) {
  validate_bound_params(k, alpha, n, m);
  const double alpha_d = static_cast<double>(alpha.numerator()) /
                         static_cast<double>(alpha.denominator());
  const double ln_k = std::log(static_cast<double>(k));
  const double md = static_cast<double>(m);
  RelaxedBound result;
  result.ln_lhs = md * ln_k;
  result.ln_rhs = static_cast<double>(n + 2) * ln_k + md * std::log(16.0) -
                  1.5 * std::log(md) - 0.5 * std::log(std::acos(-1.0)) +
                  md * (1.0 - alpha_d) * ln_k -
                  2.0 * std::log(static_cast<double>(k - 1));
  return result;
}

double ln_bigint(const BigInt& value) {
  signed long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

void write_bound_csv(std::ostream& out, const std::vector<BoundReport>& rows) {
  out << "k,alpha,n,M,lhs,rhs,contradiction\n";
  for (const BoundReport& row : rows) {
    out << row.k << ',' << format_rational(row.alpha) << ',' << row.n << ','
        << row.m << ',' << row.lhs.get_str() << ',' << row.rhs.get_str() << ','
        << (row.contradiction ? "true" : "false") << '\n';
  }
}

}  // namespace simwords
