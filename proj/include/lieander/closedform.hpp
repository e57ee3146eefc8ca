#pragma once

#include <cstdint>
#include <vector>

#include "lieander/core.hpp"

namespace lieander {

/// Euler totient values phi[m] for 1 <= m <= limit, with prefix sums.
class TotientSieve {
public:
  explicit TotientSieve(int limit);

  int limit() const { return limit_; }

  /// phi(m); throws std::out_of_range unless 1 <= m <= limit.
  std::int64_t phi(int m) const;

  /// Sum of phi(j) for 1 <= j <= m (0 for m <= 0); m must not exceed limit.
  std::int64_t phi_sum(int m) const;

private:
  int limit_;
  std::vector<std::int32_t> phi_;
  std::vector<std::int64_t> prefix_;
};

TotientSieve build_totient_sieve(int limit);

/// Arithmetic lieander test for the shapes (2,1), (3,1), (2,2) (in either
/// top/bottom order): (a,b)/(c) is connected iff gcd(a,n)=1; (a,b,c)/(d)
/// iff gcd(a+b, b+c)=1; (a,b)/(c,d) iff gcd(a+d, n)=1.
/// Throws std::domain_error for any other shape.
bool is_lieander_gcd(const CompositionPair& p);

/// Exact count by closed formula: L(2,1,n) = phi(n),
/// L(3,1,n) = sum_{j<n} phi(j) - phi(n), L(2,2,n) = (n-2)*phi(n);
/// 0 whenever n < max(k_plus, k_minus). Order-insensitive in the lengths.
/// Throws std::domain_error for unsupported shapes, std::out_of_range when
/// n exceeds the sieve limit.
std::int64_t closed_count(int k_plus, int k_minus, int n, const TotientSieve& sieve);

/// Empirical error of the cumulative main term. For S(x) = sum_{n<=x} of the
/// closed-form count, the main terms are (6/pi^2) x^2/2, x^3/6, x^3/3 for the
/// shapes (2,1), (3,1), (2,2). The deviation |S(x) - main(x)| is reported
/// under two normalizations over integer x in [3, x_max]:
///   sup_xlogx      -- divided by x ln x,
///   sup_normalized -- divided by x^error_power ln x, where error_power is
///                     the empirical growth order of the deviation (1 for
///                     (2,1); 2 for the cubic shapes, whose second-order term
///                     of order x^2 dominates x ln x).
struct ErrorTermReport {
  int k_plus;
  int k_minus;
  int x_max;
  int main_power;           // power of x in the main term
  double main_coefficient;  // coefficient of x^main_power
  int error_power;          // power of x in the bounded normalization
  double sup_xlogx;
  double sup_normalized;
  int argmax_x;  // integer x attaining sup_normalized
};

/// Requires x_max >= 3 and sieve.limit >= x_max; same shape domain as
/// closed_count.
ErrorTermReport error_term_check(int k_plus, int k_minus, int x_max,
                                 const TotientSieve& sieve);

}  // namespace lieander
