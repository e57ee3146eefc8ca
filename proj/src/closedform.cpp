#include "lieander/closedform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

namespace lieander {

TotientSieve::TotientSieve(int limit) : limit_(limit) {
  if (limit < 1) throw std::invalid_argument("sieve limit must be >= 1");
  phi_.assign(limit + 1, 0);
  phi_[1] = 1;

  // Linear sieve: each composite is crossed off once by its smallest prime.
  std::vector<std::int32_t> primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::int32_t i = 2; i <= limit; ++i) {
    if (!composite[i]) {
      primes.push_back(i);
      phi_[i] = i - 1;
    }
    for (std::int32_t p : primes) {
      const std::int64_t ip = static_cast<std::int64_t>(i) * p;
      if (ip > limit) break;
      composite[ip] = true;
      if (i % p == 0) {
        phi_[ip] = phi_[i] * p;
        break;
      }
      phi_[ip] = phi_[i] * (p - 1);
    }
  }

  prefix_.assign(limit + 1, 0);
  for (int m = 1; m <= limit; ++m) prefix_[m] = prefix_[m - 1] + phi_[m];
}

std::int64_t TotientSieve::phi(int m) const {
  if (m < 1 || m > limit_)
    throw std::out_of_range("phi(" + std::to_string(m) + ") outside sieve limit " +
                            std::to_string(limit_));
  return phi_[m];
}

std::int64_t TotientSieve::phi_sum(int m) const {
  if (m <= 0) return 0;
  if (m > limit_)
    throw std::out_of_range("phi_sum(" + std::to_string(m) + ") outside sieve limit " +
                            std::to_string(limit_));
  return prefix_[m];
}

TotientSieve build_totient_sieve(int limit) { return TotientSieve(limit); }

namespace {

[[noreturn]] void unsupported_shape(int k_plus, int k_minus) {
  throw std::domain_error("no arithmetic criterion for shape (" +
                          std::to_string(k_plus) + "," + std::to_string(k_minus) + ")");
}

}  // namespace

bool is_lieander_gcd(const CompositionPair& p) {
  // Normalize so the longer composition is on top; connectivity is symmetric.
  const std::vector<int>* top = &p.top().parts();
  const std::vector<int>* bottom = &p.bottom().parts();
  if (top->size() < bottom->size()) std::swap(top, bottom);

  const std::size_t k_top = top->size();
  const std::size_t k_bottom = bottom->size();
  const int n = p.n();

  if (k_top == 2 && k_bottom == 1) return std::gcd((*top)[0], n) == 1;
  if (k_top == 3 && k_bottom == 1)
    return std::gcd((*top)[0] + (*top)[1], (*top)[1] + (*top)[2]) == 1;
  if (k_top == 2 && k_bottom == 2) return std::gcd((*top)[0] + (*bottom)[1], n) == 1;
  unsupported_shape(static_cast<int>(p.top().parts().size()),
                    static_cast<int>(p.bottom().parts().size()));
}

std::int64_t closed_count(int k_plus, int k_minus, int n, const TotientSieve& sieve) {
  if (k_plus < 1 || k_minus < 1 || n < 1)
    throw std::invalid_argument("closed_count requires positive arguments");
  const int hi = std::max(k_plus, k_minus);
  const int lo = std::min(k_plus, k_minus);
  if (!((hi == 2 && lo == 1) || (hi == 3 && lo == 1) || (hi == 2 && lo == 2)))
    unsupported_shape(k_plus, k_minus);
  if (n < hi) return 0;
  if (n > sieve.limit())
    throw std::out_of_range("closed_count: n exceeds sieve limit");

  if (hi == 2 && lo == 1) return sieve.phi(n);
  if (hi == 3 && lo == 1) return sieve.phi_sum(n - 1) - sieve.phi(n);
  return static_cast<std::int64_t>(n - 2) * sieve.phi(n);
}

ErrorTermReport error_term_check(int k_plus, int k_minus, int x_max,
                                 const TotientSieve& sieve) {
  if (x_max < 3) throw std::invalid_argument("error_term_check requires x_max >= 3");
  if (x_max > sieve.limit())
    throw std::out_of_range("error_term_check: x_max exceeds sieve limit");

  const int hi = std::max(k_plus, k_minus);
  const int lo = std::min(k_plus, k_minus);
  ErrorTermReport report{k_plus, k_minus, x_max, 0, 0.0, 0, 0.0, 0.0, 0};
  const double density = 6.0 / (std::numbers::pi * std::numbers::pi);
  if (hi == 2 && lo == 1) {
    report.main_power = 2;
    report.main_coefficient = density / 2.0;
    report.error_power = 1;
  } else if (hi == 3 && lo == 1) {
    report.main_power = 3;
    report.main_coefficient = density / 6.0;
    report.error_power = 2;
  } else if (hi == 2 && lo == 2) {
    report.main_power = 3;
    report.main_coefficient = density / 3.0;
    report.error_power = 2;
  } else {
    unsupported_shape(k_plus, k_minus);
  }

  std::int64_t cumulative = 0;
  for (int x = 1; x <= x_max; ++x) {
    cumulative += closed_count(k_plus, k_minus, x, sieve);
    if (x < 3) continue;
    const double xd = static_cast<double>(x);
    const double main = report.main_coefficient * std::pow(xd, report.main_power);
    const double deviation = std::abs(static_cast<double>(cumulative) - main);
    const double log_x = std::log(xd);
    report.sup_xlogx = std::max(report.sup_xlogx, deviation / (xd * log_x));
    const double normalized = deviation / (std::pow(xd, report.error_power) * log_x);
    if (normalized > report.sup_normalized) {
      report.sup_normalized = normalized;
      report.argmax_x = x;
    }
  }
  return report;
}

}  // namespace lieander
