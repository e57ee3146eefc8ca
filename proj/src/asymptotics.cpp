#include "lieander/asymptotics.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "lieander/enumerate.hpp"

namespace lieander {

namespace {

// Natural log of a positive big integer: split off the top 53 bits so the
// double conversion is exact, and account for the shift.
double log_big(const BigInt& v) {
  const unsigned bits = boost::multiprecision::msb(v);  // v > 0
  if (bits <= 52) return std::log(v.convert_to<double>());
  const unsigned shift = bits - 52;
  const BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + shift * std::numbers::ln2;
}

void require_min_k(int k, int min_k, const char* what) {
  if (k < min_k)
    throw std::domain_error(std::string(what) + ": k must be >= " +
                            std::to_string(min_k) + ", got " + std::to_string(k));
}

BigInt factorial(int m) {
  BigInt acc = 1;
  for (int i = 2; i <= m; ++i) acc *= i;
  return acc;
}

std::int64_t to_int64_exact(const BigRational& value, const char* what) {
  if (boost::multiprecision::denominator(value) != 1)
    throw std::logic_error(std::string(what) + ": expected an integer value");
  const BigInt num = boost::multiprecision::numerator(value);
  if (num < std::numeric_limits<std::int64_t>::min() ||
      num > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error(std::string(what) + ": value exceeds 64-bit range");
  return num.convert_to<std::int64_t>();
}

}  // namespace

PiRational::PiRational(BigRational coeff, int pi_power)
    : coeff_(std::move(coeff)), pi_power_(coeff_ == 0 ? 0 : pi_power) {}

PiRational PiRational::operator*(const PiRational& rhs) const {
  return PiRational(coeff_ * rhs.coeff_, pi_power_ + rhs.pi_power_);
}

PiRational PiRational::operator/(const PiRational& rhs) const {
  if (rhs.is_zero()) throw std::domain_error("PiRational: division by zero");
  return PiRational(coeff_ / rhs.coeff_, pi_power_ - rhs.pi_power_);
}

double PiRational::to_double() const {
  if (is_zero()) return 0.0;
  const double num = boost::multiprecision::numerator(coeff_).convert_to<double>();
  const double den = boost::multiprecision::denominator(coeff_).convert_to<double>();
  const double direct = num / den * std::pow(std::numbers::pi, pi_power_);
  if (std::isfinite(direct) && direct != 0.0) return direct;
  // Operands outside double range; go through logs (sign is the coeff's).
  const double magnitude =
      log_big(boost::multiprecision::abs(boost::multiprecision::numerator(coeff_))) -
      log_big(boost::multiprecision::denominator(coeff_)) +
      pi_power_ * std::log(std::numbers::pi);
  const double sign = coeff_ < 0 ? -1.0 : 1.0;
  return sign * std::exp(magnitude);
}

double PiRational::log() const {
  if (coeff_ <= 0) throw std::domain_error("PiRational::log of a non-positive value");
  return log_big(boost::multiprecision::numerator(coeff_)) -
         log_big(boost::multiprecision::denominator(coeff_)) +
         pi_power_ * std::log(std::numbers::pi);
}

std::string PiRational::to_string() const {
  std::string out = coeff_.str();
  if (pi_power_ != 0) out += " * pi^" + std::to_string(pi_power_);
  return out;
}

BigInt double_factorial(int m) {
  if (m < -1) throw std::domain_error("double factorial undefined below -1");
  BigInt acc = 1;
  for (int i = m; i >= 2; i -= 2) acc *= i;
  return acc;
}

PiRational delta1(int k) {
  require_min_k(k, -1, "delta1");
  BigRational coeff = BigRational((k + 4) * (k + 3)) *
                      BigRational(double_factorial(k + 1), double_factorial(k));
  int power = -(k + 2);
  if (k % 2 != 0)
    power -= 1;  // odd k (including -1): an extra 1/pi
  else
    coeff /= 2;
  return PiRational(std::move(coeff), power);
}

PiRational stratum_volume(int k) {
  require_min_k(k, -1, "stratum_volume");
  BigRational coeff =
      2 * BigRational(double_factorial(k), double_factorial(k + 1));
  int power = k + 2;
  if (k % 2 != 0)
    power += 1;
  else
    coeff *= 2;
  return PiRational(std::move(coeff), power);
}

BigRational cyl1_contribution(const SeparatrixDiagram& d) {
  if (d.saddle_top < 1 || d.saddle_bottom < 1 || d.saddle_both < 0 ||
      d.dimension < 2 || d.aut_order < 1 || d.mu_factorials < 1)
    throw std::invalid_argument("cyl1_contribution: malformed diagram");
  BigRational value = BigRational(BigInt(1) << (d.saddle_both + 2), d.aut_order);
  value *= BigRational(factorial(d.saddle_top + d.saddle_bottom - 2),
                       factorial(d.saddle_top - 1) * factorial(d.saddle_bottom - 1));
  value *= BigRational(d.mu_factorials, factorial(d.dimension - 2));
  return value;
}

SeparatrixDiagram minimal_stratum_diagram(int k) {
  require_min_k(k, -1, "minimal_stratum_diagram");
  // k+4 poles (multiplicity (k+4)!) and one order-k zero (multiplicity 1!);
  // for k = 0 the "zero" is a marked regular point, still multiplicity one.
  return SeparatrixDiagram{
      .saddle_both = 0,
      .saddle_top = k + 2,
      .saddle_bottom = 1,
      .dimension = k + 3,
      .mu_factorials = factorial(k + 4),
      .aut_order = 2 * (k + 2),
  };
}

std::int64_t cyl1_diagram(int k) {
  return to_int64_exact(cyl1_contribution(minimal_stratum_diagram(k)), "cyl1_diagram");
}

std::int64_t cyl1_binomial(int k) {
  require_min_k(k, -1, "cyl1_binomial");
  return 2 * (binomial(k + 4, k + 2) + binomial(k + 4, 2));
}

PiRational delta1_as_ratio(int k) {
  return PiRational(BigRational(cyl1_diagram(k)), 0) / stratum_volume(k);
}

PiRational predicted_coefficient(int k_plus, int k_minus) {
  if (k_plus < 1 || k_minus < 1)
    throw std::domain_error("predicted_coefficient: lengths must be >= 1");
  if (k_plus == 1 && k_minus == 1)
    throw std::domain_error("predicted_coefficient: undefined for two single-block sides");
  const int power = k_plus + k_minus - 1;
  const BigRational scale(BigInt(power) * factorial(k_plus - 1) * factorial(k_minus - 1));
  const PiRational d = delta1(k_plus + k_minus - 4);
  return PiRational(d.coeff() / scale, d.pi_power());
}

double predicted_cumulative(int k_plus, int k_minus, double x) {
  if (x <= 0) throw std::domain_error("predicted_cumulative: x must be positive");
  return predicted_coefficient(k_plus, k_minus).to_double() *
         std::pow(x, k_plus + k_minus - 1);
}

double pair_count_main_term(int k_plus, int k_minus, double x) {
  if (k_plus < 1 || k_minus < 1)
    throw std::domain_error("pair_count_main_term: lengths must be >= 1");
  if (x <= 0) throw std::domain_error("pair_count_main_term: x must be positive");
  const int power = k_plus + k_minus - 1;
  const double scale = static_cast<double>(power) *
                       factorial(k_plus - 1).convert_to<double>() *
                       factorial(k_minus - 1).convert_to<double>();
  return std::pow(x, power) / scale;
}

DensityReport make_density_report(int k_plus, int k_minus, std::int64_t x,
                                  std::int64_t cumulative_count) {
  if (x < 1) throw std::domain_error("make_density_report: x must be >= 1");
  const double xd = static_cast<double>(x);
  const double measured =
      static_cast<double>(cumulative_count) / std::pow(xd, k_plus + k_minus - 1);
  const double predicted = predicted_coefficient(k_plus, k_minus).to_double();
  return DensityReport{k_plus, k_minus, x, measured, predicted, measured / predicted};
}

double delta1_large_k_ratio(int k) {
  if (k < 1) throw std::domain_error("delta1_large_k_ratio: k must be >= 1");
  const double log_delta = delta1(k).log();
  const double pi = std::numbers::pi;
  const double log_stirling =
      -0.5 * std::log(2.0 * std::pow(pi, 5)) - k * std::log(pi) + 2.5 * std::log(k);
  return std::exp(log_delta - log_stirling);
}

}  // namespace lieander
