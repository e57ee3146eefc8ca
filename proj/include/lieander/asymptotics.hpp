#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lieander {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Exact value coeff * pi^pi_power. Multiplication, division and equality
/// are exact; floats are produced only at the boundary. Zero is canonical
/// (pi_power = 0), so default equality is value equality.
class PiRational {
public:
  PiRational() = default;
  PiRational(BigRational coeff, int pi_power);

  const BigRational& coeff() const { return coeff_; }
  int pi_power() const { return pi_power_; }
  bool is_zero() const { return coeff_ == 0; }

  PiRational operator*(const PiRational& rhs) const;
  PiRational operator/(const PiRational& rhs) const;  // throws on zero divisor
  bool operator==(const PiRational&) const = default;

  double to_double() const;

  /// Natural log of the (positive) value; exact-rational inputs of any size.
  /// Throws std::domain_error unless the value is positive.
  double log() const;

  std::string to_string() const;  // e.g. "45/2 * pi^-4"

private:
  BigRational coeff_ = 0;
  int pi_power_ = 0;
};

/// m!! with (-1)!! = 0!! = 1; throws std::domain_error for m < -1.
BigInt double_factorial(int m);

/// The asymptotic density of lieanders among composition pairs with
/// k = k_plus + k_minus - 4:
///   delta1(k) = (k+4)(k+3) * (k+1)!!/k!! * pi^-(k+2) * (1/pi odd, 1/2 even),
/// with k = -1 on the odd branch. Domain: k >= -1.
PiRational delta1(int k);

/// Vol Q(k, -1^(k+4)) = 2 pi^(k+2) * k!!/(k+1)!! * (pi odd, 2 even).
/// Domain: k >= -1.
PiRational stratum_volume(int k);

/// A one-cylinder separatrix diagram, described by the parameters of the
/// volume-contribution formula
///   cyl1(D) = 2^(s+2)/|Aut(D)|
///           * (t+u-2)!/((t-1)!(u-1)!) * (mu_-1)!(mu_1)!... / (d-2)!.
struct SeparatrixDiagram {
  int saddle_both;     // s: saddle connections bordering the cylinder twice
                       //    on top and twice on bottom
  int saddle_top;      // t: saddle connections twice on top
  int saddle_bottom;   // u: saddle connections twice on bottom
  int dimension;       // d: dimension of the stratum
  BigInt mu_factorials;  // product of factorials of the multiplicities of
                         // the singularity orders
  int aut_order;       // |Aut(D)|
};

/// Evaluates the formula above; exact rational.
BigRational cyl1_contribution(const SeparatrixDiagram& d);

/// The unique one-cylinder diagram of Q(k, -1^(k+4)): a cycle of k+2 stalk
/// edges on top, one bottom edge, s = 0, dimension k+3, singularity
/// multiplicities (k+4) poles + 1 zero, and 2(k+2) automorphisms (stalk
/// rotations times the flip). Domain: k >= -1.
SeparatrixDiagram minimal_stratum_diagram(int k);

/// cyl1 of Q(k, -1^(k+4)) via cyl1_contribution(minimal_stratum_diagram(k));
/// equals 2(k+4)(k+3). Domain: k >= -1.
std::int64_t cyl1_diagram(int k);

/// The same count via the genus-0 binomial sum 2(C(k+4,k+2) + C(k+4,2)).
/// Domain: k >= -1 (the value at -1 extrapolates the sum below the stated
/// range of the identity and matches the diagram formula).
std::int64_t cyl1_binomial(int k);

/// cyl1_diagram(k) / stratum_volume(k); equal to delta1(k) exactly.
PiRational delta1_as_ratio(int k);

/// Coefficient of x^(k_plus+k_minus-1) in the predicted cumulative count:
///   delta1(k_plus+k_minus-4) / ((k_plus+k_minus-1)(k_plus-1)!(k_minus-1)!).
/// Domain: k_plus, k_minus >= 1, not both 1.
PiRational predicted_coefficient(int k_plus, int k_minus);

/// The main term itself: predicted_coefficient * x^(k_plus+k_minus-1).
double predicted_cumulative(int k_plus, int k_minus, double x);

/// The composition-pair main term x^(k_plus+k_minus-1) /
/// ((k_plus+k_minus-1)(k_plus-1)!(k_minus-1)!), i.e. the denominator count
/// whose lieander fraction tends to delta1.
double pair_count_main_term(int k_plus, int k_minus, double x);

/// Measured vs. predicted cumulative density at cutoff x.
struct DensityReport {
  int k_plus;
  int k_minus;
  std::int64_t x;
  double measured;   // S(x) / x^(k_plus+k_minus-1)
  double predicted;  // the limit coefficient
  double ratio;      // measured / predicted
};

DensityReport make_density_report(int k_plus, int k_minus, std::int64_t x,
                                  std::int64_t cumulative_count);

/// delta1(k) divided by its Stirling-form approximation
/// (1/sqrt(2 pi^5)) * pi^-k * k^(5/2); tends to 1 from above. Domain: k >= 1.
double delta1_large_k_ratio(int k);

}  // namespace lieander
