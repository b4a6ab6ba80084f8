#pragma once

// Exact scalars: Q(zeta_m) in the power basis modulo Phi_m, and polynomials in
// the formal Cherednik parameters with cyclotomic coefficients.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace cherednik {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense integer polynomial, coefficient of z^k at index k.
using IntPoly = std::vector<Integer>;

// Phi_m, by exact division of z^m - 1 by Phi_d for the proper divisors d | m.
const IntPoly& cyclotomic_polynomial(int m);

int euler_phi(int m);

// Element of Q(zeta_m), stored in canonical power-basis coordinates.
class CycRational {
 public:
  // Zero of Q (conductor 1). Conductor-1 values promote to any conductor.
  CycRational();
  CycRational(long value);  // NOLINT(google-explicit-constructor)
  explicit CycRational(Rational value, int m = 1);
  // Reduces an arbitrary-length coefficient vector mod Phi_m.
  CycRational(int m, const std::vector<Rational>& coeffs);

  static CycRational zeta_power(int m, long k);

  int conductor() const noexcept { return m_; }
  const std::vector<Rational>& coords() const noexcept { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  // True when only the constant coordinate may be nonzero.
  bool is_rational() const;
  const Rational& constant_term() const { return coeffs_[0]; }

  CycRational inverse() const;
  CycRational promoted(int m) const;

  CycRational& operator+=(const CycRational& other);
  CycRational& operator-=(const CycRational& other);
  CycRational& operator*=(const CycRational& other);
  CycRational& operator/=(const CycRational& other);
  CycRational operator-() const;

  friend CycRational operator+(CycRational a, const CycRational& b) { return a += b; }
  friend CycRational operator-(CycRational a, const CycRational& b) { return a -= b; }
  friend CycRational operator*(CycRational a, const CycRational& b) { return a *= b; }
  friend CycRational operator/(CycRational a, const CycRational& b) { return a /= b; }

  // Values of different conductor compare equal only when both are rational.
  friend bool operator==(const CycRational& a, const CycRational& b);

  // Human-readable form, e.g. "1/2 + 3*z"; z = zeta_m.
  std::string to_string() const;

 private:
  int m_ = 1;
  std::vector<Rational> coeffs_;
};

CycRational cyc_invert(const CycRational& a);
std::ostream& operator<<(std::ostream& os, const CycRational& a);

// Parameter index: 0 is c1 (the s_ij class), k >= 1 is c[k], the parameter
// attached to the class of t_i^(zeta_{m/p}^k).
using ParamIndex = int;
std::string parameter_name(ParamIndex index);

// Exponent vector over parameter indices, trailing zeros trimmed.
using ParamMonomial = std::vector<std::uint16_t>;

class ParamScalar {
 public:
  using Terms = std::map<ParamMonomial, CycRational>;

  ParamScalar() = default;
  ParamScalar(const CycRational& constant);  // NOLINT(google-explicit-constructor)
  ParamScalar(long constant);                // NOLINT(google-explicit-constructor)

  static ParamScalar parameter(ParamIndex index);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  CycRational constant_term() const;
  // Largest parameter index that occurs, or -1.
  int max_parameter() const;

  ParamScalar& operator+=(const ParamScalar& other);
  ParamScalar& operator-=(const ParamScalar& other);
  ParamScalar& operator*=(const ParamScalar& other);
  ParamScalar& operator*=(const CycRational& c);
  ParamScalar operator-() const;

  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  friend ParamScalar operator*(ParamScalar a, const CycRational& c) { return a *= c; }
  friend ParamScalar operator*(const CycRational& c, ParamScalar a) { return a *= c; }

  friend bool operator==(const ParamScalar& a, const ParamScalar& b) = default;

  // Substitutes each parameter by a ParamScalar (ring homomorphism).
  ParamScalar substitute(const std::function<ParamScalar(ParamIndex)>& image) const;

  std::string to_string() const;

 private:
  void add_term(const ParamMonomial& mono, const CycRational& coeff);

  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const ParamScalar& s);

// One summand q * z^k * (parameter monomial) of the fully expanded form.
struct ScalarSummand {
  Rational q;
  int zeta_exponent = 0;
  ParamMonomial monomial;
};

// Expansion in the order: parameter monomial, then power of z.
std::vector<ScalarSummand> expand(const ParamScalar& s);

// Formats "|q|*z^k*c1^2" without the sign; empty string for the unit summand.
std::string format_unsigned_summand(const ScalarSummand& summand);

// Joins coefficient * letters pairs into "a*w1 - c1*w2 + ...", expanding every
// coefficient into its summands. Empty letters stand for the unit.
std::string format_linear_combination(const std::vector<std::pair<ParamScalar, std::string>>& parts);

using ParamAssignment = std::map<ParamIndex, CycRational>;

// Throws MissingParameter if some occurring parameter is unassigned.
CycRational specialize(const ParamScalar& s, const ParamAssignment& assignment);

}  // namespace cherednik
