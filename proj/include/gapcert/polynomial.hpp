#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gapcert/dyadic.hpp"

namespace gapcert {

/// Dense univariate polynomial over the integers.
///
/// Coefficients are stored low-to-high: coeffs()[i] multiplies t^i. The
/// sequence is always trimmed, so the zero polynomial is empty and
/// degree() == size() - 1 otherwise.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<mpz_class> coeffs);
  IntPolynomial(std::initializer_list<long> coeffs);

  static IntPolynomial constant(const mpz_class& c);
  /// c * t^k
  static IntPolynomial monomial(const mpz_class& c, std::size_t k);

  const std::vector<mpz_class>& coeffs() const { return c_; }
  /// Coefficient of t^i (zero beyond the degree).
  mpz_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpz_class(0); }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const mpz_class& leading() const;
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  /// Max absolute coefficient.
  mpz_class height() const;
  /// Non-negative gcd of the coefficients (0 for the zero polynomial).
  mpz_class content() const;
  /// p / content(p), normalized to a positive leading coefficient.
  IntPolynomial primitive_part() const;

  IntPolynomial derivative() const;
  /// p(-t).
  IntPolynomial compose_neg() const;
  /// p * t^k
  IntPolynomial shifted(std::size_t k) const;
  /// Largest k with t^k | p (0 for the zero polynomial).
  std::size_t t_valuation() const;
  /// p / t^t_valuation(p).
  IntPolynomial strip_t_power() const;

  mpz_class eval(const mpz_class& x) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const mpz_class& s, const IntPolynomial& a);
  IntPolynomial operator-() const;

  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) = default;

  /// `deg c0 c1 ... cdeg`; the zero polynomial is written as `-1`.
  std::string to_text() const;
  static IntPolynomial from_text(std::string_view line);
  /// High-to-low human form, e.g. "t^5 - t^2 - 2".
  std::string pretty(char var = 't') const;

private:
  void trim();
  std::vector<mpz_class> c_;
};

/// Sign of p(num/den), evaluated exactly through the homogenized sum
/// sum_i c_i num^i den^(deg-i). den must be positive.
int eval_sign_at_rational(const IntPolynomial& p, const mpz_class& num, const mpz_class& den);
int eval_sign_at(const IntPolynomial& p, const Dyadic& x);

/// lc(b)^(deg a - deg b + 1) * a = q * b + r. b must be nonzero.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// a / b when the quotient exists in Z[t] and the remainder is zero.
std::optional<IntPolynomial> divide_exact(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd over Q with positive leading coefficient, from the
/// primitive pseudo-remainder sequence. gcd(0, 0) is rejected.
IntPolynomial rational_gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), primitive.
IntPolynomial square_free_part(const IntPolynomial& p);

/// X^d - 2(aX - 1)^2 = X^d - 2a^2 X^2 + 4a X - 2. Requires d >= 3, a >= 1.
IntPolynomial mignotte_poly(unsigned d, const mpz_class& a);

/// a^(-(d+2)/2) for even d.
struct MignotteBound {
  mpq_class exact;
  /// Equal to `exact` when a is a power of two, otherwise an upper
  /// approximation with relative error at most 2^-64.
  Dyadic dyadic_upper;
  bool dyadic_is_exact = false;
};
MignotteBound mignotte_gap_bound(unsigned d, const mpz_class& a);

/// Eisenstein's criterion at `prime`. A false result means the criterion is
/// silent, never that p is reducible.
bool eisenstein_irreducible(const IntPolynomial& p, const mpz_class& prime);

mpz_class ipow(const mpz_class& base, unsigned long e);

}  // namespace gapcert
