#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace gapcert {

/// Exact number of the form mantissa * 2^exponent.
///
/// Always canonical: the mantissa is odd, or zero with exponent 0. Two
/// dyadics are equal iff their (mantissa, exponent) pairs are equal.
class Dyadic {
public:
  Dyadic() = default;
  Dyadic(mpz_class mantissa, std::int64_t exponent);
  explicit Dyadic(long value) : Dyadic(mpz_class(value), 0) {}

  static Dyadic pow2(std::int64_t e) { return Dyadic(mpz_class(1), e); }

  /// Largest dyadic <= q with at least `bits` significant bits (exact if q is dyadic).
  static Dyadic floor_of(const mpq_class& q, unsigned bits = 64);
  /// Smallest dyadic >= q with at least `bits` significant bits (exact if q is dyadic).
  static Dyadic ceil_of(const mpq_class& q, unsigned bits = 64);
  /// Largest power of two <= q. q must be positive.
  static Dyadic pow2_floor(const mpq_class& q);

  /// True iff q is exactly representable as a dyadic.
  static bool is_dyadic(const mpq_class& q);

  const mpz_class& mantissa() const { return mant_; }
  std::int64_t exponent() const { return exp_; }
  int sign() const { return sgn(mant_); }
  bool is_zero() const { return mant_ == 0; }

  mpq_class to_mpq() const;

  /// Returns num/den with den a power of two, den >= 1.
  void as_fraction(mpz_class& num, mpz_class& den) const;

  /// "m*2^e", e.g. "3*2^-5", "0*2^0".
  std::string str() const;
  static Dyadic parse(std::string_view text);

  Dyadic operator-() const { return Dyadic(-mant_, exp_); }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  Dyadic scaled(std::int64_t shift) const { return Dyadic(mant_, exp_ + shift); }

  friend bool operator==(const Dyadic& a, const Dyadic& b) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

  friend Dyadic midpoint(const Dyadic& a, const Dyadic& b) { return (a + b).scaled(-1); }

private:
  mpz_class mant_{0};
  std::int64_t exp_{0};
};

int compare(const Dyadic& a, const mpq_class& q);

std::string rational_str(const mpq_class& q);

}  // namespace gapcert
