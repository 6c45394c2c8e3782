#pragma once

#include <stdexcept>
#include <vector>

#include "gapcert/matrix.hpp"
#include "gapcert/polynomial.hpp"

namespace gapcert {

/// Negated non-leading coefficients of t^(2n+1) - a_{2n-2} t^(2n-2) - ... - a_0.
/// a[i] is a_i, i in [0, 2n-2].
struct PCoefficients {
  unsigned n = 0;
  std::int64_t h = 2;
  std::vector<mpz_class> a;

  friend bool operator==(const PCoefficients&, const PCoefficients&) = default;
};

/// Why a polynomial is not the characteristic polynomial of any member of B(n, h).
enum class PViolation { degree, monicity, zero_coefficient, range, divisibility };

const char* to_string(PViolation v);

class NotInFamilyError : public std::invalid_argument {
public:
  NotInFamilyError(PViolation v, const std::string& what) : std::invalid_argument(what), violation_(v) {}
  PViolation violation() const { return violation_; }

private:
  PViolation violation_;
};

/// Allowed set of a_i: multiples of step(i) in [0, step(i) * count(i) - 1].
struct CoefficientRange {
  mpz_class step;
  mpz_class count;
};

/// Range constraint on a_i for i in [0, 2n-2].
///   a_{2n-k} in [0, h^(k-1) - 1]               for k in [2, n+1]
///   a_{n-k} = h^(k-1) * m, m in [0, h^(n-k+1) - 1] for k in [2, n]
CoefficientRange coefficient_range(unsigned n, std::int64_t h, unsigned i);

/// Throws NotInFamilyError naming the first violated constraint.
PCoefficients poly_to_coeffs(const IntPolynomial& p, unsigned n, std::int64_t h);
bool in_family_image(const IntPolynomial& p, unsigned n, std::int64_t h);

IntPolynomial coeffs_to_poly(const PCoefficients& c);

/// Inverse of charpoly_structural: a_i is read in base h down the i-th
/// diagonal of [0 | A], row j (1-based) carrying weight h^(j-1).
BohemianSpec coeffs_to_spec(const PCoefficients& c);

}  // namespace gapcert
