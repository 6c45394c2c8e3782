#pragma once

#include <cstdint>
#include <vector>

#include "gapcert/polynomial.hpp"

namespace gapcert {

/// Polynomial over F_q for a small prime q, coefficients low-to-high in [0, q-1].
class ModPolynomial {
public:
  ModPolynomial(std::uint32_t modulus, std::vector<std::uint32_t> coeffs);

  std::uint32_t modulus() const { return q_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const ModPolynomial&, const ModPolynomial&) = default;

private:
  std::uint32_t q_;
  std::vector<std::uint32_t> c_;
};

/// Coefficientwise reduction into [0, q-1]. q must be prime and < 2^31.
ModPolynomial reduce_mod(const IntPolynomial& p, std::uint32_t q);

/// Deterministic irreducibility test over F_q (Rabin): p | t^(q^d) - t and
/// gcd(p, t^(q^(d/r)) - t) = 1 for every prime r | d. p must be monic, degree >= 1.
bool irreducible_mod_p(const ModPolynomial& p);

namespace modarith {

using Coeffs = std::vector<std::uint32_t>;

void trim(Coeffs& a);
Coeffs sub(const Coeffs& a, const Coeffs& b, std::uint32_t q);
Coeffs mul(const Coeffs& a, const Coeffs& b, std::uint32_t q);
/// a mod b, b nonzero.
Coeffs rem(const Coeffs& a, const Coeffs& b, std::uint32_t q);
/// Monic gcd.
Coeffs gcd(Coeffs a, Coeffs b, std::uint32_t q);
std::uint32_t inverse(std::uint32_t a, std::uint32_t q);

}  // namespace modarith

}  // namespace gapcert
