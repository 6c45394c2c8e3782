#include "gapcert/bijection.hpp"

#include <string>

namespace gapcert {

const char* to_string(PViolation v) {
  switch (v) {
    case PViolation::degree: return "degree";
    case PViolation::monicity: return "monicity";
    case PViolation::zero_coefficient: return "zero-coefficient";
    case PViolation::range: return "range";
    case PViolation::divisibility: return "divisibility";
  }
  return "unknown";
}

CoefficientRange coefficient_range(unsigned n, std::int64_t h, unsigned i) {
  if (n < 1 || i > 2 * n - 2) throw std::invalid_argument("coefficient_range: index out of range");
  const mpz_class hh(h);
  if (i >= n - 1) {
    unsigned k = 2 * n - i;
    return {mpz_class(1), ipow(hh, k - 1)};
  }
  unsigned k = n - i;
  return {ipow(hh, k - 1), ipow(hh, n - k + 1)};
}

PCoefficients poly_to_coeffs(const IntPolynomial& p, unsigned n, std::int64_t h) {
  if (n < 1 || h < 2) throw std::invalid_argument("poly_to_coeffs: need n >= 1 and h >= 2");
  const long dim = 2L * n + 1;
  if (p.degree() != dim)
    throw NotInFamilyError(PViolation::degree, "expected degree " + std::to_string(dim) + ", got " + std::to_string(p.degree()));
  if (!p.is_monic()) throw NotInFamilyError(PViolation::monicity, "polynomial is not monic");
  if (p.coeff(2 * n) != 0 || p.coeff(2 * n - 1) != 0)
    throw NotInFamilyError(PViolation::zero_coefficient, "coefficients of t^(2n) and t^(2n-1) must vanish");

  PCoefficients out{n, h, std::vector<mpz_class>(2 * n - 1)};
  for (unsigned i = 0; i + 1 < 2 * n; ++i) {
    mpz_class a = -p.coeff(i);
    CoefficientRange r = coefficient_range(n, h, i);
    if (!mpz_divisible_p(a.get_mpz_t(), r.step.get_mpz_t()))
      throw NotInFamilyError(PViolation::divisibility,
                             "a_" + std::to_string(i) + " = " + a.get_str() + " is not a multiple of " + r.step.get_str());
    mpz_class m;
    mpz_divexact(m.get_mpz_t(), a.get_mpz_t(), r.step.get_mpz_t());
    if (m < 0 || m >= r.count)
      throw NotInFamilyError(PViolation::range, "a_" + std::to_string(i) + " = " + a.get_str() + " is outside its range");
    out.a[i] = a;
  }
  return out;
}

bool in_family_image(const IntPolynomial& p, unsigned n, std::int64_t h) {
  try {
    poly_to_coeffs(p, n, h);
    return true;
  } catch (const NotInFamilyError&) {
    return false;
  }
}

IntPolynomial coeffs_to_poly(const PCoefficients& c) {
  std::vector<mpz_class> v(2 * c.n + 2, mpz_class(0));
  v.back() = 1;
  for (std::size_t i = 0; i < c.a.size(); ++i) v[i] = -c.a[i];
  return IntPolynomial(std::move(v));
}

BohemianSpec coeffs_to_spec(const PCoefficients& c) {
  const long n = c.n;
  if (c.a.size() != static_cast<std::size_t>(2 * n - 1)) throw std::invalid_argument("coeffs_to_spec: wrong coefficient count");
  BohemianSpec s = BohemianSpec::zero(c.n, c.h);
  const mpz_class h(c.h);
  for (long i = 0; i <= 2 * n - 2; ++i) {
    mpz_class rest = c.a[static_cast<std::size_t>(i)];
    if (rest < 0) throw std::logic_error("coeffs_to_spec: negative coefficient");
    // D = [0 | A] is n x (2n-1); diagonal i holds D(j, j+i), 1-based.
    for (long j = 1; j <= n && rest != 0; ++j) {
      mpz_class digit;
      mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), h.get_mpz_t());
      long col = j + i;  // 1-based column of D
      if (digit == 0) continue;
      if (col > 2 * n - 1 || col < n)
        throw std::logic_error("coeffs_to_spec: digit falls outside the block");
      s.a[static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(col - n)] = digit.get_si();
    }
    if (rest != 0) throw std::logic_error("coeffs_to_spec: coefficient does not fit its diagonal");
  }
  return s;
}

}  // namespace gapcert
