#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gapcert/dyadic.hpp"
#include "gapcert/polynomial.hpp"

namespace gapcert {

/// Sturm chain of the square-free part of a polynomial: s0 = sqfree(p),
/// s1 = s0', s_{k+1} = -rem(s_{k-1}, s_k) up to positive factors.
class SturmChain {
public:
  explicit SturmChain(const IntPolynomial& p);

  const std::vector<IntPolynomial>& polys() const { return chain_; }
  const IntPolynomial& square_free() const { return chain_.front(); }

  /// Sign variations of the chain at x (zeros skipped).
  int variations(const Dyadic& x) const;

private:
  std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots in (lo, hi]. Requires lo < hi.
int sturm_count(const SturmChain& chain, const Dyadic& lo, const Dyadic& hi);

/// Half-open (lo, hi] holding exactly one distinct real root.
struct RootInterval {
  Dyadic lo;
  Dyadic hi;

  Dyadic width() const { return hi - lo; }
  friend bool operator==(const RootInterval&, const RootInterval&) = default;
};

/// Power of two >= 1 + max|c_i| / |lead|.
Dyadic cauchy_bound(const IntPolynomial& p);

/// All distinct real roots, sorted, inside (-C, C] with C = cauchy_bound.
std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p);

/// Shrinks `iv` by exact bisection until its width is <= eps. If a midpoint
/// is an exact root the result is (max(lo, r - eps), r].
RootInterval refine(const IntPolynomial& p, RootInterval iv, const Dyadic& eps);

struct GapCertificate {
  IntPolynomial polynomial;
  RootInterval left;
  RootInterval right;
  Dyadic gap_upper;  // right.hi - left.lo
  Dyadic gap_lower;  // right.lo - left.hi
  mpq_class claimed_bound;
  bool meets_claim = false;
};

class FewerThanTwoRootsError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class PrecisionCapError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Isolates every real root, then refines (eps = claimed/8, halving while
/// undecided) until some adjacent pair has gap_upper <= claimed, or every
/// adjacent pair has gap_lower > claimed. The reported pair has the smallest
/// gap_upper. Throws PrecisionCapError if eps drops below 2^cap_exponent.
GapCertificate min_gap_certificate(const IntPolynomial& p, const mpq_class& claimed,
                                   std::int64_t cap_exponent = -100000);

/// Keeps refining the reported pair of a certificate that meets its claim
/// until gap_upper < claimed_bound strictly. Throws PrecisionCapError if the
/// gap equals the claim to within 2^cap_exponent.
GapCertificate tighten_strict(GapCertificate cert, std::int64_t cap_exponent = -100000);

// ---------------------------------------------------------------------------
// Bounds

enum class ExplicitVariant { general, h2 };

/// 1 / h^((n+3)(n-3)/4), or 2^(-(n+5)(n-3)/4) for the h = 2 matrix. n odd >= 5.
mpq_class explicit_gap_bound(unsigned n, std::int64_t h, ExplicitVariant variant = ExplicitVariant::general);

/// 2 h^-(n-2).
mpq_class parlett_lu_bound(unsigned n, std::int64_t h);

/// Dyadic lower approximation of (2 sqrt(n) h)^(-n(n-1)), relative error <= 2^-64.
Dyadic mahler_lower_bound(unsigned n, std::int64_t h);

/// ceil(2^n (sqrt(n) h)^n).
mpz_class hadamard_height_bound(unsigned n, const mpz_class& h);

}  // namespace gapcert
