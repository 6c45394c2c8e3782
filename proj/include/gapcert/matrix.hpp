#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "gapcert/polynomial.hpp"

namespace gapcert {

/// Dense square matrix of arbitrary-precision integers, row-major, 0-based.
class IntMatrix {
public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t dim) : dim_(dim), e_(dim * dim, mpz_class(0)) {}
  static IntMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  mpz_class& at(std::size_t r, std::size_t c) { return e_[r * dim_ + c]; }
  const mpz_class& at(std::size_t r, std::size_t c) const { return e_[r * dim_ + c]; }

  /// Max absolute entry.
  mpz_class height() const;
  bool is_symmetric() const;
  mpz_class trace() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  /// First line `dim`, then one line of space-separated entries per row.
  std::string to_text() const;
  static IntMatrix from_text(std::string_view text);

private:
  std::size_t dim_ = 0;
  std::vector<mpz_class> e_;
};

/// Fraction-free (Bareiss) determinant.
mpz_class determinant(IntMatrix m);

/// det(tI - M) by exact determinants at dim+1 integer points followed by
/// Newton interpolation. Throws std::logic_error if an interpolation
/// division is inexact or the result is not monic of degree dim.
IntPolynomial charpoly_oracle(const IntMatrix& m);

/// True iff Newton's identities hold between charpoly_oracle(m) and the
/// exact power traces Tr(m^j), j = 1..dim. Rejects dim > max_dim.
bool newton_check(const IntMatrix& m, std::size_t max_dim = 64);

// ---------------------------------------------------------------------------
// The family B(n, h)

/// Parameters of one member of B(n, h).
///
/// Labels run over [-n, n]; label i lives at 0-based index i + n.
/// `a` is the lower-left n x n block: a[r][c] sits at label row r + 1 and
/// label column c - n, i.e. matrix index (n + 1 + r, c).
struct BohemianSpec {
  unsigned n = 0;
  std::int64_t h = 2;
  std::vector<std::vector<std::int64_t>> a;

  static BohemianSpec zero(unsigned n, std::int64_t h);
  /// Throws std::invalid_argument on shape errors or entries outside [0, h-1].
  void validate() const;

  friend bool operator==(const BohemianSpec&, const BohemianSpec&) = default;
};

IntMatrix build_bohemian(const BohemianSpec& spec);

/// t^(2n+1) - sum_k a_k t^k with a_k = sum_{i - j = 2n - k} B_{i,j} h^(i-1)
/// over label rows i in [1, n] and label columns j in [-n, -1].
IntPolynomial charpoly_structural(const BohemianSpec& spec);

/// Recovers the spec from a matrix of B shape, or nullopt if `m` is not in B
/// for any h >= 2.
std::optional<BohemianSpec> spec_from_matrix(const IntMatrix& m);

// ---------------------------------------------------------------------------
// Small-gap constructions. Positions are documented with 1-based (row, col).

/// (2n+1)-square, superdiagonal n+1 ones then n-1 twos, with
/// M(n+3, 1) = 1, M((3n+3)/2, (n+1)/2) = 2, M(2n, n) = 1. n odd, n >= 3.
IntMatrix build_mignotte_h2(unsigned n);

/// Same as build_mignotte_h2 with the middle 2 replaced by a 1 at
/// ((3n+5)/2, (n+3)/2). This matrix lies in B(n, 2).
IntMatrix build_mignotte_h2_in_family(unsigned n);
BohemianSpec mignotte_h2_in_family_spec(unsigned n);

struct GeneralMignotte {
  IntMatrix matrix;
  /// The entry 4 exceeds h when h = 3.
  bool height_violation = false;
};

/// (2n+1)-square, superdiagonal n+1 ones then n-1 h's, with
/// M(n+2, 2) = 2, M((3n+1)/2, (n+3)/2) = 4, M(2n-1, n+1) = 2. n odd >= 3, h >= 3.
GeneralMignotte build_mignotte(unsigned n, std::int64_t h);

/// 0 -> zero block, 1 -> identity block, 2 -> all-ones block.
IntMatrix double_cover(const IntMatrix& m);

/// Symmetric tridiagonal, ones off the diagonal, diagonal (h, 0, ..., 0, h).
IntMatrix build_wilkinson(unsigned n, std::int64_t h);

}  // namespace gapcert
