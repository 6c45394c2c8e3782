#include "gapcert/matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gapcert {

IntMatrix IntMatrix::identity(std::size_t dim) {
  IntMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m.at(i, i) = 1;
  return m;
}

mpz_class IntMatrix::height() const {
  mpz_class h = 0;
  for (const auto& x : e_)
    if (abs(x) > h) h = abs(x);
  return h;
}

bool IntMatrix::is_symmetric() const {
  for (std::size_t r = 0; r < dim_; ++r)
    for (std::size_t c = r + 1; c < dim_; ++c)
      if (at(r, c) != at(c, r)) return false;
  return true;
}

mpz_class IntMatrix::trace() const {
  mpz_class s = 0;
  for (std::size_t i = 0; i < dim_; ++i) s += at(i, i);
  return s;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("matrix product: dimension mismatch");
  const std::size_t n = a.dim_;
  IntMatrix r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const mpz_class& x = a.at(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < n; ++j) r.at(i, j) += x * b.at(k, j);
    }
  return r;
}

std::string IntMatrix::to_text() const {
  std::string s = std::to_string(dim_) + "\n";
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c < dim_; ++c) {
      if (c) s += ' ';
      s += at(r, c).get_str();
    }
    s += '\n';
  }
  return s;
}

IntMatrix IntMatrix::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  long dim = 0;
  if (!(in >> dim) || dim <= 0) throw std::invalid_argument("matrix text: bad dimension");
  IntMatrix m(static_cast<std::size_t>(dim));
  std::string tok;
  for (std::size_t i = 0; i < m.e_.size(); ++i) {
    if (!(in >> tok)) throw std::invalid_argument("matrix text: too few entries");
    if (m.e_[i].set_str(tok, 10) != 0) throw std::invalid_argument("matrix text: bad entry '" + tok + "'");
  }
  if (in >> tok) throw std::invalid_argument("matrix text: trailing data");
  return m;
}

mpz_class determinant(IntMatrix m) {
  const std::size_t n = m.dim();
  if (n == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && m.at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(m.at(k, c), m.at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

IntPolynomial charpoly_oracle(const IntMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<mpz_class> diffs(n + 1);
  for (std::size_t x = 0; x <= n; ++x) {
    IntMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) c.at(i, j) = -m.at(i, j);
    for (std::size_t i = 0; i < n; ++i) c.at(i, i) += static_cast<unsigned long>(x);
    diffs[x] = determinant(std::move(c));
  }
  // forward differences in place: diffs[k] becomes Delta^k f(0)
  for (std::size_t k = 1; k <= n; ++k)
    for (std::size_t i = n; i >= k; --i) diffs[i] -= diffs[i - 1];

  // Newton form p(x) = sum_k (Delta^k f(0) / k!) x(x-1)...(x-k+1)
  mpz_class fact = 1;
  for (std::size_t k = 0; k <= n; ++k) {
    if (k > 0) fact *= static_cast<unsigned long>(k);
    if (!mpz_divisible_p(diffs[k].get_mpz_t(), fact.get_mpz_t()))
      throw std::logic_error("charpoly_oracle: inexact interpolation division");
    mpz_divexact(diffs[k].get_mpz_t(), diffs[k].get_mpz_t(), fact.get_mpz_t());
  }
  IntPolynomial p = IntPolynomial::constant(diffs[n]);
  for (std::size_t k = n; k-- > 0;) {
    p = p * IntPolynomial{-static_cast<long>(k), 1} + IntPolynomial::constant(diffs[k]);
  }
  if (p.degree() != static_cast<long>(n) || !p.is_monic())
    throw std::logic_error("charpoly_oracle: interpolated polynomial is not monic of full degree");
  return p;
}

bool newton_check(const IntMatrix& m, std::size_t max_dim) {
  const std::size_t n = m.dim();
  if (n > max_dim) throw std::invalid_argument("newton_check: dimension exceeds limit");
  IntPolynomial p = charpoly_oracle(m);
  const auto& c = p.coeffs();
  std::vector<mpz_class> traces(n + 1);
  IntMatrix power = m;
  for (std::size_t j = 1; j <= n; ++j) {
    if (j > 1) power = power * m;
    traces[j] = power.trace();
  }
  for (std::size_t k = 1; k <= n; ++k) {
    mpz_class s = traces[k];
    for (std::size_t i = 1; i < k; ++i) s += c[n - i] * traces[k - i];
    s += static_cast<unsigned long>(k) * c[n - k];
    if (s != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

BohemianSpec BohemianSpec::zero(unsigned n, std::int64_t h) {
  BohemianSpec s;
  s.n = n;
  s.h = h;
  s.a.assign(n, std::vector<std::int64_t>(n, 0));
  return s;
}

void BohemianSpec::validate() const {
  if (n < 1) throw std::invalid_argument("BohemianSpec: n must be positive");
  if (h < 2) throw std::invalid_argument("BohemianSpec: h must be at least 2");
  if (a.size() != n) throw std::invalid_argument("BohemianSpec: block must have n rows");
  for (const auto& row : a) {
    if (row.size() != n) throw std::invalid_argument("BohemianSpec: block must have n columns");
    for (auto v : row)
      if (v < 0 || v >= h) throw std::invalid_argument("BohemianSpec: block entry outside [0, h-1]");
  }
}

IntMatrix build_bohemian(const BohemianSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n;
  IntMatrix m(2 * n + 1);
  for (std::size_t r = 0; r < 2 * n; ++r) m.at(r, r + 1) = r <= n ? 1 : spec.h;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(n + 1 + r, c) = spec.a[r][c];
  return m;
}

IntPolynomial charpoly_structural(const BohemianSpec& spec) {
  spec.validate();
  const long n = spec.n;
  std::vector<mpz_class> a(static_cast<std::size_t>(2 * n - 1), mpz_class(0));
  for (long i = 1; i <= n; ++i) {
    mpz_class w = ipow(mpz_class(spec.h), static_cast<unsigned long>(i - 1));
    for (long j = -n; j <= -1; ++j) {
      std::int64_t b = spec.a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j + n)];
      if (b == 0) continue;
      long k = 2 * n - (i - j);
      a[static_cast<std::size_t>(k)] += b * w;
    }
  }
  std::vector<mpz_class> c(static_cast<std::size_t>(2 * n + 2), mpz_class(0));
  c.back() = 1;
  for (std::size_t k = 0; k < a.size(); ++k) c[k] = -a[k];
  return IntPolynomial(std::move(c));
}

std::optional<BohemianSpec> spec_from_matrix(const IntMatrix& m) {
  const std::size_t dim = m.dim();
  if (dim < 3 || dim % 2 == 0) return std::nullopt;
  const std::size_t n = (dim - 1) / 2;
  BohemianSpec s = BohemianSpec::zero(static_cast<unsigned>(n), 2);
  mpz_class max_a = 0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const mpz_class& v = m.at(n + 1 + r, c);
      if (v < 0 || !v.fits_slong_p()) return std::nullopt;
      if (v > max_a) max_a = v;
    }
  mpz_class h = n >= 2 ? m.at(n + 1, n + 2) : std::max(mpz_class(2), mpz_class(max_a + 1));
  if (h < 2 || !h.fits_slong_p() || max_a >= h) return std::nullopt;
  s.h = h.get_si();
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) s.a[r][c] = m.at(n + 1 + r, c).get_si();
  if (build_bohemian(s) != m) return std::nullopt;
  return s;
}

// ---------------------------------------------------------------------------

namespace {

// 1-based assignment, matching the way the constructions are written down
void set1(IntMatrix& m, std::size_t row, std::size_t col, long v) { m.at(row - 1, col - 1) = v; }

void check_odd_n(unsigned n, const char* who) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument(std::string(who) + ": n must be odd and at least 3");
}

IntMatrix mignotte_frame(unsigned n, std::int64_t h) {
  IntMatrix m(2 * n + 1);
  for (std::size_t i = 1; i <= 2 * n; ++i) set1(m, i, i + 1, i <= n + 1 ? 1 : h);
  return m;
}

}  // namespace

IntMatrix build_mignotte_h2(unsigned n) {
  check_odd_n(n, "build_mignotte_h2");
  IntMatrix m = mignotte_frame(n, 2);
  set1(m, n + 3, 1, 1);
  set1(m, (3 * n + 3) / 2, (n + 1) / 2, 2);
  set1(m, 2 * n, n, 1);
  return m;
}

IntMatrix build_mignotte_h2_in_family(unsigned n) {
  check_odd_n(n, "build_mignotte_h2_in_family");
  IntMatrix m = mignotte_frame(n, 2);
  set1(m, n + 3, 1, 1);
  set1(m, (3 * n + 5) / 2, (n + 3) / 2, 1);
  set1(m, 2 * n, n, 1);
  return m;
}

BohemianSpec mignotte_h2_in_family_spec(unsigned n) {
  check_odd_n(n, "mignotte_h2_in_family_spec");
  // 1-based matrix row R is block row R - n - 2; column C is block column C - 1
  BohemianSpec s = BohemianSpec::zero(n, 2);
  s.a[1][0] = 1;
  s.a[(3 * n + 5) / 2 - n - 2][(n + 3) / 2 - 1] = 1;
  s.a[n - 2][n - 1] = 1;
  return s;
}

GeneralMignotte build_mignotte(unsigned n, std::int64_t h) {
  check_odd_n(n, "build_mignotte");
  if (h < 3) throw std::invalid_argument("build_mignotte: h must be at least 3");
  GeneralMignotte g{mignotte_frame(n, h), h < 4};
  set1(g.matrix, n + 2, 2, 2);
  set1(g.matrix, (3 * n + 1) / 2, (n + 3) / 2, 4);
  set1(g.matrix, 2 * n - 1, n + 1, 2);
  return g;
}

IntMatrix double_cover(const IntMatrix& m) {
  const std::size_t n = m.dim();
  IntMatrix c(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const mpz_class& v = m.at(i, j);
      if (v == 0) continue;
      if (v == 1) {
        c.at(2 * i, 2 * j) = 1;
        c.at(2 * i + 1, 2 * j + 1) = 1;
      } else if (v == 2) {
        for (std::size_t a = 0; a < 2; ++a)
          for (std::size_t b = 0; b < 2; ++b) c.at(2 * i + a, 2 * j + b) = 1;
      } else {
        throw std::invalid_argument("double_cover: entries must be 0, 1 or 2");
      }
    }
  return c;
}

IntMatrix build_wilkinson(unsigned n, std::int64_t h) {
  if (n < 3) throw std::invalid_argument("build_wilkinson: n must be at least 3");
  if (h < 2) throw std::invalid_argument("build_wilkinson: h must be at least 2");
  IntMatrix m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) m.at(i, i + 1) = m.at(i + 1, i) = 1;
  m.at(0, 0) = h;
  m.at(n - 1, n - 1) = h;
  return m;
}

}  // namespace gapcert
