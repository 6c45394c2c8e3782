#include "gapcert/rootgap.hpp"

#include <algorithm>
#include <functional>

namespace gapcert {

namespace {

IntPolynomial divide_by_positive_content(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  mpz_class g = p.content();
  std::vector<mpz_class> v(p.coeffs().size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(v[i].get_mpz_t(), p.coeffs()[i].get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(v));
}

}  // namespace

SturmChain::SturmChain(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("SturmChain: zero polynomial");
  chain_.push_back(square_free_part(p));
  if (chain_.front().degree() < 1) return;
  chain_.push_back(divide_by_positive_content(chain_.front().derivative()));
  for (;;) {
    const IntPolynomial& a = chain_[chain_.size() - 2];
    const IntPolynomial& b = chain_.back();
    IntPolynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^delta * rem; Sturm needs -rem up to a positive factor
    long delta = a.degree() - b.degree() + 1;
    bool multiplier_negative = b.leading() < 0 && delta % 2 != 0;
    IntPolynomial next = divide_by_positive_content(multiplier_negative ? r : -r);
    chain_.push_back(std::move(next));
  }
}

int SturmChain::variations(const Dyadic& x) const {
  int count = 0;
  int last = 0;
  for (const auto& f : chain_) {
    int s = eval_sign_at(f, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

int sturm_count(const SturmChain& chain, const Dyadic& lo, const Dyadic& hi) {
  if (!(lo < hi)) throw std::invalid_argument("sturm_count: need lo < hi");
  return chain.variations(lo) - chain.variations(hi);
}

Dyadic cauchy_bound(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("cauchy_bound: zero polynomial");
  mpz_class lead = abs(p.leading());
  mpz_class m = 0;
  for (long i = 0; i < p.degree(); ++i) m = std::max(m, mpz_class(abs(p.coeffs()[static_cast<std::size_t>(i)])));
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), m.get_mpz_t(), lead.get_mpz_t());
  mpz_class target = q + 1;
  std::int64_t e = 0;
  while (mpz_class(1) << static_cast<mp_bitcnt_t>(e) < target) ++e;
  return Dyadic::pow2(e);
}

std::vector<RootInterval> isolate_real_roots(const IntPolynomial& p) {
  SturmChain chain(p);
  std::vector<RootInterval> out;
  if (chain.square_free().degree() < 1) return out;
  Dyadic c = cauchy_bound(chain.square_free());

  std::function<void(const Dyadic&, int, const Dyadic&, int)> split = [&](const Dyadic& lo, int vlo, const Dyadic& hi, int vhi) {
    int count = vlo - vhi;
    if (count == 0) return;
    if (count == 1) {
      out.push_back({lo, hi});
      return;
    }
    Dyadic mid = midpoint(lo, hi);
    int vmid = chain.variations(mid);
    split(lo, vlo, mid, vmid);
    split(mid, vmid, hi, vhi);
  };
  split(-c, chain.variations(-c), c, chain.variations(c));
  return out;
}

namespace {

// `s` square-free with exactly one root in iv
RootInterval refine_square_free(const IntPolynomial& s, RootInterval iv, const Dyadic& eps) {
  int s_hi = eval_sign_at(s, iv.hi);
  while (iv.width() > eps) {
    Dyadic mid = midpoint(iv.lo, iv.hi);
    int s_mid = eval_sign_at(s, mid);
    if (s_mid == 0) {
      Dyadic lo = std::max(iv.lo, mid - eps);
      return {lo, mid};
    }
    if (s_hi == 0 || s_mid != s_hi) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
      s_hi = s_mid;
    }
  }
  return iv;
}

}  // namespace

RootInterval refine(const IntPolynomial& p, RootInterval iv, const Dyadic& eps) {
  if (eps.sign() <= 0) throw std::invalid_argument("refine: eps must be positive");
  return refine_square_free(square_free_part(p), std::move(iv), eps);
}

GapCertificate min_gap_certificate(const IntPolynomial& p, const mpq_class& claimed, std::int64_t cap_exponent) {
  if (claimed <= 0) throw std::invalid_argument("min_gap_certificate: claimed bound must be positive");
  SturmChain chain(p);
  const IntPolynomial& s = chain.square_free();
  std::vector<RootInterval> roots = isolate_real_roots(s);
  if (roots.size() < 2) throw FewerThanTwoRootsError("polynomial has fewer than two distinct real roots");

  const std::size_t pairs = roots.size() - 1;
  auto upper = [&](std::size_t i) { return roots[i + 1].hi - roots[i].lo; };
  auto lower = [&](std::size_t i) { return roots[i + 1].lo - roots[i].hi; };

  std::vector<bool> open(pairs, true);
  Dyadic eps = Dyadic::pow2_floor(claimed / 8);
  bool met = false;
  for (;;) {
    if (eps.exponent() < cap_exponent)
      throw PrecisionCapError("gap undecided at refinement width 2^" + std::to_string(eps.exponent()));
    for (std::size_t i = 0; i < roots.size(); ++i) {
      bool touched = (i > 0 && open[i - 1]) || (i < pairs && open[i]);
      if (touched && roots[i].width() > eps) roots[i] = refine_square_free(s, roots[i], eps);
    }
    bool any_open = false;
    for (std::size_t i = 0; i < pairs; ++i) {
      if (!open[i]) continue;
      if (compare(upper(i), claimed) <= 0) {
        met = true;
      } else if (compare(lower(i), claimed) > 0) {
        open[i] = false;
      } else {
        any_open = true;
      }
    }
    if (met || !any_open) break;
    eps = eps.scaled(-1);
  }

  std::size_t best = 0;
  for (std::size_t i = 1; i < pairs; ++i)
    if (upper(i) < upper(best)) best = i;

  GapCertificate cert;
  cert.polynomial = p;
  cert.left = roots[best];
  cert.right = roots[best + 1];
  cert.gap_upper = upper(best);
  cert.gap_lower = lower(best);
  cert.claimed_bound = claimed;
  cert.meets_claim = compare(cert.gap_upper, claimed) <= 0;
  return cert;
}

GapCertificate tighten_strict(GapCertificate cert, std::int64_t cap_exponent) {
  if (!cert.meets_claim) throw std::invalid_argument("tighten_strict: certificate does not meet its claim");
  const IntPolynomial s = square_free_part(cert.polynomial);
  Dyadic eps = std::min(cert.left.width(), cert.right.width());
  while (compare(cert.gap_upper, cert.claimed_bound) >= 0) {
    eps = eps.scaled(-1);
    if (eps.exponent() < cap_exponent)
      throw PrecisionCapError("gap equals the claim down to width 2^" + std::to_string(eps.exponent()));
    cert.left = refine_square_free(s, cert.left, eps);
    cert.right = refine_square_free(s, cert.right, eps);
    cert.gap_upper = cert.right.hi - cert.left.lo;
    cert.gap_lower = cert.right.lo - cert.left.hi;
  }
  return cert;
}

// ---------------------------------------------------------------------------

mpq_class explicit_gap_bound(unsigned n, std::int64_t h, ExplicitVariant variant) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("explicit_gap_bound: n must be odd and at least 5");
  mpz_class den;
  if (variant == ExplicitVariant::h2) {
    den = ipow(2, (n + 5) * (n - 3) / 4);
  } else {
    if (h < 2) throw std::invalid_argument("explicit_gap_bound: h must be at least 2");
    den = ipow(mpz_class(h), (n + 3) * (n - 3) / 4);
  }
  return mpq_class(mpz_class(1), den);
}

mpq_class parlett_lu_bound(unsigned n, std::int64_t h) {
  if (n < 2 || h < 1) throw std::invalid_argument("parlett_lu_bound: need n >= 2 and h >= 1");
  mpq_class r(mpz_class(2), ipow(mpz_class(h), n - 2));
  r.canonicalize();
  return r;
}

Dyadic mahler_lower_bound(unsigned n, std::int64_t h) {
  if (n < 1 || h < 1) throw std::invalid_argument("mahler_lower_bound: need n >= 1 and h >= 1");
  // n(n-1) is even, so (2 sqrt(n) h)^(-n(n-1)) = (4 n h^2)^(-n(n-1)/2) is rational
  mpz_class base = mpz_class(4) * n * h * h;
  mpq_class v(mpz_class(1), ipow(base, static_cast<unsigned long>(n) * (n - 1) / 2));
  v.canonicalize();
  return Dyadic::floor_of(v, 64);
}

mpz_class hadamard_height_bound(unsigned n, const mpz_class& h) {
  if (n < 1) throw std::invalid_argument("hadamard_height_bound: n must be positive");
  if (h < 0) throw std::invalid_argument("hadamard_height_bound: h must be non-negative");
  mpz_class k = ipow(2, n) * ipow(h, n) * ipow(mpz_class(n), n / 2);
  if (n % 2 == 0) return k;
  // ceil(k sqrt(n)) = ceil(sqrt(k^2 n))
  mpz_class sq = k * k * n;
  mpz_class r;
  mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
  if (r * r < sq) ++r;
  return r;
}

}  // namespace gapcert
