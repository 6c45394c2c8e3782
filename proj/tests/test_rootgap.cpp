#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapcert/matrix.hpp"
#include "gapcert/rootgap.hpp"
#include "oracles.hpp"

using namespace gapcert;

namespace {

Dyadic dy(long m, std::int64_t e = 0) { return Dyadic(mpz_class(m), e); }

// Sign changes of m_{4,8} = t^4 - 2(8t - 1)^2 on the grid k / 2^20 over [-16, 16],
// evaluated as 2^80 * m(k / 2^20) in 128-bit integers.
int mignotte_4_8_grid_sign_changes() {
  const __int128 scale = static_cast<__int128>(1) << 20;
  auto value = [&](__int128 k) {
    __int128 lin = 8 * k - scale;
    return k * k * k * k - 2 * lin * lin * scale * scale;
  };
  int changes = 0;
  int prev = 0;
  for (__int128 k = -16 * scale; k <= 16 * scale; ++k) {
    __int128 v = value(k);
    int s = v > 0 ? 1 : (v < 0 ? -1 : 0);
    if (s == 0) {
      ++changes;
      prev = 0;
      continue;
    }
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

IntPolynomial from_roots(const std::vector<long>& roots) {
  IntPolynomial p{1};
  for (long r : roots) p = p * IntPolynomial{-r, 1};
  return p;
}

bool contains(const RootInterval& iv, const mpq_class& x) {
  return compare(iv.lo, x) < 0 && compare(iv.hi, x) >= 0;
}

}  // namespace

TEST_CASE("sturm chain shape") {
  SturmChain chain(mignotte_poly(8, 4));
  const auto& ps = chain.polys();
  for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i].degree() < ps[i - 1].degree());
  CHECK(ps.back().degree() == 0);
  CHECK(SturmChain(IntPolynomial{0, 0, 0, 1}).square_free() == IntPolynomial{0, 1});
}

TEST_CASE("sturm counts") {
  SturmChain c(IntPolynomial{-2, 0, 1});
  CHECK(sturm_count(c, dy(0), dy(2)) == 1);
  CHECK(sturm_count(c, dy(-2), dy(2)) == 2);
  CHECK(sturm_count(SturmChain(IntPolynomial{1, 0, 1}), dy(-10), dy(10)) == 0);
  // half-open: the root 1 of t - 1 lies in (0, 1] but not in (1, 2]
  SturmChain lin(IntPolynomial{-1, 1});
  CHECK(sturm_count(lin, dy(0), dy(1)) == 1);
  CHECK(sturm_count(lin, dy(1), dy(2)) == 0);
  CHECK_THROWS_AS(sturm_count(lin, dy(1), dy(1)), std::invalid_argument);
}

TEST_CASE("root isolation examples") {
  auto iv = isolate_real_roots(IntPolynomial{-2, 0, 1});
  REQUIRE(iv.size() == 2);
  // one negative root, one positive root, each isolated
  CHECK(iv[0].hi <= dy(0));
  CHECK(iv[1].lo >= dy(0));
  CHECK(sturm_count(SturmChain(IntPolynomial{-2, 0, 1}), dy(-2), dy(0)) == 1);
  CHECK(sturm_count(SturmChain(IntPolynomial{-2, 0, 1}), dy(0), dy(2)) == 1);

  auto cube = isolate_real_roots(IntPolynomial{0, 0, 0, 1});
  REQUIRE(cube.size() == 1);
  CHECK(contains(cube[0], 0));
  CHECK(isolate_real_roots(IntPolynomial{1, 0, 1}).empty());
  CHECK(isolate_real_roots(IntPolynomial{5}).empty());
}

TEST_CASE("mignotte_poly(4, 8) has four real roots, two near 1/8") {
  auto p = mignotte_poly(4, 8);
  auto iv = isolate_real_roots(p);
  CHECK(iv.size() == 4);
  CHECK(mignotte_4_8_grid_sign_changes() == 4);
  SturmChain chain(p);
  CHECK(sturm_count(chain, dy(1, -4), dy(3, -4)) == 2);
}

TEST_CASE("isolation soundness on random polynomials") {
  std::mt19937_64 rng(99);
  for (int iter = 0; iter < 200; ++iter) {
    auto p = oracle::random_poly(rng, 9, 30);
    if (p.degree() < 1) continue;
    SturmChain chain(p);
    auto ivs = isolate_real_roots(p);
    auto c = cauchy_bound(p);
    CHECK(sturm_count(chain, Dyadic(0) - c, c) == static_cast<int>(ivs.size()));
    for (std::size_t i = 0; i < ivs.size(); ++i) {
      CHECK(ivs[i].lo < ivs[i].hi);
      CHECK(sturm_count(chain, ivs[i].lo, ivs[i].hi) == 1);
      if (i > 0) CHECK(ivs[i - 1].hi <= ivs[i].lo);
    }
  }
}

TEST_CASE("isolation finds known integer roots, repeated roots counted once") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> root(-40, 40);
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<long> roots;
    for (int k = 0; k < 6; ++k) roots.push_back(root(rng));
    auto p = from_roots(roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    auto ivs = isolate_real_roots(p);
    REQUIRE(ivs.size() == roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) CHECK(contains(ivs[i], roots[i]));
  }
}

TEST_CASE("refinement") {
  auto iv = refine(IntPolynomial{-2, 0, 1}, {dy(1), dy(2)}, Dyadic::pow2(-30));
  CHECK(iv.width() <= Dyadic::pow2(-30));
  // floor(sqrt(2) * 10^8) = 141421356
  mpz_class s = sqrt(mpz_class("20000000000000000"));
  CHECK(s == 141421356);
  mpq_class lo(s, mpz_class("100000000")), hi(s + 1, mpz_class("100000000"));
  CHECK(compare(iv.lo, lo) >= 0);
  CHECK(compare(iv.hi, hi) <= 0);
  CHECK(compare(iv.lo * iv.lo, 2) < 0);
  CHECK(compare(iv.hi * iv.hi, 2) > 0);

  auto three = refine(IntPolynomial{-3, 1}, {dy(2), dy(4)}, Dyadic::pow2(-10));
  CHECK(contains(three, 3));
  CHECK(three.width() <= Dyadic::pow2(-10));

  // nested results for smaller eps
  auto p = IntPolynomial{-3, 0, 1};
  RootInterval start{dy(1), dy(2)};
  RootInterval prev = start;
  for (int e = 1; e <= 40; e += 3) {
    auto cur = refine(p, start, Dyadic::pow2(-e));
    CHECK(cur.width() <= Dyadic::pow2(-e));
    CHECK(cur.lo >= prev.lo);
    CHECK(cur.hi <= prev.hi);
    CHECK(sturm_count(SturmChain(p), cur.lo, cur.hi) == 1);
    prev = cur;
  }
}

TEST_CASE("gap certificates") {
  SUBCASE("m_{4,8}") {
    auto refuted = min_gap_certificate(mignotte_poly(4, 8), mpq_class(1, 512));
    CHECK_FALSE(refuted.meets_claim);
    CHECK(compare(refuted.gap_lower, mpq_class(1, 512)) > 0);
    auto met = min_gap_certificate(mignotte_poly(4, 8), mpq_class(1, 256));
    CHECK(met.meets_claim);
    CHECK(compare(met.gap_upper, mpq_class(1, 256)) <= 0);
    CHECK(met.left.hi <= dy(1, -3));
    CHECK(met.right.lo >= dy(1, -4));
  }
  SUBCASE("t^2 - 2") {
    auto c = min_gap_certificate(IntPolynomial{-2, 0, 1}, 1);
    CHECK_FALSE(c.meets_claim);
    // 2 sqrt 2 lies in [gap_lower, gap_upper]
    CHECK(compare(c.gap_lower * c.gap_lower, 8) <= 0);
    CHECK(compare(c.gap_upper * c.gap_upper, 8) >= 0);
  }
  SUBCASE("(t-1)(t-2)(t-10)") {
    auto c = min_gap_certificate(from_roots({1, 2, 10}), 2);
    CHECK(c.meets_claim);
    CHECK(contains(c.left, 1));
    CHECK(contains(c.right, 2));
    CHECK(c.gap_lower <= c.gap_upper);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(min_gap_certificate(IntPolynomial{1, 0, 1}, 1), FewerThanTwoRootsError);
    CHECK_THROWS_AS(min_gap_certificate(IntPolynomial{-1, 1}, 1), FewerThanTwoRootsError);
    CHECK_THROWS_AS(min_gap_certificate(IntPolynomial{-1, 0, 1}, 0), std::invalid_argument);
    // gap exactly equal to the claim can never be decided
    CHECK_THROWS_AS(min_gap_certificate(from_roots({1, 2}), 1, -30), PrecisionCapError);
    auto tie = min_gap_certificate(from_roots({1, 2}), mpq_class(3, 2));
    CHECK(compare(tighten_strict(tie).gap_upper, mpq_class(3, 2)) < 0);
  }
}

TEST_CASE("certificate invariants on random integer-root polynomials") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> root(-30, 30);
  std::uniform_int_distribution<long> claim(1, 20);
  for (int iter = 0; iter < 60; ++iter) {
    std::vector<long> roots;
    for (int k = 0; k < 5; ++k) roots.push_back(root(rng));
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    if (roots.size() < 2) continue;
    long true_gap = 1000;
    for (std::size_t i = 1; i < roots.size(); ++i) true_gap = std::min(true_gap, roots[i] - roots[i - 1]);
    mpq_class claimed(2 * claim(rng) + 1, 2);  // half-integers avoid exact ties
    auto c = min_gap_certificate(from_roots(roots), claimed);
    CHECK(c.gap_lower <= c.gap_upper);
    CHECK(compare(c.gap_lower, true_gap) <= 0);
    CHECK(c.meets_claim == (true_gap <= claimed));
    CHECK(c.meets_claim == (compare(c.gap_upper, claimed) <= 0));
  }
}

TEST_CASE("bounds") {
  CHECK(explicit_gap_bound(9, 2, ExplicitVariant::h2) == mpq_class(1, 1 << 21));
  CHECK(explicit_gap_bound(5, 2, ExplicitVariant::h2) == mpq_class(1, 32));
  CHECK(explicit_gap_bound(7, 10) == mpq_class(1, 10000000000L));
  CHECK_THROWS_AS(explicit_gap_bound(6, 10), std::invalid_argument);
  CHECK_THROWS_AS(explicit_gap_bound(3, 10), std::invalid_argument);
  CHECK(parlett_lu_bound(4, 8) == mpq_class(1, 32));
  CHECK(mahler_lower_bound(4, 1) == Dyadic::pow2(-24));
  CHECK(mahler_lower_bound(2, 1) == Dyadic::pow2(-3));
  CHECK(hadamard_height_bound(4, 1) == 256);
  CHECK(hadamard_height_bound(2, 3) == 72);
  // odd n: 2^3 (sqrt 3 * 2)^3 = 64 * 3 sqrt 3 = 332.55...
  CHECK(hadamard_height_bound(3, 2) == 333);

  // (2 sqrt 3 h)^(-6) = 1 / (1728 h^6): relative error at most 2^-64, rounded down
  for (long h : {1L, 2L, 7L}) {
    mpq_class exact(1, 1728 * h * h * h * h * h * h);
    mpq_class got = mahler_lower_bound(3, h).to_mpq();
    CHECK(got <= exact);
    CHECK((exact - got) / exact <= mpq_class(1, mpz_class(1) << 64));
  }
}

TEST_CASE("wilkinson matrices stay below the upper bound") {
  for (unsigned n = 4; n <= 10; ++n)
    for (std::int64_t h : {4, 8}) {
      CAPTURE(n);
      CAPTURE(h);
      auto w = build_wilkinson(n, h);
      auto bound = parlett_lu_bound(n, h);
      auto c = min_gap_certificate(charpoly_oracle(w), bound);
      REQUIRE(c.meets_claim);
      c = tighten_strict(c);
      CHECK(compare(c.gap_upper, bound) < 0);
      CHECK(c.gap_lower <= c.gap_upper);
      CHECK(c.gap_lower >= mahler_lower_bound(n, h));
    }
}

TEST_CASE("mignotte certificates respect the Mahler lower bound") {
  for (unsigned n : {5u, 7u}) {
    auto m = build_mignotte_h2(n);
    auto chi = charpoly_oracle(m).strip_t_power();
    auto c = min_gap_certificate(chi, explicit_gap_bound(n, 2, ExplicitVariant::h2));
    CHECK(c.gap_lower >= mahler_lower_bound(static_cast<unsigned>(m.dim()), 2));
    CHECK(c.gap_lower <= c.gap_upper);
  }
}
