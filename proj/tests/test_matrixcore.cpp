#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gapcert/census.hpp"
#include "gapcert/matrix.hpp"
#include "gapcert/rootgap.hpp"
#include "oracles.hpp"

using namespace gapcert;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  IntMatrix m(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m.at(r, c) = rows[r][c];
  return m;
}

// 1-based accessor matching the documented positions.
const mpz_class& at1(const IntMatrix& m, std::size_t r, std::size_t c) { return m.at(r - 1, c - 1); }

std::size_t nonzeros_below_diagonal(const IntMatrix& m) {
  std::size_t count = 0;
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < r; ++c) count += m.at(r, c) != 0;
  return count;
}

IntPolynomial t_power(unsigned k) { return IntPolynomial::monomial(mpz_class(1), k); }

BohemianSpec random_spec(std::mt19937_64& rng, unsigned n, std::int64_t h) {
  std::uniform_int_distribution<std::int64_t> digit(0, h - 1);
  auto s = BohemianSpec::zero(n, h);
  for (auto& row : s.a)
    for (auto& x : row) x = digit(rng);
  return s;
}

}  // namespace

TEST_CASE("determinant") {
  CHECK(determinant(IntMatrix::identity(4)) == 1);
  CHECK(determinant(from_rows({{2, 1}, {1, 3}})) == 5);
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == -1);
  CHECK(determinant(from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})) == 0);
  CHECK(determinant(from_rows({{0, 0, 2}, {0, 3, 0}, {5, 0, 0}})) == -30);
}

TEST_CASE("charpoly oracle examples") {
  CHECK(charpoly_oracle(IntMatrix::identity(3)) == IntPolynomial{-1, 3, -3, 1});
  CHECK(charpoly_oracle(IntMatrix(4)) == t_power(4));
  // companion matrix of t^3 - 2t - 5
  CHECK(charpoly_oracle(from_rows({{0, 0, 5}, {1, 0, 2}, {0, 1, 0}})) == IntPolynomial{-5, -2, 0, 1});
}

TEST_CASE("charpoly oracle agrees with the Leibniz expansion") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> dim(1, 7);
  std::uniform_int_distribution<long> entry(-6, 6);
  for (int iter = 0; iter < 150; ++iter) {
    IntMatrix m(static_cast<std::size_t>(dim(rng)));
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) m.at(r, c) = entry(rng);
    auto chi = charpoly_oracle(m);
    CHECK(chi == oracle::charpoly_leibniz(m));
    CHECK(m.trace() == -chi.coeff(m.dim() - 1));
  }
}

TEST_CASE("family B construction") {
  auto zero = build_bohemian(BohemianSpec::zero(2, 2));
  CHECK(zero.dim() == 5);
  CHECK(nonzeros_below_diagonal(zero) == 0);
  std::vector<long> sup;
  for (std::size_t i = 0; i + 1 < 5; ++i) sup.push_back(zero.at(i, i + 1).get_si());
  CHECK(sup == std::vector<long>{1, 1, 1, 2});
  CHECK(charpoly_structural(BohemianSpec::zero(2, 2)) == t_power(5));

  auto s = BohemianSpec::zero(2, 2);
  s.a = {{0, 1}, {1, 0}};
  auto m = build_bohemian(s);
  CHECK(nonzeros_below_diagonal(m) == 2);
  CHECK(charpoly_structural(s) == IntPolynomial{-2, 0, -1, 0, 0, 1});
  CHECK(charpoly_oracle(m) == charpoly_structural(s));
  CHECK(spec_from_matrix(m) == s);

  auto bad = BohemianSpec::zero(2, 2);
  bad.a[0][0] = 2;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(build_bohemian(bad), std::invalid_argument);
  CHECK_FALSE(spec_from_matrix(IntMatrix::identity(5)).has_value());
}

TEST_CASE("structural charpoly equals oracle, exhaustively") {
  for (auto [n, h] : std::vector<std::pair<unsigned, std::int64_t>>{{2, 2}, {2, 3}, {3, 2}}) {
    CAPTURE(n);
    CAPTURE(h);
    std::size_t count = 0;
    enumerate_specs(n, h, Shard{}, [&](const BohemianSpec& spec) {
      auto m = build_bohemian(spec);
      auto chi = charpoly_structural(spec);
      CHECK(chi == charpoly_oracle(m));
      CHECK(chi.coeff(2 * n) == 0);
      CHECK(chi.coeff(2 * n - 1) == 0);
      CHECK(m.height() <= h);
      ++count;
    });
    CHECK(count == family_size(n, h));
  }
}

TEST_CASE("structural charpoly equals oracle on random specs") {
  std::mt19937_64 rng(1234);
  for (int iter = 0; iter < 1000; ++iter) {
    auto spec = random_spec(rng, 5, 3);
    CHECK(charpoly_structural(spec) == charpoly_oracle(build_bohemian(spec)));
  }
}

TEST_CASE("mignotte matrix, h = 2") {
  auto m = build_mignotte_h2(5);
  CHECK(m.dim() == 11);
  std::vector<long> sup;
  for (std::size_t i = 0; i + 1 < 11; ++i) sup.push_back(m.at(i, i + 1).get_si());
  CHECK(sup == std::vector<long>{1, 1, 1, 1, 1, 1, 2, 2, 2, 2});
  CHECK(at1(m, 8, 1) == 1);
  CHECK(at1(m, 9, 3) == 2);
  CHECK(at1(m, 10, 5) == 1);
  CHECK(nonzeros_below_diagonal(m) == 3);
  CHECK(m.height() == 2);
  CHECK(charpoly_oracle(m) == IntPolynomial{0, 0, 0, -2, -8, -8, 0, 0, 0, 0, 0, 1});
  CHECK_THROWS_AS(build_mignotte_h2(4), std::invalid_argument);

  for (unsigned n = 5; n <= 13; n += 2) {
    CAPTURE(n);
    auto mm = build_mignotte_h2(n);
    auto chi = charpoly_oracle(mm);
    auto expected = t_power(n - 2) * mignotte_poly(n + 3, ipow(2, (n - 3) / 2)).compose_neg();
    CHECK(chi == expected);
    CHECK(chi == oracle::charpoly_single_loops(mm));
    auto variant = build_mignotte_h2_in_family(n);
    CHECK(charpoly_oracle(variant) == chi);
    CHECK(variant.height() == 2);
  }
}

TEST_CASE("in-family variant") {
  auto m = build_mignotte_h2_in_family(5);
  CHECK(at1(m, 10, 4) == 1);
  CHECK(at1(m, 9, 3) == 0);
  auto spec = spec_from_matrix(m);
  REQUIRE(spec.has_value());
  CHECK(*spec == mignotte_h2_in_family_spec(5));
  CHECK(build_bohemian(*spec) == m);
  for (unsigned n = 5; n <= 13; n += 2) {
    auto s = mignotte_h2_in_family_spec(n);
    CHECK(charpoly_structural(s) == charpoly_oracle(build_mignotte_h2(n)));
  }
}

TEST_CASE("mignotte matrix, h > 2") {
  auto g = build_mignotte(5, 10);
  CHECK_FALSE(g.height_violation);
  CHECK(at1(g.matrix, 7, 2) == 2);
  CHECK(at1(g.matrix, 8, 4) == 4);
  CHECK(at1(g.matrix, 9, 6) == 2);
  CHECK(g.matrix.height() == 10);
  CHECK(charpoly_oracle(g.matrix) == IntPolynomial{0, 0, 0, 0, 0, -2, -40, -200, 0, 0, 0, 1});
  CHECK(build_mignotte(5, 3).height_violation);
  CHECK(build_mignotte(5, 3).matrix.height() == 4);
  CHECK_THROWS_AS(build_mignotte(5, 2), std::invalid_argument);

  for (unsigned n : {5u, 7u, 9u})
    for (std::int64_t h : {4, 5, 10}) {
      CAPTURE(n);
      CAPTURE(h);
      auto mm = build_mignotte(n, h).matrix;
      auto chi = charpoly_oracle(mm);
      CHECK(chi == t_power(n) * mignotte_poly(n + 1, ipow(h, (n - 3) / 2)).compose_neg());
      CHECK(chi == oracle::charpoly_single_loops(mm));
    }
}

TEST_CASE("double cover") {
  CHECK(double_cover(from_rows({{2}})) == from_rows({{1, 1}, {1, 1}}));
  CHECK(double_cover(from_rows({{1}})) == from_rows({{1, 0}, {0, 1}}));
  CHECK(double_cover(from_rows({{0}})) == IntMatrix(2));
  CHECK_THROWS_AS(double_cover(from_rows({{3}})), std::invalid_argument);

  for (unsigned n : {3u, 5u, 7u}) {
    CAPTURE(n);
    auto m = build_mignotte_h2(n);
    auto cover = double_cover(m);
    CHECK(cover.dim() == 2 * m.dim());
    CHECK(cover.height() <= 1);
    IntMatrix ones(m.dim());
    for (std::size_t r = 0; r < m.dim(); ++r)
      for (std::size_t c = 0; c < m.dim(); ++c) ones.at(r, c) = m.at(r, c) == 1 ? 1 : 0;
    auto chi = charpoly_oracle(m);
    auto chi_cover = charpoly_oracle(cover);
    CHECK(divide_exact(chi_cover, chi).has_value());
    CHECK(chi_cover == chi * charpoly_oracle(ones));
  }
}

TEST_CASE("wilkinson matrix") {
  CHECK(build_wilkinson(3, 5) == from_rows({{5, 1, 0}, {1, 0, 1}, {0, 1, 5}}));
  for (unsigned n = 3; n <= 10; ++n) {
    auto w = build_wilkinson(n, 4);
    CHECK(w.is_symmetric());
    CHECK(w.height() == 4);
  }
}

TEST_CASE("newton identities") {
  CHECK(newton_check(from_rows({{3, 0, 0}, {0, -2, 0}, {0, 0, 7}})));
  CHECK(newton_check(IntMatrix::identity(6)));
  for (unsigned n = 3; n <= 5; n += 2) CHECK(newton_check(build_mignotte_h2(n)));
  CHECK(newton_check(build_mignotte(5, 10).matrix));
  CHECK(newton_check(build_wilkinson(9, 8)));
  for (auto [n, h] : std::vector<std::pair<unsigned, std::int64_t>>{{2, 2}, {2, 3}, {3, 2}})
    enumerate_specs(n, h, Shard{}, [&](const BohemianSpec& s) { CHECK(newton_check(build_bohemian(s))); });
  CHECK_THROWS_AS(newton_check(IntMatrix::identity(4), 3), std::invalid_argument);
}

TEST_CASE("charpoly coefficients stay within the Hadamard bound") {
  std::vector<IntMatrix> ms{build_mignotte_h2(5), build_mignotte(5, 10).matrix, build_wilkinson(10, 8),
                            double_cover(build_mignotte_h2(5))};
  for (const auto& m : ms) {
    auto chi = charpoly_oracle(m);
    auto bound = hadamard_height_bound(static_cast<unsigned>(m.dim()), m.height());
    CHECK(chi.height() <= bound);
  }
}

TEST_CASE("matrix text format") {
  auto m = from_rows({{1, -2}, {30, 0}});
  CHECK(m.to_text() == "2\n1 -2\n30 0\n");
  CHECK(IntMatrix::from_text(m.to_text()) == m);
  auto big = build_mignotte(7, 10).matrix;
  CHECK(IntMatrix::from_text(big.to_text()) == big);
  CHECK_THROWS_AS(IntMatrix::from_text("2\n1 2\n3\n"), std::invalid_argument);
}
