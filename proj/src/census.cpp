#include "gapcert/census.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "gapcert/bijection.hpp"
#include "gapcert/modpoly.hpp"

namespace gapcert {

std::uint64_t family_size(unsigned n, std::int64_t h) {
  if (n < 1 || h < 2) throw std::invalid_argument("family_size: need n >= 1 and h >= 2");
  mpz_class total = ipow(mpz_class(h), static_cast<unsigned long>(n) * n);
  if (mpz_sizeinbase(total.get_mpz_t(), 2) > 63) throw CapExceededError("family size exceeds 2^63");
  return total.get_ui();
}

std::pair<std::uint64_t, std::uint64_t> shard_bounds(std::uint64_t total, Shard shard) {
  if (shard.count == 0 || shard.index >= shard.count) throw std::invalid_argument("shard: need 0 <= index < count");
  auto cut = [&](std::uint64_t k) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(total) * k / shard.count);
  };
  return {cut(shard.index), cut(shard.index + 1)};
}

BohemianSpec spec_at(unsigned n, std::int64_t h, std::uint64_t index) {
  BohemianSpec s = BohemianSpec::zero(n, h);
  const auto base = static_cast<std::uint64_t>(h);
  for (std::size_t k = static_cast<std::size_t>(n) * n; k-- > 0;) {
    s.a[k / n][k % n] = static_cast<std::int64_t>(index % base);
    index /= base;
  }
  return s;
}

void enumerate_specs(unsigned n, std::int64_t h, Shard shard, const std::function<void(const BohemianSpec&)>& visit) {
  auto [begin, end] = shard_bounds(family_size(n, h), shard);
  if (begin == end) return;
  BohemianSpec s = spec_at(n, h, begin);
  for (std::uint64_t i = begin; i < end; ++i) {
    visit(s);
    // odometer increment, last block entry fastest
    for (std::size_t k = static_cast<std::size_t>(n) * n; k-- > 0;) {
      auto& d = s.a[k / n][k % n];
      if (++d < h) break;
      d = 0;
    }
  }
}

std::vector<BohemianSpec> enumerate_specs(unsigned n, std::int64_t h, Shard shard) {
  std::vector<BohemianSpec> out;
  enumerate_specs(n, h, shard, [&](const BohemianSpec& s) { out.push_back(s); });
  return out;
}

IntPolynomial image_poly_at(unsigned n, std::int64_t h, std::uint64_t index) {
  PCoefficients c{n, h, std::vector<mpz_class>(2 * n - 1)};
  mpz_class idx(static_cast<unsigned long>(index));
  for (unsigned i = 0; i + 1 < 2 * n; ++i) {
    CoefficientRange r = coefficient_range(n, h, i);
    mpz_class m;
    mpz_fdiv_qr(idx.get_mpz_t(), m.get_mpz_t(), idx.get_mpz_t(), r.count.get_mpz_t());
    c.a[i] = m * r.step;
  }
  if (idx != 0) throw std::out_of_range("image_poly_at: index beyond the image set");
  return coeffs_to_poly(c);
}

mpz_class choose_a(unsigned n, std::int64_t h) {
  if (n < 2) throw std::invalid_argument("choose_a: n must be at least 2");
  if (h < 2) throw std::invalid_argument("choose_a: h must be at least 2");
  if (h % 5 == 0) throw std::invalid_argument("choose_a: h must not be a multiple of 5");
  auto nonresidue = [](const mpz_class& x) {
    unsigned long r = mpz_fdiv_ui(x.get_mpz_t(), 5);
    return r == 2 || r == 3;
  };
  mpz_class base = ipow(mpz_class(h), n - 2);
  if (nonresidue(base)) return base;
  if (nonresidue(2 * base)) return 2 * base;
  throw std::logic_error("choose_a: neither candidate is a nonresidue");
}

namespace {

template <typename Partial, typename Fn>
std::vector<Partial> run_shards(std::uint64_t shards, unsigned threads, Fn&& run) {
  if (shards == 0) throw std::invalid_argument("census: shard count must be positive");
  std::vector<Partial> parts(shards);
  unsigned workers = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shards));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t i; (i = next.fetch_add(1)) < shards;) parts[i] = run(Shard{i, shards});
  };
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  return parts;
}

void check_cap(std::uint64_t total, const CensusOptions& o) {
  if (total > o.cap) throw CapExceededError("enumeration size " + std::to_string(total) + " exceeds cap " + std::to_string(o.cap));
}

// ---- bijection -------------------------------------------------------------

struct BijectionPartial {
  std::uint64_t enumerated = 0;
  std::uint64_t in_image = 0;
  std::uint64_t roundtrips = 0;
  std::uint64_t oracle_checked = 0;
  std::uint64_t oracle_mismatches = 0;
  std::vector<std::string> keys;
};

std::vector<std::uint64_t> oracle_sample(std::uint64_t total, const CensusOptions& o) {
  std::vector<std::uint64_t> picks;
  if (o.sample >= total) return picks;
  std::mt19937_64 rng(o.seed);
  std::uniform_int_distribution<std::uint64_t> dist(0, total - 1);
  for (std::uint64_t k = 0; k < o.sample; ++k) picks.push_back(dist(rng));
  std::sort(picks.begin(), picks.end());
  picks.erase(std::unique(picks.begin(), picks.end()), picks.end());
  return picks;
}

BijectionPartial bijection_partial(unsigned n, std::int64_t h, Shard shard, const CensusOptions& o) {
  const std::uint64_t total = family_size(n, h);
  const bool check_all = o.sample >= total;
  const std::vector<std::uint64_t> picks = oracle_sample(total, o);
  BijectionPartial part;
  std::uint64_t index = shard_bounds(total, shard).first;
  enumerate_specs(n, h, shard, [&](const BohemianSpec& s) {
    IntPolynomial p = charpoly_structural(s);
    ++part.enumerated;
    try {
      PCoefficients c = poly_to_coeffs(p, n, h);
      ++part.in_image;
      BohemianSpec back = coeffs_to_spec(c);
      if (back == s && charpoly_structural(back) == p) ++part.roundtrips;
    } catch (const NotInFamilyError&) {
    }
    if (check_all || std::binary_search(picks.begin(), picks.end(), index)) {
      ++part.oracle_checked;
      if (charpoly_oracle(build_bohemian(s)) != p) ++part.oracle_mismatches;
    }
    part.keys.push_back(p.to_text());
    ++index;
  });
  std::sort(part.keys.begin(), part.keys.end());
  return part;
}

CensusReport bijection_header(unsigned n, std::int64_t h) {
  CensusReport r;
  r.mode = "bijection";
  r.n = n;
  r.h = h;
  return r;
}

// ---- mod 5 -----------------------------------------------------------------

struct Mod5Partial {
  std::uint64_t enumerated = 0;
  std::vector<IntPolynomial> matches;
};

void check_mod5_args(unsigned n, std::int64_t h) {
  if (n < 2 || (n & (n - 1)) != 0) throw std::invalid_argument("mod5_census: n must be a power of two, at least 2");
  if (h < 2) throw std::invalid_argument("mod5_census: h must be at least 2");
  if (h % 5 == 0) throw std::invalid_argument("mod5_census: h must not be a multiple of 5");
}

Mod5Partial mod5_partial(unsigned n, std::int64_t h, Shard shard) {
  const std::uint64_t total = family_size(n, h);
  const ModPolynomial target = reduce_mod(IntPolynomial::monomial(1, 2 * n + 1) - IntPolynomial::monomial(choose_a(n, h), 1), 5);
  Mod5Partial part;
  auto [begin, end] = shard_bounds(total, shard);
  for (std::uint64_t i = begin; i < end; ++i) {
    IntPolynomial p = image_poly_at(n, h, i);
    ++part.enumerated;
    if (reduce_mod(p, 5) == target) part.matches.push_back(std::move(p));
  }
  return part;
}

mpz_class expected_mod5_matches(unsigned n, std::int64_t h, const mpz_class& a) {
  mpz_class product = 1;
  for (unsigned i = 0; i + 1 < 2 * n; ++i) {
    CoefficientRange r = coefficient_range(n, h, i);
    std::uint32_t want = i == 1 ? static_cast<std::uint32_t>(mpz_fdiv_ui(a.get_mpz_t(), 5)) : 0;
    auto step = static_cast<std::uint32_t>(mpz_fdiv_ui(r.step.get_mpz_t(), 5));
    // step * m = want (mod 5); step is a unit since 5 does not divide h
    std::uint64_t res = std::uint64_t{want} * modarith::inverse(step, 5) % 5;
    mpz_class cnt = 0;
    if (r.count > res) cnt = (r.count - 1 - res) / 5 + 1;
    product *= cnt;
  }
  return product;
}

CensusReport mod5_header(unsigned n, std::int64_t h) {
  CensusReport r;
  r.mode = "mod5";
  r.n = n;
  r.h = h;
  r.mod5_a = choose_a(n, h);
  r.mod5_expected_count = expected_mod5_matches(n, h, r.mod5_a);
  mpz_class hn2 = ipow(mpz_class(h), static_cast<unsigned long>(n) * n);
  r.theorem_bound = mpq_class(mpz_class(2 * n * hn2), ipow(5, 2 * n));
  r.theorem_bound.canonicalize();
  r.text_bound = mpq_class(mpz_class(2 * n * hn2), ipow(5, 2 * n - 1));
  r.text_bound.canonicalize();
  return r;
}

}  // namespace

CensusReport full_bijection_census(unsigned n, std::int64_t h, const CensusOptions& options) {
  const std::uint64_t total = family_size(n, h);
  check_cap(total, options);
  auto parts = run_shards<BijectionPartial>(options.shards, options.threads,
                                            [&](Shard s) { return bijection_partial(n, h, s, options); });
  CensusReport r = bijection_header(n, h);
  std::vector<std::string> keys;
  keys.reserve(total);
  std::uint64_t in_image = 0, roundtrips = 0;
  for (auto& p : parts) {
    r.total_enumerated += p.enumerated;
    in_image += p.in_image;
    roundtrips += p.roundtrips;
    r.oracle_checked += p.oracle_checked;
    r.oracle_mismatches += p.oracle_mismatches;
    keys.insert(keys.end(), std::make_move_iterator(p.keys.begin()), std::make_move_iterator(p.keys.end()));
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  r.distinct_charpolys = keys.size();
  r.all_in_P = in_image == r.total_enumerated;
  r.roundtrip_ok = roundtrips == r.total_enumerated;

  r.all_P_hit = true;
  for (std::uint64_t i = 0; i < total && r.all_P_hit; ++i)
    r.all_P_hit = std::binary_search(keys.begin(), keys.end(), image_poly_at(n, h, i).to_text());
  return r;
}

CensusReport bijection_shard_report(unsigned n, std::int64_t h, Shard shard, const CensusOptions& options) {
  const std::uint64_t total = family_size(n, h);
  check_cap(total, options);
  BijectionPartial p = bijection_partial(n, h, shard, options);
  CensusReport r = bijection_header(n, h);
  r.partial_shard = shard;
  r.total_enumerated = p.enumerated;
  std::uint64_t distinct = p.keys.empty() ? 0 : 1;
  for (std::size_t i = 1; i < p.keys.size(); ++i) distinct += p.keys[i] != p.keys[i - 1];
  r.distinct_charpolys = distinct;
  r.all_in_P = p.in_image == p.enumerated;
  r.roundtrip_ok = p.roundtrips == p.enumerated;
  r.oracle_checked = p.oracle_checked;
  r.oracle_mismatches = p.oracle_mismatches;
  return r;
}

CensusReport mod5_census(unsigned n, std::int64_t h, const CensusOptions& options) {
  check_mod5_args(n, h);
  const std::uint64_t total = family_size(n, h);
  check_cap(total, options);
  auto parts = run_shards<Mod5Partial>(options.shards, options.threads, [&](Shard s) { return mod5_partial(n, h, s); });
  CensusReport r = mod5_header(n, h);
  for (auto& p : parts) {
    r.total_enumerated += p.enumerated;
    for (auto& m : p.matches) r.matches.push_back(std::move(m));
  }
  r.mod5_matching_count = r.matches.size();

  // each match must reduce to t * (irreducible of degree 2n)
  r.mod5_reductions_ok = true;
  for (const auto& p : r.matches) {
    ModPolynomial red = reduce_mod(p, 5);
    const auto& c = red.coeffs();
    if (c.empty() || c[0] != 0) {
      r.mod5_reductions_ok = false;
      continue;
    }
    ModPolynomial cofactor(5, std::vector<std::uint32_t>(c.begin() + 1, c.end()));
    if (cofactor.degree() != static_cast<long>(2 * n) || !irreducible_mod_p(cofactor)) r.mod5_reductions_ok = false;
    mpz_class cauchy = p.height() + 1;
    if (cauchy > r.max_cauchy_bound) r.max_cauchy_bound = cauchy;
  }

  // Every match has an irreducible factor over Z of degree >= 2n. Matches with
  // a_0 = 0 all share the root 0, so gcds are taken after removing powers of t.
  std::vector<IntPolynomial> cores;
  for (const auto& p : r.matches) cores.push_back(p.strip_t_power());
  r.pairwise_coprime = true;
  std::vector<std::size_t> accepted;
  for (std::size_t j = 0; j < cores.size(); ++j) {
    bool disjoint = true;
    for (std::size_t i = 0; i < j; ++i) {
      long g = rational_gcd(cores[i], cores[j]).degree();
      if (g > 0) r.pairwise_coprime = false;
      if (g >= static_cast<long>(2 * n) && std::find(accepted.begin(), accepted.end(), i) != accepted.end()) disjoint = false;
    }
    if (disjoint) accepted.push_back(j);
  }
  r.distinct_root_lower_bound = mpz_class(2 * n) * static_cast<unsigned long>(accepted.size());
  r.theorem_bound_met = r.mod5_reductions_ok && mpq_class(r.distinct_root_lower_bound) >= r.theorem_bound;
  return r;
}

CensusReport mod5_shard_report(unsigned n, std::int64_t h, Shard shard, const CensusOptions& options) {
  check_mod5_args(n, h);
  check_cap(family_size(n, h), options);
  Mod5Partial p = mod5_partial(n, h, shard);
  CensusReport r = mod5_header(n, h);
  r.partial_shard = shard;
  r.total_enumerated = p.enumerated;
  r.mod5_matching_count = p.matches.size();
  r.matches = std::move(p.matches);
  return r;
}

}  // namespace gapcert
