#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gapcert/matrix.hpp"
#include "gapcert/polynomial.hpp"

namespace gapcert {

/// Contiguous slice `index` of `count` over a lexicographic enumeration.
struct Shard {
  std::uint64_t index = 0;
  std::uint64_t count = 1;
};

class CapExceededError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// h^(n^2); throws CapExceededError if it does not fit in 63 bits.
std::uint64_t family_size(unsigned n, std::int64_t h);

/// Half-open [begin, end) of global indices owned by `shard`.
std::pair<std::uint64_t, std::uint64_t> shard_bounds(std::uint64_t total, Shard shard);

/// Member number `index` of B(n, h); a[0][0] is the most significant base-h digit.
BohemianSpec spec_at(unsigned n, std::int64_t h, std::uint64_t index);

void enumerate_specs(unsigned n, std::int64_t h, Shard shard, const std::function<void(const BohemianSpec&)>& visit);
std::vector<BohemianSpec> enumerate_specs(unsigned n, std::int64_t h, Shard shard = {});

/// Member number `index` of the image set, enumerated from the coefficient
/// ranges with a_{2n-2} most significant.
IntPolynomial image_poly_at(unsigned n, std::int64_t h, std::uint64_t index);

/// Whichever of h^(n-2), 2 h^(n-2) is a quadratic nonresidue mod 5.
mpz_class choose_a(unsigned n, std::int64_t h);

struct CensusOptions {
  std::uint64_t cap = 1'000'000;
  /// Number of members spot-checked against charpoly_oracle; >= family size checks all.
  std::uint64_t sample = 64;
  std::uint64_t seed = 1;
  std::uint64_t shards = 1;
  /// Concurrent shard workers; 0 picks the hardware concurrency.
  unsigned threads = 0;
};

struct CensusReport {
  std::string mode;  // "bijection" or "mod5"
  unsigned n = 0;
  std::int64_t h = 0;
  /// Set on single-shard reports only; merged reports do not depend on sharding.
  std::optional<Shard> partial_shard;
  std::uint64_t total_enumerated = 0;

  // bijection
  std::uint64_t distinct_charpolys = 0;
  bool all_in_P = false;
  bool roundtrip_ok = false;
  bool all_P_hit = false;
  std::uint64_t oracle_checked = 0;
  std::uint64_t oracle_mismatches = 0;

  // mod5
  mpz_class mod5_a = 0;
  std::uint64_t mod5_matching_count = 0;
  mpz_class mod5_expected_count = 0;
  bool mod5_reductions_ok = false;
  /// Pairwise gcds of the t-stripped matches are constant.
  bool pairwise_coprime = false;
  mpz_class distinct_root_lower_bound = 0;
  /// (2n / 5^(2n)) h^(n^2)
  mpq_class theorem_bound = 0;
  /// (2n / 5^(2n-1)) h^(n^2)
  mpq_class text_bound = 0;
  bool theorem_bound_met = false;
  /// Largest Cauchy root bound over the matches.
  mpz_class max_cauchy_bound = 0;
  std::vector<IntPolynomial> matches;
};

/// Runs every shard (concurrently), merges, checks distinctness, image
/// membership, both roundtrips and the oracle sample.
CensusReport full_bijection_census(unsigned n, std::int64_t h, const CensusOptions& options = {});

/// Counts image polynomials congruent to t (t^(2n) - a) mod 5 and checks the
/// irreducibility and pairwise-gcd conditions. n a power of two >= 2, 5 does not divide h.
CensusReport mod5_census(unsigned n, std::int64_t h, const CensusOptions& options = {});

/// Counts-only report for a single shard (no cross-shard checks).
CensusReport bijection_shard_report(unsigned n, std::int64_t h, Shard shard, const CensusOptions& options = {});
CensusReport mod5_shard_report(unsigned n, std::int64_t h, Shard shard, const CensusOptions& options = {});

}  // namespace gapcert
