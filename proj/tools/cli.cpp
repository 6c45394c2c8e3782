#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gapcert/bijection.hpp"
#include "gapcert/census.hpp"
#include "gapcert/matrix.hpp"
#include "gapcert/rootgap.hpp"
#include "gapcert/serialize.hpp"

namespace gapcert::cli {

namespace {

struct RunConfig {
  std::string variant = "h2";
  unsigned n = 0;
  std::int64_t h = 2;
  std::string output;
  std::string input;
  bool structural = false;
  bool pretty = false;
  std::int64_t precision_cap = -100000;
  std::string mode = "bijection";
  std::uint64_t shards = 1;
  std::optional<std::uint64_t> shard;
  std::uint64_t enum_cap = 1'000'000;
  std::uint64_t sample = 64;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(cfg.output, std::ios::binary);
  if (!f) throw UsageError("cannot write " + cfg.output);
  f << text;
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot read " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

struct Built {
  IntMatrix matrix;
  bool height_violation = false;
};

Built build(const RunConfig& cfg) {
  const std::string& v = cfg.variant;
  if (v == "h2") return {build_mignotte_h2(cfg.n)};
  if (v == "inB") return {build_mignotte_h2_in_family(cfg.n)};
  if (v == "cover") return {double_cover(build_mignotte_h2(cfg.n))};
  if (v == "wilkinson") return {build_wilkinson(cfg.n, cfg.h)};
  if (v == "general") {
    GeneralMignotte g = build_mignotte(cfg.n, cfg.h);
    return {std::move(g.matrix), g.height_violation};
  }
  throw UsageError("unknown variant '" + v + "'");
}

mpq_class claimed_bound(const RunConfig& cfg) {
  const std::string& v = cfg.variant;
  if (v == "h2" || v == "inB") return explicit_gap_bound(cfg.n, 2, ExplicitVariant::h2);
  if (v == "cover") return explicit_gap_bound(cfg.n, 2, ExplicitVariant::general);
  if (v == "general") return explicit_gap_bound(cfg.n, cfg.h, ExplicitVariant::general);
  return parlett_lu_bound(cfg.n, cfg.h);
}

void warn_height(const Built& b, const RunConfig& cfg, std::ostream& err) {
  if (b.height_violation)
    err << "warning: entry 4 exceeds h = " << cfg.h << "; matrix height is " << b.matrix.height().get_str() << "\n";
}

int cmd_construct(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Built b = build(cfg);
  warn_height(b, cfg, err);
  emit(cfg, b.matrix.to_text(), out);
  std::ostream& info = cfg.output.empty() ? err : out;
  info << "dim " << b.matrix.dim() << " height " << b.matrix.height().get_str() << "\n";
  return ok;
}

int cmd_charpoly(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  IntMatrix m = IntMatrix::from_text(read_file(cfg.input));
  IntPolynomial p = charpoly_oracle(m);
  std::string text = (cfg.pretty ? p.pretty() : p.to_text()) + "\n";
  if (cfg.structural) {
    std::optional<BohemianSpec> spec = spec_from_matrix(m);
    if (!spec) throw UsageError("--structural needs a matrix of the lower Hessenberg family shape");
    IntPolynomial s = charpoly_structural(*spec);
    if (s != p) {
      err << "error: structural and oracle characteristic polynomials differ\n"
          << "  oracle:     " << p.to_text() << "\n  structural: " << s.to_text() << "\n";
      return refuted;
    }
    text += (cfg.pretty ? s.pretty() : s.to_text()) + "\n";
  }
  emit(cfg, text, out);
  return ok;
}

int cmd_certify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  Built b = build(cfg);
  warn_height(b, cfg, err);
  IntPolynomial chi = charpoly_oracle(b.matrix);
  IntPolynomial core = chi.strip_t_power();
  mpq_class claimed = claimed_bound(cfg);

  GapCertificate cert;
  try {
    cert = min_gap_certificate(core, claimed, cfg.precision_cap);
    // the Wilkinson comparison bound is strict
    if (cfg.variant == "wilkinson" && cert.meets_claim) cert = tighten_strict(cert, cfg.precision_cap);
  } catch (const PrecisionCapError& e) {
    err << "error: " << e.what() << "\n";
    return precision_cap;
  }

  const mpz_class height = b.matrix.height();
  Dyadic mahler = mahler_lower_bound(static_cast<unsigned>(b.matrix.dim()), std::max<long>(1, height.get_si()));
  bool eisenstein = eisenstein_irreducible(core, 2);

  Json j;
  j["variant"] = cfg.variant;
  j["n"] = cfg.n;
  j["h"] = cfg.variant == "general" || cfg.variant == "wilkinson" ? cfg.h : 2;
  j["dim"] = b.matrix.dim();
  j["height"] = height.get_str();
  j["height_violation"] = b.height_violation;
  j["charpoly"] = chi.to_text();
  j["t_power_stripped"] = chi.t_valuation();
  j["eisenstein_at_2"] = eisenstein;
  j["irreducible_factor_degree"] = eisenstein ? Json(core.degree()) : Json(nullptr);
  j["certificate"] = to_json(cert);
  j["mahler_lower_bound"] = mahler.str();
  j["mahler_respected"] = cert.gap_lower >= mahler;
  emit(cfg, j.dump(2) + "\n", out);
  if (!cert.meets_claim) err << "claim refuted: gap_lower " << cert.gap_lower.str() << " exceeds " << bound_str(claimed) << "\n";
  return cert.meets_claim ? ok : refuted;
}

int cmd_census(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  CensusOptions o;
  o.cap = cfg.enum_cap;
  o.sample = cfg.sample;
  o.seed = cfg.seed;
  o.shards = cfg.shards;
  o.threads = cfg.threads;
  if (cfg.mode != "bijection" && cfg.mode != "mod5") throw UsageError("unknown census mode '" + cfg.mode + "'");
  const bool bij = cfg.mode == "bijection";
  CensusReport r;
  bool passed = true;
  if (cfg.shard) {
    if (*cfg.shard >= cfg.shards) throw UsageError("--shard must be below --shards");
    Shard s{*cfg.shard, cfg.shards};
    r = bij ? bijection_shard_report(cfg.n, cfg.h, s, o) : mod5_shard_report(cfg.n, cfg.h, s, o);
    if (bij) passed = r.all_in_P && r.roundtrip_ok && r.oracle_mismatches == 0;
  } else if (bij) {
    r = full_bijection_census(cfg.n, cfg.h, o);
    passed = r.distinct_charpolys == r.total_enumerated && r.all_in_P && r.roundtrip_ok && r.all_P_hit &&
             r.oracle_mismatches == 0;
  } else {
    r = mod5_census(cfg.n, cfg.h, o);
    passed = r.mod5_matching_count == r.mod5_expected_count && r.theorem_bound_met;
  }
  emit(cfg, to_json(r).dump(2) + "\n", out);
  return passed ? ok : refuted;
}

int cmd_bounds(const RunConfig& cfg, std::ostream& out, std::ostream&) {
  if (cfg.n < 2) throw UsageError("bounds: n must be at least 2");
  if (cfg.h < 1) throw UsageError("bounds: h must be at least 1");
  Json j;
  j["n"] = cfg.n;
  j["h"] = cfg.h;
  j["parlett_lu_upper"] = bound_str(parlett_lu_bound(cfg.n, cfg.h));
  j["mahler_lower"] = mahler_lower_bound(cfg.n, cfg.h).str();
  j["hadamard_height"] = hadamard_height_bound(cfg.n, cfg.h).get_str();
  bool explicit_ok = cfg.n >= 5 && cfg.n % 2 == 1;
  j["explicit_upper"] = explicit_ok && cfg.h >= 2 ? Json(bound_str(explicit_gap_bound(cfg.n, cfg.h))) : Json(nullptr);
  j["explicit_upper_h2_matrix"] = explicit_ok ? Json(bound_str(explicit_gap_bound(cfg.n, 2, ExplicitVariant::h2))) : Json(nullptr);
  emit(cfg, j.dump(2) + "\n", out);
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact constructions and certificates for small eigenvalue gaps of integer matrices", "gapcert"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  RunConfig cfg;
  const std::vector<std::string> variants{"h2", "general", "inB", "wilkinson", "cover"};

  auto* construct = app.add_subcommand("construct", "Write one of the small-gap matrices");
  construct->add_option("--variant", cfg.variant)->check(CLI::IsMember(variants));
  construct->add_option("--n", cfg.n)->required();
  construct->add_option("--h", cfg.h);
  construct->add_option("-o,--output", cfg.output);

  auto* charpoly = app.add_subcommand("charpoly", "Exact characteristic polynomial of a matrix file");
  charpoly->add_option("matrix", cfg.input)->required();
  charpoly->add_flag("--structural", cfg.structural, "Also apply the loop-weight formula and compare");
  charpoly->add_flag("--pretty", cfg.pretty, "High-to-low human-readable output");
  charpoly->add_option("-o,--output", cfg.output);

  auto* certify = app.add_subcommand("certify", "Certify the eigenvalue gap of a construction");
  certify->add_option("--variant", cfg.variant)->check(CLI::IsMember(variants));
  certify->add_option("--n", cfg.n)->required();
  certify->add_option("--h", cfg.h);
  certify->add_option("--cap", cfg.precision_cap, "Refinement gives up below width 2^cap");
  certify->add_option("-o,--output", cfg.output);

  auto* census = app.add_subcommand("census", "Enumerate the family and check bijection or mod-5 counts");
  census->add_option("--mode", cfg.mode)->check(CLI::IsMember({"bijection", "mod5"}));
  census->add_option("--n", cfg.n)->required();
  census->add_option("--h", cfg.h)->required();
  census->add_option("--shards", cfg.shards)->check(CLI::PositiveNumber);
  census->add_option("--shard", cfg.shard, "Run only this shard and print a partial report");
  census->add_option("--cap", cfg.enum_cap);
  census->add_option("--sample", cfg.sample, "Members spot-checked against the generic oracle");
  census->add_option("--seed", cfg.seed);
  census->add_option("--threads", cfg.threads);
  census->add_option("-o,--output", cfg.output);

  auto* bounds = app.add_subcommand("bounds", "Print the known upper and lower gap bounds");
  bounds->add_option("--n", cfg.n)->required();
  bounds->add_option("--h", cfg.h)->required();
  bounds->add_option("-o,--output", cfg.output);

  std::vector<std::string> argv_store{"gapcert"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }

  try {
    if (construct->parsed()) return cmd_construct(cfg, out, err);
    if (charpoly->parsed()) return cmd_charpoly(cfg, out, err);
    if (certify->parsed()) return cmd_certify(cfg, out, err);
    if (census->parsed()) return cmd_census(cfg, out, err);
    if (bounds->parsed()) return cmd_bounds(cfg, out, err);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << "\n";
    return enumeration_cap;
  } catch (const FewerThanTwoRootsError& e) {
    err << "error: " << e.what() << "\n";
    return refuted;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace gapcert::cli
