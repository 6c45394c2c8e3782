#include "gapcert/serialize.hpp"

namespace gapcert {

std::string bound_str(const mpq_class& q) {
  if (Dyadic::is_dyadic(q)) return Dyadic::floor_of(q).str();
  return rational_str(q);
}

mpq_class parse_bound(const std::string& text) {
  if (text.find("*2^") != std::string::npos) return Dyadic::parse(text).to_mpq();
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("bad rational '" + text + "'");
  q.canonicalize();
  return q;
}

namespace {

Json interval_json(const RootInterval& iv) { return Json{{"lo", iv.lo.str()}, {"hi", iv.hi.str()}}; }

RootInterval interval_from_json(const Json& j) {
  return {Dyadic::parse(j.at("lo").get<std::string>()), Dyadic::parse(j.at("hi").get<std::string>())};
}

std::string count_str(std::uint64_t v) { return std::to_string(v); }

}  // namespace

Json to_json(const GapCertificate& cert) {
  Json j;
  j["polynomial"] = cert.polynomial.to_text();
  j["left"] = interval_json(cert.left);
  j["right"] = interval_json(cert.right);
  j["gap_upper"] = cert.gap_upper.str();
  j["gap_lower"] = cert.gap_lower.str();
  j["claimed_bound"] = bound_str(cert.claimed_bound);
  j["meets_claim"] = cert.meets_claim;
  return j;
}

GapCertificate certificate_from_json(const Json& j) {
  GapCertificate c;
  c.polynomial = IntPolynomial::from_text(j.at("polynomial").get<std::string>());
  c.left = interval_from_json(j.at("left"));
  c.right = interval_from_json(j.at("right"));
  c.gap_upper = Dyadic::parse(j.at("gap_upper").get<std::string>());
  c.gap_lower = Dyadic::parse(j.at("gap_lower").get<std::string>());
  c.claimed_bound = parse_bound(j.at("claimed_bound").get<std::string>());
  c.meets_claim = j.at("meets_claim").get<bool>();
  return c;
}

Json to_json(const CensusReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["n"] = r.n;
  j["h"] = r.h;
  if (r.partial_shard) j["shard"] = count_str(r.partial_shard->index) + "/" + count_str(r.partial_shard->count);
  j["total_enumerated"] = count_str(r.total_enumerated);
  if (r.mode == "bijection") {
    j["distinct_charpolys"] = count_str(r.distinct_charpolys);
    j["all_in_P"] = r.all_in_P;
    j["roundtrip_ok"] = r.roundtrip_ok;
    j["all_P_hit"] = r.all_P_hit;
    j["oracle_checked"] = count_str(r.oracle_checked);
    j["oracle_mismatches"] = count_str(r.oracle_mismatches);
  } else {
    j["mod5_a"] = r.mod5_a.get_str();
    j["mod5_matching_count"] = count_str(r.mod5_matching_count);
    j["mod5_expected_count"] = r.mod5_expected_count.get_str();
    j["mod5_reductions_ok"] = r.mod5_reductions_ok;
    j["pairwise_coprime"] = r.pairwise_coprime;
    j["distinct_root_lower_bound"] = r.distinct_root_lower_bound.get_str();
    j["theorem_bound"] = rational_str(r.theorem_bound);
    j["text_bound"] = rational_str(r.text_bound);
    j["theorem_bound_met"] = r.theorem_bound_met;
    j["max_cauchy_bound"] = r.max_cauchy_bound.get_str();
    Json polys = Json::array();
    for (const auto& p : r.matches) polys.push_back(p.to_text());
    j["matches"] = polys;
  }
  return j;
}

}  // namespace gapcert
