#pragma once

// JSON and CSV serialization: datum descriptions, group elements, and the
// mu-set comparison report (schema "musets/1").  nlohmann::json keeps keys
// sorted, so identical inputs always serialize to identical bytes.

#include <json.hpp>

#include "alcove/musets.hpp"

namespace alcove {

inline constexpr const char* kLibraryVersion = "0.1.0";

using nlohmann::json;

inline json rat_json(const Rat& r) { return json::array({r.num, r.den}); }

inline json vec_json(const Vec& v) {
  json a = json::array();
  for (const Rat& r : v) a.push_back(rat_json(r));
  return a;
}

inline json int_vec_json(const Vec& v) {
  json a = json::array();
  for (const Rat& r : v) {
    internal_check(r.is_integer(), "expected an integer vector");
    a.push_back(r.num);
  }
  return a;
}

inline std::string fingerprint_hex(std::uint64_t h) {
  char buf[20];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline json element_json(const ExtAffineElement& x) {
  const OmegaDecomposition dec = omega_decompose(x);
  json j;
  j["translation"] = int_vec_json(x.translation);
  j["finite_part_word"] = x.finite.word;
  j["length"] = length(x);
  const std::int64_t omega = x.datum->omega_invariant(x.translation);
  if (omega == 0)
    j["omega"] = nullptr;
  else
    j["omega"] = omega;
  j["waff_word"] = dec.word;
  return j;
}

inline std::string describe_json(const RootDatum& d) {
  json j;
  j["family"] = family_tag(d.family);
  j["name"] = d.name;
  j["size"] = d.size;
  j["rank"] = d.rank();
  j["ambient_dim"] = d.ambient;
  j["weyl_order"] = d.weyl_order;
  j["fingerprint"] = fingerprint_hex(datum_fingerprint(d));
  j["library_version"] = kLibraryVersion;
  auto vecs = [](const std::vector<Vec>& vs) {
    json a = json::array();
    for (const Vec& v : vs) a.push_back(vec_json(v));
    return a;
  };
  j["simple_roots"] = vecs(d.simple_roots);
  j["simple_coroots"] = vecs(d.simple_coroots);
  j["positive_roots"] = vecs(d.positive_roots);
  j["highest_root"] = vec_json(d.highest_root());
  j["base_alcove_vertices"] = vecs(d.vertices);
  {
    json basis = json::array();
    for (std::size_t c = 0; c < d.lattice_basis.cols; ++c)
      basis.push_back(vec_json(d.lattice_basis.col(c)));
    j["cocharacter_lattice_basis"] = basis;
  }
  return j.dump(2) + "\n";
}

inline json report_json_value(const MuSetReport& r) {
  json j;
  j["schema"] = "musets/1";
  j["library_version"] = kLibraryVersion;
  j["datum"] = r.datum_name;
  j["fingerprint"] = fingerprint_hex(r.fingerprint);
  j["mu"] = int_vec_json(r.mu);
  j["counts"] = {{"adm", r.adm.size()},
                 {"perm", r.perm.size()},
                 {"perm_st", r.perm_st.size()}};
  j["verdicts"] = {{"adm_subset_perm", r.adm_subset_perm},
                   {"adm_eq_perm", r.adm_eq_perm},
                   {"perm_eq_perm_st", r.perm_eq_perm_st}};
  auto elems = [](const std::vector<ExtAffineElement>& xs) {
    json a = json::array();
    for (const ExtAffineElement& x : xs) a.push_back(element_json(x));
    return a;
  };
  j["adm"] = elems(r.adm);
  j["perm"] = elems(r.perm);
  j["perm_st"] = elems(r.perm_st);
  j["perm_minus_adm"] = elems(r.perm_minus_adm);
  j["perm_minus_perm_st"] = elems(r.perm_minus_perm_st);
  return j;
}

inline std::string report_json(const MuSetReport& r) {
  return report_json_value(r).dump(2) + "\n";
}

inline std::string mu_string(const Vec& mu) {
  std::string s;
  for (std::size_t i = 0; i < mu.size(); ++i) {
    if (i) s += ",";
    s += mu[i].str();
  }
  return s;
}

inline std::string report_csv_header() {
  return "datum,mu,adm,perm,perm_st,adm_subset_perm,adm_eq_perm,perm_eq_perm_st\n";
}

inline std::string report_csv_row(const MuSetReport& r) {
  std::string s = r.datum_name + ",\"" + mu_string(r.mu) + "\"," +
                  std::to_string(r.adm.size()) + "," +
                  std::to_string(r.perm.size()) + "," +
                  std::to_string(r.perm_st.size()) + "," +
                  (r.adm_subset_perm ? "true" : "false") + "," +
                  (r.adm_eq_perm ? "true" : "false") + "," +
                  (r.perm_eq_perm_st ? "true" : "false") + "\n";
  return s;
}

inline std::string report_csv(const MuSetReport& r) {
  return report_csv_header() + report_csv_row(r);
}

} // namespace alcove
