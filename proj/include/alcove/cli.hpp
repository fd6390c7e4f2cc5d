#pragma once

// Command implementations behind the command-line tool, kept header-side so
// they are testable in process.  Every run is deterministic; exit codes:
// 0 success/pass, 1 verification failure, 2 configuration error, 3 guard
// exceeded.

#include <fstream>

#include "alcove/verify.hpp"

namespace alcove {

struct RunConfig {
  std::string command;            // describe|enumerate|verify|counterexample|draw
  std::string family = "B";
  int size = 0;                   // 0: statement default, or forced by family
  std::vector<std::int64_t> mu;   // ambient coordinates; empty = default
  std::string format = "table";   // table|json|csv|svg
  std::string statement;          // verify target
  std::string set_name = "adm";   // draw selection: adm|perm|perm_st|cone
  std::vector<int> direction;     // draw cone direction, a word in 1..rank
  std::int64_t radius = 3;
  int samples = 200;
  unsigned threads = 0;
  std::string out;                // output file; empty writes to stdout
  std::size_t max_interval = 25;
  std::size_t max_pairs = 10'000;
  std::size_t max_bfs = 500'000;
};

inline json run_config_json(const RunConfig& c) {
  json j;
  j["command"] = c.command;
  j["family"] = c.family;
  j["size"] = c.size;
  j["mu"] = c.mu;
  j["format"] = c.format;
  j["statement"] = c.statement;
  j["set"] = c.set_name;
  j["direction"] = c.direction;
  j["radius"] = c.radius;
  j["samples"] = c.samples;
  j["threads"] = c.threads;
  j["out"] = c.out;
  j["guards"] = {{"max_interval", c.max_interval},
                 {"max_pairs", c.max_pairs},
                 {"max_bfs", c.max_bfs}};
  return j;
}

inline RunConfig run_config_from_json(const json& j) {
  RunConfig c;
  c.command = j.at("command").get<std::string>();
  c.family = j.at("family").get<std::string>();
  c.size = j.at("size").get<int>();
  c.mu = j.at("mu").get<std::vector<std::int64_t>>();
  c.format = j.at("format").get<std::string>();
  c.statement = j.at("statement").get<std::string>();
  c.set_name = j.at("set").get<std::string>();
  c.direction = j.at("direction").get<std::vector<int>>();
  c.radius = j.at("radius").get<std::int64_t>();
  c.samples = j.at("samples").get<int>();
  c.threads = j.at("threads").get<unsigned>();
  c.out = j.at("out").get<std::string>();
  c.max_interval = j.at("guards").at("max_interval").get<std::size_t>();
  c.max_pairs = j.at("guards").at("max_pairs").get<std::size_t>();
  c.max_bfs = j.at("guards").at("max_bfs").get<std::size_t>();
  return c;
}

inline Family parse_family(const std::string& s) {
  if (s == "GL") return Family::GL;
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  if (s == "C") return Family::C;
  if (s == "D") return Family::D;
  if (s == "F4") return Family::F4;
  if (s == "G2") return Family::G2;
  if (s == "GSp") return Family::GSp;
  throw ConfigError("unknown family '" + s + "'");
}

inline std::shared_ptr<const RootDatum> datum_from_config(const RunConfig& c) {
  const Family f = parse_family(c.family);
  int size = c.size;
  if (size == 0) {
    if (f == Family::F4) size = 4;
    else if (f == Family::G2) size = 2;
    else throw ConfigError("--size is required for family " + c.family);
  }
  auto d = build_root_datum(f, size);
  auto& g = const_cast<RootDatum&>(*d).guards;
  g.max_interval_length = c.max_interval;
  g.max_pair_search = c.max_pairs;
  g.max_bfs_nodes = c.max_bfs;
  return d;
}

// validate mu against the datum, naming the reason for a rejection
inline Vec mu_from_config(const RootDatum& d, const RunConfig& c) {
  require(!c.mu.empty(), "mu is required for this command");
  require(c.mu.size() == d.ambient,
          "mu must have " + std::to_string(d.ambient) + " coordinates");
  Vec mu(d.ambient);
  for (std::size_t i = 0; i < d.ambient; ++i) mu[i] = Rat(c.mu[i]);
  if (!d.in_cocharacter_lattice(mu))
    throw ConfigError("mu " + mu_string(mu) + " is not in the cocharacter lattice of " +
                      d.name);
  for (std::size_t i = 0; i < d.rank(); ++i) {
    const Rat p = dot(d.simple_roots[i], mu);
    if (p < Rat(0))
      throw ConfigError("mu is not dominant: pairing with simple root " +
                        std::to_string(i + 1) + " is " + p.str());
  }
  return mu;
}

struct CommandResult {
  int exit_code = 0;
  std::string output;
};

inline std::string render_report_table(const MuSetReport& r) {
  std::string s;
  s += "datum " + r.datum_name + "  mu " + mu_string(r.mu) + "  fingerprint " +
       fingerprint_hex(r.fingerprint) + "\n";
  s += "counts: adm " + std::to_string(r.adm.size()) + ", perm " +
       std::to_string(r.perm.size()) + ", perm_st " +
       std::to_string(r.perm_st.size()) + "\n";
  s += std::string("verdicts: adm subset of perm: ") +
       (r.adm_subset_perm ? "yes" : "NO") +
       ", adm = perm: " + (r.adm_eq_perm ? "yes" : "no") +
       ", perm = perm_st: " + (r.perm_eq_perm_st ? "yes" : "no") + "\n";
  auto list = [&](const char* title, const std::vector<ExtAffineElement>& xs) {
    s += std::string(title) + " (" + std::to_string(xs.size()) + "):\n";
    for (const auto& x : xs) {
      s += "  l=" + std::to_string(length(x)) + "  t=" + mu_string(x.translation) +
           "  w=[";
      for (std::size_t i = 0; i < x.finite.word.size(); ++i) {
        if (i) s += " ";
        s += std::to_string(x.finite.word[i]);
      }
      s += "]\n";
    }
  };
  list("perm", r.perm);
  if (!r.perm_minus_adm.empty()) list("perm minus adm", r.perm_minus_adm);
  if (!r.perm_minus_perm_st.empty())
    list("perm minus perm_st", r.perm_minus_perm_st);
  return s;
}

inline CommandResult cmd_describe(const RunConfig& c) {
  auto d = datum_from_config(c);
  return {0, describe_json(*d)};
}

inline CommandResult cmd_enumerate(const RunConfig& c) {
  auto d = datum_from_config(c);
  const Vec mu = mu_from_config(*d, c);
  const MuSetReport r = compare_mu_sets(*d, mu, c.threads);
  if (c.format == "json") return {0, report_json(r)};
  if (c.format == "csv") return {0, report_csv(r)};
  if (c.format == "table") return {0, render_report_table(r)};
  throw ConfigError("unknown format '" + c.format + "' for enumerate");
}

inline std::vector<Vec> default_mu_list(const RootDatum& d) {
  auto grid = dominant_mu_grid(d, d.family == Family::A || d.family == Family::G2 ||
                                      d.family == Family::F4
                                   ? -2
                                   : 0,
                               2);
  if (grid.size() > 12) grid.resize(12);
  return grid;
}

inline Verdict run_statement(const RunConfig& c) {
  const std::string& s = c.statement;
  const unsigned threads = c.threads;
  auto datum = [&](Family def_f, int def_size) {
    RunConfig cc = c;
    if (c.statement.empty()) throw ConfigError("missing statement");
    if (c.family.empty()) cc.family = family_tag(def_f);
    if (cc.size == 0) cc.size = def_size;
    return datum_from_config(cc);
  };
  auto mu_or = [&](const RootDatum& d, std::initializer_list<std::int64_t> def) {
    if (!c.mu.empty()) {
      RunConfig cc = c;
      return mu_from_config(d, cc);
    }
    Vec mu;
    for (auto x : def) mu.push_back(Rat(x));
    return mu;
  };
  const int samples = c.samples > 0 ? c.samples : 200;
  const std::int64_t radius = c.radius > 0 ? c.radius : 3;

  if (s == "thm3.2") {
    auto d = datum(Family::B, 2);
    return verify_thm32(*d, mu_or(*d, {1, 0}), threads);
  }
  if (s == "prop4.3") {
    auto d = datum(Family::B, 2);
    return verify_prop43(*d, mu_or(*d, {1, 0}), threads);
  }
  if (s == "thm3.3") {
    RunConfig cc = c;
    if (cc.family == "B") cc.family = "GL";  // type A statement
    if (cc.size == 0) cc.size = 3;
    auto d = datum_from_config(cc);
    return verify_thm33(*d, c.mu.empty() ? Vec(d->ambient, Rat(0))
                                         : mu_from_config(*d, cc),
                        threads);
  }
  if (s == "lem4.4") {
    RunConfig cc = c;
    if (cc.family == "B") cc.family = "GL";
    if (cc.size == 0) cc.size = 3;
    return verify_lem44(*datum_from_config(cc), radius);
  }
  if (s == "lem5.3") return verify_lem53(*datum(Family::B, 2), samples, 2);
  if (s == "prop5.5") return verify_prop55(*datum(Family::B, 2), samples, 2);
  if (s == "cor5.6") return verify_cor56(*datum(Family::B, 2), samples, 3);
  if (s == "cor5.7") {
    auto d = datum(Family::B, 2);
    return verify_cor57(*d, default_mu_list(*d));
  }
  if (s == "lem5.8") return verify_lem58(*datum(Family::B, 2), samples, 2);
  if (s == "lem6.2") return verify_lem62(*datum(Family::B, 2), samples, 2);
  if (s == "lem6.3") return verify_lem63(*datum(Family::B, 2), std::size_t(radius));
  if (s == "lem7.3") {
    auto d = datum(Family::B, 2);
    return verify_lem73(*d, mu_or(*d, {2, 1}), radius);
  }
  if (s == "lem7.5") return verify_lem75(*datum(Family::B, 2), std::min(samples, 5), 2);
  if (s == "prop8.1") {
    RunConfig cc = c;
    if (cc.family == "B") cc.family = "A";
    if (cc.size == 0) cc.size = 4;
    return verify_prop81(*datum_from_config(cc));
  }
  if (s == "lem8.2") {
    auto d = datum(Family::B, 2);
    return verify_lem82(*d, default_mu_list(*d));
  }
  auto host = [&](int def_size) {
    RunConfig cc = c;
    if (cc.family == "B") cc.family = "GL";
    if (cc.size == 0) cc.size = def_size;
    require(cc.family == "GL" || cc.family == "A",
            "this statement needs a type A host");
    return datum_from_config(cc);
  };
  if (s == "prop9.1") return verify_prop91(host(4), std::size_t(radius));
  if (s == "prop9.2" || s == "lem9.2") return verify_lem92(host(4));
  if (s == "prop9.3") return verify_prop93(host(4), std::size_t(radius));
  if (s == "prop9.4" || s == "lem9.4") return verify_lem94(host(4), 2);
  if (s == "prop9.5") return verify_prop95(host(4), std::size_t(radius));
  if (s == "prop9.6") return verify_prop96(host(4), std::size_t(radius));
  if (s == "prop9.7") {
    auto h = host(4);
    const ThetaAutomorphism th = build_theta(h);
    Vec mu;
    if (!c.mu.empty()) {
      require(c.mu.size() == h->ambient, "mu dimension mismatch");
      for (auto x : c.mu) mu.push_back(Rat(x));
      require(th.fixed->in_cocharacter_lattice(mu) && th.fixed->is_dominant(mu),
              "mu must be a dominant coweight of the fixed datum");
    } else {
      mu = Vec(h->ambient, Rat(0));
      for (std::size_t i = 0; i < h->ambient / 2; ++i) mu[i] = Rat(1);
    }
    return verify_prop97(h, mu, threads);
  }
  if (s == "thm10.1")
    return verify_thm101(c.size == 0 ? 4 : c.size, radius > 2 ? 2 : radius,
                         threads);
  if (s == "sec11") return verify_sec11(threads);
  if (s == "sec11-counts") {
    Verdict v = verify_sec11(threads);
    v.statement = "sec11-counts";
    return v;
  }
  if (s == "rem4.5") return verify_rem45(radius);
  throw ConfigError("unknown statement '" + s + "'");
}

inline CommandResult cmd_verify(const RunConfig& c) {
  Verdict v = run_statement(c);
  return {v.pass ? 0 : 1, v.to_json().dump(2) + "\n"};
}

inline CommandResult cmd_counterexample(const RunConfig& c) {
  auto d = datum_from_config(c);
  json j;
  j["schema"] = "verdict/1";
  j["library_version"] = kLibraryVersion;
  j["statement"] = "counterexample";
  j["datum"] = d->name;
  const bool qualifying = d->rank() >= 4 && d->family != Family::A &&
                          d->family != Family::GL;
  if (!qualifying) {
    j["result"] = "none exists";
    j["reason"] =
        "type A data and data of rank at most 3 admit no order/dominance "
        "discrepancy pair";
    return {0, j.dump(2) + "\n"};
  }
  auto res = find_counterexample(*d);
  if (!res) {
    j["result"] = "none found";
    return {1, j.dump(2) + "\n"};
  }
  j["result"] = "witness";
  j["w"] = res->w.word;
  j["w2"] = res->w2.word;
  j["mu"] = int_vec_json(res->mu);
  j["escalation_steps"] = res->escalation;
  j["x"] = element_json(res->x);
  j["transcript"] = {{"x_permissible", res->x_permissible},
                     {"x_admissible", res->x_admissible},
                     {"length_x", res->length_x},
                     {"length_t_mu", res->length_t_mu}};
  const bool good = res->x_permissible && !res->x_admissible &&
                    res->length_x == res->length_t_mu;
  j["pass"] = good;
  return {good ? 0 : 1, j.dump(2) + "\n"};
}

inline CommandResult cmd_draw(const RunConfig& c) {
  auto d = datum_from_config(c);
  require(d->rank() == 2, "drawing requires a rank-2 datum (got rank " +
                              std::to_string(d->rank()) + ")");
  std::vector<Alcove> shaded;
  if (c.set_name == "cone") {
    FiniteWeylElement w = d->weyl_identity();
    for (int letter : c.direction) {
      require(letter >= 1 && letter <= int(d->rank()), "bad direction letter");
      w = d->weyl_compose(
          w, d->make_weyl(d->simple_reflection_mat(std::size_t(letter - 1))));
    }
    const Alcove a0 = base_alcove(*d);
    for (const auto& u : waff_ball(*d, std::size_t(2 * c.radius))) {
      const Alcove a = alcove_of(u);
      if (in_acute_cone(*d, a0, w, a)) shaded.push_back(a);
    }
  } else {
    const Vec mu = mu_from_config(*d, c);
    ExtSet set;
    if (c.set_name == "adm") set = enumerate_adm(*d, mu, c.threads);
    else if (c.set_name == "perm") set = enumerate_perm(*d, mu, c.threads);
    else if (c.set_name == "perm_st") set = enumerate_perm_st(*d, mu, c.threads);
    else throw ConfigError("unknown set '" + c.set_name + "'");
    for (const auto& x : sorted_elements(set)) shaded.push_back(alcove_of(x));
  }
  SvgOptions opt;
  opt.radius = c.radius;
  return {0, draw_svg(*d, shaded, opt)};
}

inline CommandResult run_command(const RunConfig& c) {
  try {
    if (c.command == "describe") return cmd_describe(c);
    if (c.command == "enumerate") return cmd_enumerate(c);
    if (c.command == "verify") return cmd_verify(c);
    if (c.command == "counterexample") return cmd_counterexample(c);
    if (c.command == "draw") return cmd_draw(c);
    throw ConfigError("unknown command '" + c.command + "'");
  } catch (const GuardError& e) {
    json j = {{"error", {{"kind", "guard"}, {"message", e.what()}}}};
    return {3, j.dump(2) + "\n"};
  } catch (const ConfigError& e) {
    json j = {{"error", {{"kind", "config"}, {"message", e.what()}}}};
    return {2, j.dump(2) + "\n"};
  } catch (const std::exception& e) {
    json j = {{"error", {{"kind", "internal"}, {"message", e.what()}}}};
    return {2, j.dump(2) + "\n"};
  }
}

inline int write_result(const CommandResult& r, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(r.output.c_str(), stdout);
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::fputs("cannot open output file\n", stderr);
      return 2;
    }
    f << r.output;
  }
  return r.exit_code;
}

} // namespace alcove
