// Command-line driver: enumeration, verification, counterexample search and
// alcove pictures for the supported root data.

#include <CLI11.hpp>

#include "alcove/cli.hpp"

namespace {

std::vector<std::int64_t> parse_int_list(const std::string& s) {
  std::vector<std::int64_t> out;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t next = s.find(',', pos);
    if (next == std::string::npos) next = s.size();
    out.push_back(std::stoll(s.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

void add_common(CLI::App* cmd, alcove::RunConfig& cfg, std::string& mu_str) {
  cmd->add_option("--family", cfg.family,
                  "root datum family: GL A B C D F4 G2 GSp");
  cmd->add_option("--size", cfg.size, "family size parameter");
  cmd->add_option("--mu", mu_str, "coweight, comma separated ambient coordinates");
  cmd->add_option("--threads", cfg.threads, "worker threads (0 = all cores)");
  cmd->add_option("--out", cfg.out, "output file (default: stdout)");
  cmd->add_option("--max-interval", cfg.max_interval,
                  "guard: maximal length for interval materialization");
  cmd->add_option("--max-pairs", cfg.max_pairs,
                  "guard: maximal Weyl order for pair searches");
  cmd->add_option("--max-bfs", cfg.max_bfs, "guard: maximal strong-set nodes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alcove: exact alcove combinatorics of extended affine Weyl groups"};
  app.require_subcommand(1);

  alcove::RunConfig cfg;
  std::string mu_str;

  auto* describe = app.add_subcommand("describe", "print a root datum as JSON");
  add_common(describe, cfg, mu_str);

  auto* enumerate =
      app.add_subcommand("enumerate", "admissible/permissible sets for mu");
  add_common(enumerate, cfg, mu_str);
  enumerate->add_option("--format", cfg.format, "table, json, or csv");

  auto* verify = app.add_subcommand("verify", "run a named verification statement");
  verify->add_option("statement", cfg.statement, "statement id, e.g. thm3.3")
      ->required();
  add_common(verify, cfg, mu_str);
  verify->add_option("--radius", cfg.radius, "ball radius or depth parameter");
  verify->add_option("--samples", cfg.samples, "randomized sample count");

  auto* counter = app.add_subcommand(
      "counterexample", "search a permissible-but-not-admissible witness");
  add_common(counter, cfg, mu_str);

  auto* draw = app.add_subcommand("draw", "SVG picture of a rank-2 alcove set");
  add_common(draw, cfg, mu_str);
  draw->add_option("--set", cfg.set_name, "adm, perm, perm_st, or cone");
  draw->add_option("--radius", cfg.radius, "wall radius of the picture");
  std::string direction_str;
  draw->add_option("--direction", direction_str,
                   "cone direction as a word in simple reflections, e.g. 1,2");

  CLI11_PARSE(app, argc, argv);

  for (CLI::App* sub : app.get_subcommands()) cfg.command = sub->get_name();
  try {
    if (!mu_str.empty())
      for (std::int64_t x : parse_int_list(mu_str)) cfg.mu.push_back(x);
    if (!direction_str.empty())
      for (std::int64_t x : parse_int_list(direction_str))
        cfg.direction.push_back(int(x));
  } catch (const std::exception&) {
    std::fputs("{\"error\":{\"kind\":\"config\",\"message\":\"bad number list\"}}\n",
               stderr);
    return 2;
  }

  const alcove::CommandResult r = alcove::run_command(cfg);
  return alcove::write_result(r, cfg.out);
}
