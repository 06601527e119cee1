#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "ulrich_lab/cli/commands.hpp"
#include "ulrich_lab/error.hpp"

using namespace ulrich_lab;
using namespace ulrich_lab::cli;

namespace {

struct RawOptions {
  int d = 4;
  int r = 2;
  int k_max = 10;
  std::string c1_sq, c2, c1, target, format = "markdown", out;
  bool unordered = false;
  long cases = 1000;
  std::uint64_t rng_seed = 20240521;
};

void add_common(CLI::App* sub, RawOptions& o) {
  sub->add_option("--d", o.d, "surface degree, 3..8")->capture_default_str();
  sub->add_option("--r", o.r, "rank of the seed, or number of parts for decompose")->capture_default_str();
  sub->add_option("--k-max", o.k_max, "last syzygy index, at most 200")->capture_default_str();
  sub->add_option("--c1-sq", o.c1_sq, "c1^2 of a numeric seed (default r*d)");
  sub->add_option("--c2", o.c2, "c2 of the seed (default: the Ulrich value)");
  sub->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "markdown"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "write output to this path instead of stdout");
}

Integer to_integer(const std::string& text, const char* flag) {
  auto v = parse_integer(text);
  if (!v) throw CLI::ValidationError(flag, "not an integer: " + text);
  return *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical invariants of Ulrich bundles and their syzygies on del Pezzo surfaces", "ulrich-lab"};
  app.require_subcommand(1);
  RawOptions o;

  const std::map<std::string, std::string> commands{
      {"sequence", "ranks N_k by recurrence and closed form"},
      {"syzygy", "Chern data of the iterated syzygy bundles"},
      {"table-main2", "recompute the rank-2 moduli table and diff against the fixture"},
      {"table-corcubic", "recompute the rank-4 cubic-surface table, with random twists"},
      {"cubics", "list the 72 twisted cubic classes"},
      {"decompose", "stable-sum decompositions of a class into twisted cubics"},
      {"check", "run every property suite"},
  };
  for (const auto& [name, help] : commands) {
    auto* sub = app.add_subcommand(name, help);
    add_common(sub, o);
    if (name == "syzygy") sub->add_option("--c1", o.c1, "explicit seed class (a;b1,...,bt)");
    if (name == "decompose") {
      sub->add_option("--target", o.target, "class on X_3, e.g. (4;2,1,1,1,1,0)")->required();
      sub->add_flag("--unordered", o.unordered, "one ordering per multiset of parts");
    }
    if (name == "check") sub->add_option("--cases", o.cases, "randomized cases per property")->capture_default_str();
    if (name == "check" || name == "table-corcubic") {
      sub->add_option("--seed", o.rng_seed, "random seed")->capture_default_str();
    }
  }

  RunConfig cfg;
  try {
    app.parse(argc, argv);
    cfg.command = parse_command(app.get_subcommands().front()->get_name());
    cfg.d = o.d;
    cfg.r = o.r;
    cfg.k_max = o.k_max;
    if (!o.c1_sq.empty()) cfg.seed_c1_sq = to_integer(o.c1_sq, "--c1-sq");
    if (!o.c2.empty()) cfg.seed_c2 = to_integer(o.c2, "--c2");
    if (!o.c1.empty()) cfg.c1 = o.c1;
    if (!o.target.empty()) cfg.target = o.target;
    cfg.unordered = o.unordered;
    cfg.cases = o.cases;
    cfg.rng_seed = o.rng_seed;
    cfg.format = parse_output_format(o.format);
    if (!o.out.empty()) cfg.output_path = o.out;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (const char* seed_file = std::getenv(kSeedFileEnv); seed_file && *seed_file) cfg.seed_file = seed_file;
  return run(cfg, std::cout, std::cerr);
}
