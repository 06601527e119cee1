#include "ulrich_lab/cli/commands.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "ulrich_lab/cli/checks.hpp"
#include "ulrich_lab/cli/fixtures.hpp"
#include "ulrich_lab/cubic.hpp"
#include "ulrich_lab/error.hpp"
#include "ulrich_lab/json_io.hpp"
#include "ulrich_lab/syzygy.hpp"
#include "ulrich_lab/ulrich.hpp"

namespace ulrich_lab::cli {

namespace {

const char* scope_label(int d) { return d == 8 ? "extrapolated" : "theorem"; }

int finish(const Table& table, bool ok, const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == OutputFormat::Json) {
    Json j = table.to_json();
    j["ok"] = ok;
    out << j.dump(2) << '\n';
  } else {
    write_table(out, table, cfg.format);
  }
  return ok ? 0 : 1;
}

}  // namespace

Command parse_command(std::string_view text) {
  for (auto c : {Command::Sequence, Command::Syzygy, Command::TableMain2, Command::TableCorcubic, Command::Cubics,
                 Command::Decompose, Command::Check}) {
    if (to_string(c) == text) return c;
  }
  throw Error(ErrorCode::InvalidArgument, "unknown command '" + std::string(text) + "'");
}

std::string_view to_string(Command command) {
  switch (command) {
    case Command::Sequence: return "sequence";
    case Command::Syzygy: return "syzygy";
    case Command::TableMain2: return "table-main2";
    case Command::TableCorcubic: return "table-corcubic";
    case Command::Cubics: return "cubics";
    case Command::Decompose: return "decompose";
    case Command::Check: return "check";
  }
  return "?";
}

void validate(const RunConfig& cfg) {
  if (cfg.k_max < -1 || cfg.k_max > kMaxKMax) {
    throw Error(ErrorCode::InvalidArgument,
                "--k-max must lie in [-1, " + std::to_string(kMaxKMax) + "], got " + std::to_string(cfg.k_max));
  }
  if (cfg.r < 1) throw Error(ErrorCode::InvalidArgument, "--r must be positive");
  if (cfg.cases < 1) throw Error(ErrorCode::InvalidArgument, "--cases must be positive");
  (void)DelPezzoSurface(cfg.d);
}

int cmd_sequence(const RunConfig& cfg, std::ostream& out) {
  Table table{"rank sequence N_k", {"k", "recurrence", "closed_form", "match", "scope"}};
  bool ok = true;
  for (int k = -1; k <= cfg.k_max; ++k) {
    const Integer rec = rank_by_recurrence(cfg.d, cfg.r, k);
    const Integer closed = rank_closed_form(cfg.d, cfg.r, k);
    ok = ok && rec == closed;
    table.add_row({Integer(k), rec, closed, rec == closed, std::string(scope_label(cfg.d))});
  }
  return finish(table, ok, cfg, out);
}

int cmd_syzygy(const RunConfig& cfg, std::ostream& out) {
  std::optional<SyzygyTrace> trace;
  if (cfg.c1) {
    const DivisorClass c1 = parse_divisor(*cfg.c1);
    const DelPezzoSurface s(degree_of(c1));
    const Integer c1_sq = intersect(c1, c1);
    const Integer c2 = cfg.seed_c2 ? *cfg.seed_c2 : ulrich_c2(cfg.r, c1_sq, s);
    trace = iterate_syzygy(BundleNumerics(cfg.r, c1, c2), s, cfg.k_max);
  } else {
    const DelPezzoSurface s(cfg.d);
    const Integer c1_sq = cfg.seed_c1_sq ? *cfg.seed_c1_sq : Integer(cfg.r * cfg.d);
    const Integer c2 = cfg.seed_c2 ? *cfg.seed_c2 : ulrich_c2(cfg.r, c1_sq, s);
    trace = iterate_syzygy(NumericClassData{cfg.r, c1_sq, cfg.r * cfg.d, c2}, s, cfg.k_max);
  }
  const auto drift = discriminant_drift(*trace);
  bool ok = true;
  for (const auto& v : drift) ok = ok && v == drift.front();

  const int d = trace->surface().degree();
  if (cfg.format == OutputFormat::Json) {
    Json j = to_json(*trace);
    j["scope"] = scope_label(d);
    j["ok"] = ok;
    out << j.dump(2) << '\n';
    return ok ? 0 : 1;
  }
  const bool with_class = trace->entries().front().bundle.has_value();
  Table table{"syzygy trace on X_" + std::to_string(d) + " (" + scope_label(d) + ")",
              {"k", "rank", "c1_sq", "c1_dot_H", "c2", "delta", "drift"}};
  if (with_class) table.columns.push_back("c1");
  for (const auto& step : trace->entries()) {
    std::vector<Cell> row{Integer(step.k),     step.data.rank,          step.data.c1_sq, step.data.c1_dot_H,
                          step.data.c2,       discriminant(step.data), drift[step.k + 1]};
    if (with_class) row.emplace_back(format_divisor(step.bundle->c1));
    table.add_row(std::move(row));
  }
  return finish(table, ok, cfg, out);
}

int cmd_table_main2(const RunConfig& cfg, std::ostream& out) {
  Table table{"rank-2 Ulrich moduli on X_d",
              {"d", "c1_sq", "c2", "c2_expected", "dim", "dim_expected", "seed_c1", "ulrich", "match"}};
  bool ok = true;
  for (const auto& row : main2_fixture()) {
    const DelPezzoSurface s(row.d);
    const Integer c2 = ulrich_c2(2, row.c1_sq, s);
    const Integer dim = expected_moduli_dim(NumericClassData{2, row.c1_sq, 2 * row.d, c2});
    const auto c1 = find_class(s, 2 * row.d, row.c1_sq);
    const bool ulrich = c1 && is_ulrich_candidate(BundleNumerics(2, *c1, c2), s);
    const bool match = c2 == row.c2 && dim == row.dim && ulrich;
    ok = ok && match;
    table.add_row({Integer(row.d), Integer(row.c1_sq), c2, Integer(row.c2), dim, Integer(row.dim),
                   c1 ? format_divisor(*c1) : std::string("none"), ulrich, match});
  }
  return finish(table, ok, cfg, out);
}

int cmd_table_corcubic(const RunConfig& cfg, std::ostream& out) {
  Table table{"rank-4 moduli on the cubic surface",
              {"row", "twist", "rank", "c1", "c2", "c2_expected", "dim", "dim_expected", "match"}};
  const auto& s = cubic_surface();
  std::mt19937_64 rng(cfg.rng_seed);
  std::uniform_int_distribution<int> coord(-3, 3);
  std::vector<DivisorClass> twists;
  for (int i = 0; i < 5; ++i) {
    std::vector<Integer> b(6);
    for (auto& v : b) v = coord(rng);
    twists.emplace_back(coord(rng), std::move(b));
  }

  bool ok = true;
  int index = 0;
  for (const auto& row : corcubic_fixture()) {
    ++index;
    const BundleNumerics e(2, row.ulrich_c1, row.ulrich_c2);
    const auto pair = cubic_moduli_pair(e);
    const bool base_ok = pair.partner == BundleNumerics(4, -row.ulrich_c1, row.partner_c2) && pair.dim == row.dim &&
                         decompose_stable_sum(row.ulrich_c1, 2).size() > 0;
    ok = ok && base_ok;
    table.add_row({Integer(index), format_divisor(s.zero()), pair.partner.rank, format_divisor(pair.partner.c1),
                   pair.partner.c2, Integer(row.partner_c2), pair.dim, Integer(row.dim), base_ok});
    for (const auto& twist : twists) {
      const auto twisted = corcubic_row(pair.partner, twist);
      // c2 = c2_0 + 6 c1'^2 - 3 c1(E).c1'
      const Integer expected_c2 = row.partner_c2 + 6 * intersect(twist, twist) - 3 * intersect(row.ulrich_c1, twist);
      const Integer dim = expected_moduli_dim(twisted);
      const bool match = twisted.c1 == -row.ulrich_c1 + 4 * twist && twisted.c2 == expected_c2 && dim == row.dim;
      ok = ok && match;
      table.add_row({Integer(index), format_divisor(twist), twisted.rank, format_divisor(twisted.c1), twisted.c2,
                     expected_c2, dim, Integer(row.dim), match});
    }
  }
  return finish(table, ok, cfg, out);
}

int cmd_cubics(const RunConfig& cfg, std::ostream& out) {
  const auto& s = cubic_surface();
  Table table{"twisted cubic classes on X_3", {"index", "type", "class", "self_intersection", "degree", "K_dot"}};
  const auto& cubics = twisted_cubics();
  bool ok = cubics.size() == 72;
  int index = 0;
  for (const auto& t : cubics) {
    const Integer sq = intersect(t.cls, t.cls), deg = intersect(t.cls, s.anticanonical_class()),
                  kd = intersect(t.cls, s.canonical_class());
    ok = ok && sq == 1 && deg == 3 && kd == -3;
    table.add_row({Integer(++index), std::string(to_string(t.type)), format_divisor(t.cls), sq, deg, kd});
  }
  return finish(table, ok, cfg, out);
}

int cmd_decompose(const RunConfig& cfg, std::ostream& out) {
  if (!cfg.target) throw Error(ErrorCode::InvalidArgument, "decompose needs --target");
  const DivisorClass target = parse_divisor(*cfg.target, cubic_surface());
  const DecompositionSet set{
      target, cfg.r,
      decompose_stable_sum(target, cfg.r, cfg.unordered ? DecompositionMode::Unordered : DecompositionMode::Ordered)};
  bool ok = true;
  for (const auto& dec : set.tuples) ok = ok && satisfies_stable_sum_conditions(dec.parts, target);

  if (cfg.format == OutputFormat::Json) {
    out << to_json(set).dump(2) << '\n';
    return ok ? 0 : 1;
  }
  Table table{"stable-sum decompositions of " + format_divisor(target), {"index"}};
  for (int i = 1; i <= cfg.r; ++i) table.columns.push_back("T" + std::to_string(i));
  int index = 0;
  for (const auto& dec : set.tuples) {
    std::vector<Cell> row{Integer(++index)};
    for (const auto& p : dec.parts) row.emplace_back(format_divisor(p.cls) + " " + std::string(to_string(p.type)));
    table.add_row(std::move(row));
  }
  table.notes.push_back("count: " + std::to_string(set.tuples.size()));
  return finish(table, ok, cfg, out);
}

std::vector<BundleNumerics> load_seed_file(const RunConfig& cfg) {
  if (!cfg.seed_file) return {};
  std::ifstream in(*cfg.seed_file);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read seed file " + *cfg.seed_file);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "seed file " + *cfg.seed_file + ": " + e.what());
  }
  return seeds_from_json(j);
}

int cmd_check(const RunConfig& cfg, std::ostream& out) {
  CheckOptions options;
  options.cases = cfg.cases;
  options.rng_seed = cfg.rng_seed;
  options.extra_seeds = load_seed_file(cfg);
  const auto results = run_property_checks(options);

  Table table{"property checks", {"module", "property", "cases", "failures", "status", "first_failure"}};
  bool ok = true;
  for (const auto& r : results) {
    ok = ok && r.passed();
    table.add_row({r.module, r.name, Integer(r.cases), Integer(r.failures), std::string(r.passed() ? "pass" : "FAIL"),
                   r.first_failure});
  }
  return finish(table, ok, cfg, out);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    validate(cfg);
    std::ostringstream buffer;
    int code = 0;
    switch (cfg.command) {
      case Command::Sequence: code = cmd_sequence(cfg, buffer); break;
      case Command::Syzygy: code = cmd_syzygy(cfg, buffer); break;
      case Command::TableMain2: code = cmd_table_main2(cfg, buffer); break;
      case Command::TableCorcubic: code = cmd_table_corcubic(cfg, buffer); break;
      case Command::Cubics: code = cmd_cubics(cfg, buffer); break;
      case Command::Decompose: code = cmd_decompose(cfg, buffer); break;
      case Command::Check: code = cmd_check(cfg, buffer); break;
    }
    if (cfg.output_path) {
      std::ofstream file(*cfg.output_path, std::ios::binary);
      if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write " + *cfg.output_path);
      file << buffer.str();
    } else {
      out << buffer.str();
    }
    if (code != 0) err << "error: " << to_string(cfg.command) << " found deviations\n";
    return code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace ulrich_lab::cli
