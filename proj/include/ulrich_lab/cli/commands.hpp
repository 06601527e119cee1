#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "ulrich_lab/chern.hpp"
#include "ulrich_lab/cli/table.hpp"

namespace ulrich_lab::cli {

enum class Command { Sequence, Syzygy, TableMain2, TableCorcubic, Cubics, Decompose, Check };

Command parse_command(std::string_view text);
std::string_view to_string(Command command);

constexpr int kMaxKMax = 200;
constexpr const char* kSeedFileEnv = "ULRICH_LAB_SEED_FILE";

struct RunConfig {
  Command command = Command::Check;
  int d = 4;
  int r = 2;
  int k_max = 10;
  /// Numeric seed for `syzygy`: c1^2 defaults to r d, c2 to the Ulrich value.
  std::optional<Integer> seed_c1_sq;
  std::optional<Integer> seed_c2;
  /// Explicit seed class for `syzygy`, "(a;b1,...)"; overrides --d.
  std::optional<std::string> c1;
  /// Target class for `decompose`.
  std::optional<std::string> target;
  bool unordered = false;
  long cases = 1000;
  std::uint64_t rng_seed = 20240521;
  OutputFormat format = OutputFormat::Markdown;
  std::optional<std::string> output_path;
  /// JSON array of BundleNumerics added to the `check` seeds.
  std::optional<std::string> seed_file;
};

/// Throws InvalidArgument / DegreeOutOfRange on a bad configuration.
void validate(const RunConfig& cfg);

/// Each command writes its output to `out` and returns the exit code:
/// 0 when every emitted check passed, 1 on a deviation.
int cmd_sequence(const RunConfig& cfg, std::ostream& out);
int cmd_syzygy(const RunConfig& cfg, std::ostream& out);
int cmd_table_main2(const RunConfig& cfg, std::ostream& out);
int cmd_table_corcubic(const RunConfig& cfg, std::ostream& out);
int cmd_cubics(const RunConfig& cfg, std::ostream& out);
int cmd_decompose(const RunConfig& cfg, std::ostream& out);
int cmd_check(const RunConfig& cfg, std::ostream& out);

/// Validates, dispatches and routes output to cfg.output_path when set.
/// Library errors are reported on `err` with exit code 2.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Reads the seed file named by cfg.seed_file, if any.
std::vector<BundleNumerics> load_seed_file(const RunConfig& cfg);

}  // namespace ulrich_lab::cli
