#pragma once

#include "hydra/report.hpp"

#include <iosfwd>

namespace hydra {

enum class Command { Funs, Auts, U25, LiftCheck, Bounds, Report, Genesis, VerifyAll };
enum class Format { Text, Json };

struct RunConfig {
  Command command = Command::VerifyAll;
  std::string field = "all";  // a field name or "all"
  Format format = Format::Text;
  std::optional<std::uint64_t> prime_start;
  unsigned workers = 1;
  // Replace the built-in spec of the same name, or add a new field.
  std::vector<PartialFieldSpec> specs;
  // Test hook passed through to every field report.
  std::function<void(SieveResult&)> corrupt_sieve;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<Command> parse_command(std::string_view name);
std::string command_name(Command c);

// Runs one command. Returns 0 when every executed check passed and 1
// otherwise; throws UsageError for an unknown field. Progress lines go to
// `status`.
int run(const RunConfig& config, std::ostream& out, std::ostream& status);

// Parses arguments (HYDRA_* environment variables fill unset flags) and runs
// the command. Usage errors print to `err` and return 2.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hydra
