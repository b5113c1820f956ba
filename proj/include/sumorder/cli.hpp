#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "sumorder/group.hpp"
#include "sumorder/search.hpp"

namespace sumorder {

enum class Command { Order, Verify, Rectify, Sweep, Count };
enum class OutputFormat { Human, Json, Csv };

/// A fully parsed job: the command, the ambient group, and the input sets
/// (for verify, each set is read as an ordering). Constructed by run_cli
/// from flags, or directly by embedding callers.
struct JobSpec {
  Command command = Command::Order;
  GroupSpec group = GroupSpec::integers();
  std::vector<std::vector<Element>> sets;
  std::optional<int> ell;              // rectify override
  std::optional<SweepEngine> engine;   // order / sweep override
  OutputFormat output = OutputFormat::Human;
  std::optional<int> max_size;         // sweep
  std::optional<std::uint64_t> seed;   // reserved for corpus generation
  bool force = false;                  // lift resource guards
  bool timing = false;                 // add wall-clock fields to JSON
};

/// Executes the job, writing the report to `out` and diagnostics to `err`.
/// Exit code 0 on success, 1 when no ordering/certificate exists (or a
/// sweep finds counterexamples), 2 on input errors.
int run(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Flag parsing front end over run(). Same exit-code contract; CLI parse
/// problems map to 2.
int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err);

}  // namespace sumorder
