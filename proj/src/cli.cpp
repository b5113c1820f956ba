#include "sumorder/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <string>

#include "CLI11.hpp"
#include "sumorder/errors.hpp"
#include "sumorder/json_io.hpp"
#include "sumorder/parse.hpp"
#include "sumorder/prime_field.hpp"
#include "sumorder/rectify.hpp"
#include "sumorder/sequence.hpp"

namespace sumorder {
namespace {

/// The exhaustive lambda scan is O(p * k log k); beyond this p the CLI asks
/// for an explicit override instead of silently grinding.
constexpr std::int64_t kCliDilationPrimeGuard = std::int64_t{1} << 26;

std::string command_name(Command c) {
  switch (c) {
    case Command::Order:
      return "order";
    case Command::Verify:
      return "verify";
    case Command::Rectify:
      return "rectify";
    case Command::Sweep:
      return "sweep";
    case Command::Count:
      return "count";
  }
  throw internal_error("unhandled command tag");
}

std::size_t lifted_guard(std::size_t n, bool force, std::size_t fallback) {
  return force ? std::max(fallback, n) : fallback;
}

void check_dilation_guard(const JobSpec& job) {
  if (job.group.kind() == GroupKind::PrimeField &&
      job.group.modulus() >= kCliDilationPrimeGuard && !job.force) {
    throw guard_error(
        "the dilation scan over p = " + std::to_string(job.group.modulus()) +
        " exceeds the default limit of 2^26; pass --force to run it anyway");
  }
}

ordered_json json_shell(const JobSpec& job) {
  ordered_json doc;
  doc["command"] = command_name(job.command);
  doc["group"] = job.group.name();
  return doc;
}

void emit_json(std::ostream& out, const ordered_json& doc) {
  out << doc.dump(2) << "\n";
}

int cmd_order(const JobSpec& job, std::ostream& out) {
  const bool forced_backtracking =
      job.engine && *job.engine == SweepEngine::Backtracking;
  if (!forced_backtracking) check_dilation_guard(job);

  ordered_json results = ordered_json::array();
  bool first = true;
  for (const std::vector<Element>& set : job.sets) {
    SequencingResult result;
    if (forced_backtracking) {
      std::optional<Ordering> found = backtrack_order(
          set, job.group, nullptr,
          lifted_guard(set.size(), job.force, kBacktrackSizeGuard));
      if (!found) {
        throw no_ordering_found(
            "exhaustive search found no valid ordering for {" +
            format_element_list(set) + "} in " + job.group.name());
      }
      result = SequencingResult{std::move(*found), Method::Backtracking,
                                std::nullopt, std::nullopt, true};
    } else {
      result = sequence_subset(set, job.group, nullptr, job.force);
    }

    if (job.output == OutputFormat::Json) {
      ordered_json entry;
      entry["set"] = elements_to_json(set);
      entry.update(result_to_json(result));
      results.push_back(std::move(entry));
    } else {
      if (!first) out << "\n";
      first = false;
      out << "set: " << format_element_list(set) << "\n";
      out << "ordering: " << format_element_list(result.ordering.elems)
          << "\n";
      out << "partial sums: "
          << format_element_list(partial_sums(result.ordering)) << "\n";
      out << "method: " << method_name(result.method) << "\n";
      if (result.layout) out << "layout: " << *result.layout << "\n";
      if (result.certificate) {
        const RectCertificate& cert = *result.certificate;
        out << "certificate: lambda=" << cert.lambda
            << " window_start=" << cert.window_start
            << " width=" << cert.width << " ell=" << cert.ell << "\n";
      }
      out << "verified: " << (result.verified ? "true" : "false") << "\n";
    }
  }

  if (job.output == OutputFormat::Json) {
    ordered_json doc = json_shell(job);
    doc["results"] = std::move(results);
    emit_json(out, doc);
  }
  return 0;
}

int cmd_verify(const JobSpec& job, std::ostream& out) {
  ordered_json results = ordered_json::array();
  bool first = true;
  for (const std::vector<Element>& elems : job.sets) {
    const Ordering ordering{job.group, elems};
    const ValidityReport report = analyze(ordering);

    if (job.output == OutputFormat::Json) {
      ordered_json entry;
      entry["ordering"] = elements_to_json(elems);
      entry.update(validity_to_json(report));
      results.push_back(std::move(entry));
    } else {
      if (!first) out << "\n";
      first = false;
      out << "ordering: " << format_element_list(elems) << "\n";
      out << "valid: " << (report.valid ? "true" : "false");
      if (report.first_collision) {
        out << " (first collision: s_" << report.first_collision->first
            << " = s_" << report.first_collision->second << ")";
      }
      out << "\n";
      out << "two_sided: " << (report.two_sided ? "true" : "false") << "\n";
      out << "zero_blocks:";
      if (report.zero_blocks.empty()) {
        out << " (none)";
      } else {
        for (const auto& [i, j] : report.zero_blocks) {
          out << " (" << i << "," << j << ")";
        }
      }
      out << "\n";
    }
  }

  if (job.output == OutputFormat::Json) {
    ordered_json doc = json_shell(job);
    doc["results"] = std::move(results);
    emit_json(out, doc);
  }
  return 0;
}

int cmd_rectify(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.group.kind() != GroupKind::PrimeField) {
    throw input_error("rectify needs --prime");
  }
  check_dilation_guard(job);
  const std::int64_t p = job.group.modulus();

  ordered_json results = ordered_json::array();
  bool first = true;
  for (const std::vector<Element>& set : job.sets) {
    std::vector<std::int64_t> residues;
    residues.reserve(set.size() + 1);
    bool has_zero = false;
    for (const Element& e : set) {
      residues.push_back(e.coords()[0]);
      has_zero = has_zero || e.coords()[0] == 0;
    }
    const std::size_t nonzero = residues.size() - (has_zero ? 1 : 0);
    if (!has_zero) residues.push_back(0);
    const int ell =
        job.ell.value_or(std::max(2, static_cast<int>(nonzero) - 1));

    std::optional<RectCertificate> cert = find_dilation(residues, p, ell);
    if (!cert) {
      err << "no dilation of {" << format_element_list(set)
          << "} mod " << p << " admits an ell=" << ell
          << " rectification window\n";
      return 1;
    }
    // freiman_verify re-checks the certificate from scratch; skipped only
    // when the exhaustive bound makes it infeasible.
    bool freiman_checked = false;
    try {
      if (!freiman_verify(*cert, ell)) {
        throw internal_error("certificate failed independent verification");
      }
      freiman_checked = true;
    } catch (const guard_error&) {
    }

    if (job.output == OutputFormat::Json) {
      ordered_json entry;
      entry["set"] = elements_to_json(set);
      entry["ell"] = ell;
      entry["certificate"] = certificate_to_json(*cert);
      if (freiman_checked) entry["freiman_verified"] = true;
      results.push_back(std::move(entry));
    } else {
      if (!first) out << "\n";
      first = false;
      out << "set: " << format_element_list(set) << "\n";
      out << "certificate: p=" << cert->p << " ell=" << cert->ell
          << " lambda=" << cert->lambda
          << " window_start=" << cert->window_start
          << " width=" << cert->width << "\n";
      out << "mapping:";
      for (const auto& [source, image] : cert->mapping) {
        out << " " << source << "->" << image;
      }
      out << "\n";
      out << "freiman verified: "
          << (freiman_checked ? "true" : "skipped (domain too large)")
          << "\n";
    }
  }

  if (job.output == OutputFormat::Json) {
    ordered_json doc = json_shell(job);
    doc["results"] = std::move(results);
    emit_json(out, doc);
  }
  return 0;
}

int cmd_sweep(const JobSpec& job, std::ostream& out, std::ostream& err) {
  if (job.group.kind() != GroupKind::PrimeField) {
    throw input_error("sweep needs --prime");
  }
  if (!job.sets.empty()) throw input_error("sweep takes no input sets");
  const std::int64_t p = job.group.modulus();
  const int max_size = job.max_size.value_or(static_cast<int>(p - 1));
  const SweepEngine engine = job.engine.value_or(SweepEngine::Backtracking);

  const SweepReport report = sweep(p, max_size, engine, job.force);

  if (job.output == OutputFormat::Json) {
    ordered_json doc = json_shell(job);
    doc.update(sweep_to_json(report, job.timing));
    emit_json(out, doc);
  } else if (job.output == OutputFormat::Csv) {
    out << sweep_to_csv(report);
  } else {
    out << "sweep of F_" << p << " up to size " << report.max_size
        << " with engine " << engine_name(report.engine) << "\n";
    out << std::left << std::setw(6) << "size" << std::setw(10) << "subsets"
        << std::setw(8) << "all_ok" << std::setw(14) << "total_nodes"
        << std::setw(12) << "max_nodes" << "elapsed_s" << "\n";
    for (const auto& [size, stats] : report.per_size) {
      out << std::left << std::setw(6) << size << std::setw(10)
          << stats.subset_count << std::setw(8)
          << (stats.all_sequenceable ? "yes" : "NO") << std::setw(14)
          << stats.total_backtrack_nodes << std::setw(12)
          << stats.max_backtrack_nodes << std::fixed << std::setprecision(3)
          << stats.elapsed_seconds << "\n";
    }
    out << "counterexamples: " << report.counterexamples.size() << "\n";
  }

  if (!report.counterexamples.empty()) {
    err << "CONJECTURE COUNTEREXAMPLE: " << report.counterexamples.size()
        << " subset(s) of F_" << p
        << " have no valid ordering; this needs independent confirmation\n";
    for (const auto& subset : report.counterexamples) {
      err << "  {";
      for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i) err << ",";
        err << subset[i];
      }
      err << "}\n";
    }
    return 1;
  }
  return 0;
}

int cmd_count(const JobSpec& job, std::ostream& out) {
  ordered_json results = ordered_json::array();
  bool first = true;
  for (const std::vector<Element>& set : job.sets) {
    const std::uint64_t count = count_valid_orderings(
        set, job.group, lifted_guard(set.size(), job.force, kCountSizeGuard));
    if (job.output == OutputFormat::Json) {
      ordered_json entry;
      entry["set"] = elements_to_json(set);
      entry["count"] = count;
      results.push_back(std::move(entry));
    } else {
      if (!first) out << "\n";
      first = false;
      out << "set: " << format_element_list(set) << "\n";
      out << "count: " << count << "\n";
    }
  }

  if (job.output == OutputFormat::Json) {
    ordered_json doc = json_shell(job);
    doc["results"] = std::move(results);
    emit_json(out, doc);
  }
  return 0;
}

}  // namespace

int run(const JobSpec& job, std::ostream& out, std::ostream& err) {
  try {
    if (job.output == OutputFormat::Csv && job.command != Command::Sweep) {
      throw input_error("csv output is only available for sweep");
    }
    switch (job.command) {
      case Command::Order:
        return cmd_order(job, out);
      case Command::Verify:
        return cmd_verify(job, out);
      case Command::Rectify:
        return cmd_rectify(job, out, err);
      case Command::Sweep:
        return cmd_sweep(job, out, err);
      case Command::Count:
        return cmd_count(job, out);
    }
    throw internal_error("unhandled command tag");
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const no_ordering_found& e) {
    err << "NO VALID ORDERING: " << e.what() << "\n";
    return 1;
  }
}

namespace {

struct RawFlags {
  std::optional<std::int64_t> prime;
  std::optional<std::int64_t> cyclic;
  std::optional<std::string> group_name;
  std::vector<std::string> sets;
  std::vector<std::string> orderings;
  std::optional<std::string> file;
  std::optional<std::string> engine;
  std::string output = "human";
  std::optional<int> ell;
  std::optional<int> max_size;
  std::optional<std::uint64_t> seed;
  bool force = false;
  bool timing = false;
};

void add_group_flags(CLI::App* sub, RawFlags& f, bool prime_only) {
  CLI::Option* prime =
      sub->add_option("--prime", f.prime, "Work in F_p for this prime p");
  if (prime_only) {
    prime->required();
    return;
  }
  CLI::Option* cyclic =
      sub->add_option("--cyclic", f.cyclic, "Work in the cyclic group Z_n");
  CLI::Option* group = sub->add_option(
      "--group", f.group_name,
      "Group by name: \"Z\", \"Z^2\", \"F_13\", \"Z_6\", \"Z_6 x Z\"");
  prime->excludes(cyclic)->excludes(group);
  cyclic->excludes(group);
}

void add_common_flags(CLI::App* sub, RawFlags& f) {
  sub->add_option("--output", f.output, "Report format")
      ->check(CLI::IsMember({"human", "json", "csv"}))
      ->capture_default_str();
  sub->add_option("--seed", f.seed,
                  "Seed for randomized corpus generation (reserved)");
  sub->add_flag("--force", f.force, "Lift resource guards");
  sub->add_flag("--timing", f.timing,
                "Include wall-clock fields in JSON output");
}

void add_input_flags(CLI::App* sub, RawFlags& f, bool ordering_flavored) {
  sub->add_option("--set", f.sets,
                  ordering_flavored
                      ? "Inline ordering (alias of --set-ordering)"
                      : "Inline element set; repeatable");
  if (ordering_flavored) {
    sub->add_option("--set-ordering", f.orderings,
                    "Inline ordering to verify; repeatable");
  }
  sub->add_option("--file", f.file,
                  "Read one set per line from this file ('#' comments)");
}

GroupSpec resolve_group(const RawFlags& f) {
  if (f.prime) return GroupSpec::prime_field(*f.prime);
  if (f.cyclic) return GroupSpec::cyclic(*f.cyclic);
  if (f.group_name) return parse_group(*f.group_name);
  return GroupSpec::integers();
}

OutputFormat resolve_output(const std::string& name) {
  if (name == "human") return OutputFormat::Human;
  if (name == "json") return OutputFormat::Json;
  return OutputFormat::Csv;
}

JobSpec build_job(Command command, const RawFlags& f, bool wants_sets) {
  JobSpec job;
  job.command = command;
  job.group = resolve_group(f);
  job.output = resolve_output(f.output);
  job.ell = f.ell;
  job.max_size = f.max_size;
  job.seed = f.seed;
  job.force = f.force;
  job.timing = f.timing;
  if (f.engine) {
    if (*f.engine == "pipeline") {
      job.engine = SweepEngine::Pipeline;
    } else if (*f.engine == "backtracking") {
      job.engine = SweepEngine::Backtracking;
    } else {
      throw input_error("unknown engine '" + *f.engine + "'");
    }
  }

  if (wants_sets) {
    const bool has_inline = !f.sets.empty() || !f.orderings.empty();
    if (has_inline == f.file.has_value()) {
      throw input_error(
          "exactly one input source is required: --set/--set-ordering or "
          "--file");
    }
    if (f.file) {
      std::ifstream in(*f.file);
      if (!in) throw input_error("cannot open " + *f.file);
      job.sets = parse_set_file(job.group, in);
    } else {
      for (const std::string& s : f.sets) {
        job.sets.push_back(parse_element_list(job.group, s));
      }
      for (const std::string& s : f.orderings) {
        job.sets.push_back(parse_element_list(job.group, s));
      }
    }
  }
  return job;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"construct, certify, and verify orderings with distinct "
               "partial sums"};
  app.require_subcommand(1);

  RawFlags order_flags, verify_flags, rectify_flags, sweep_flags, count_flags;

  CLI::App* order = app.add_subcommand(
      "order", "Construct a valid ordering of each input set");
  add_group_flags(order, order_flags, false);
  add_input_flags(order, order_flags, false);
  add_common_flags(order, order_flags);
  order->add_option("--engine", order_flags.engine,
                    "Force an engine instead of the default dispatch")
      ->check(CLI::IsMember({"pipeline", "backtracking"}));

  CLI::App* verify = app.add_subcommand(
      "verify", "Check validity, two-sidedness, and zero-sum blocks");
  add_group_flags(verify, verify_flags, false);
  add_input_flags(verify, verify_flags, true);
  add_common_flags(verify, verify_flags);

  CLI::App* rectify = app.add_subcommand(
      "rectify", "Find a Freiman-isomorphism certificate into the integers");
  add_group_flags(rectify, rectify_flags, true);
  add_input_flags(rectify, rectify_flags, false);
  add_common_flags(rectify, rectify_flags);
  rectify->add_option("--ell", rectify_flags.ell,
                      "Isomorphism length (default: |set without 0| - 1)");

  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Exhaustively test every subset of F_p \\ {0}");
  add_group_flags(sweep_cmd, sweep_flags, true);
  add_common_flags(sweep_cmd, sweep_flags);
  sweep_cmd->add_option("--engine", sweep_flags.engine,
                        "Engine to sweep with (default: backtracking)")
      ->check(CLI::IsMember({"pipeline", "backtracking"}));
  sweep_cmd->add_option("--max-size", sweep_flags.max_size,
                        "Largest subset size to sweep (default: p - 1)");

  CLI::App* count = app.add_subcommand(
      "count", "Count the valid orderings of each input set exhaustively");
  add_group_flags(count, count_flags, false);
  add_input_flags(count, count_flags, false);
  add_common_flags(count, count_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    JobSpec job;
    if (app.got_subcommand(order)) {
      job = build_job(Command::Order, order_flags, true);
    } else if (app.got_subcommand(verify)) {
      job = build_job(Command::Verify, verify_flags, true);
    } else if (app.got_subcommand(rectify)) {
      job = build_job(Command::Rectify, rectify_flags, true);
    } else if (app.got_subcommand(sweep_cmd)) {
      job = build_job(Command::Sweep, sweep_flags, false);
    } else {
      job = build_job(Command::Count, count_flags, true);
    }
    return run(job, out, err);
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace sumorder
