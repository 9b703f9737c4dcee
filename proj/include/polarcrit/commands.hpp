#pragma once

// Subcommands behind tools/polarcrit. Each returns the exit code and the
// output document instead of printing, so tests can drive them directly.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "polarcrit/problem.hpp"
#include "polarcrit/serialize.hpp"

namespace polarcrit {

enum ExitCode : int {
  kExitOk = 0,
  kExitError = 1,
  kExitValidation = 2,
  kExitFail = 3,
  kExitParse = 4,
};

struct GlobalOptions {
  std::optional<FieldSpec> field;       // --field
  std::optional<std::uint32_t> prime;   // --prime
  std::uint64_t seed = 1;
  std::string route = "algorithm1";     // algorithm1 | direct | both
  unsigned jobs = 1;
  bool timings = true;
  bool second_prime = false;            // recompute degree counts at another prime
};

struct CommandResult {
  int exit_code = kExitOk;
  Json document;
};

/// FIELD from the file, overridden by --field, with --prime as the modulus.
FieldSpec resolve_field(const ProblemFile& problem, const GlobalOptions& opts);

/// Calls fn(Rationals{}) or fn(PrimeField(p)).
template <class Fn>
decltype(auto) with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.kind == FieldKind::Rationals) return fn(Rationals{});
  return fn(PrimeField(spec.prime));
}

int exit_code_of(const std::exception& e);

/// Runs `body`, turning exceptions into an error document with the mapped
/// exit code.
CommandResult guarded(const std::string& command, const std::function<CommandResult()>& body);

struct BoundArgs {
  std::optional<std::string> file;
  std::optional<DeltaVector> delta;
  unsigned long degree = 0;
  std::vector<std::size_t> indices{0};
  std::optional<std::size_t> nvars;
  std::vector<unsigned long> naive_degrees;
};

CommandResult cmd_bound(const BoundArgs& args);
CommandResult cmd_delta(const std::string& file, const GlobalOptions& opts);
/// `objective` overrides the file's OBJECTIVE; `u_crit` is a linear form.
CommandResult cmd_crit(const std::string& file, const GlobalOptions& opts,
                       const std::optional<std::string>& objective = std::nullopt,
                       const std::optional<std::string>& u_crit = std::nullopt);
CommandResult cmd_check(const std::string& parametrization_file, const std::string& problem_file,
                        const GlobalOptions& opts);
CommandResult cmd_fiber(const std::string& file, const GlobalOptions& opts);

/// Applies `run` to every file, `jobs` at a time. One file gives its own
/// document; several give {"format", "batch": [...]} and the worst exit code.
CommandResult run_batch(const std::vector<std::string>& files, unsigned jobs,
                        const std::function<CommandResult(const std::string&)>& run);

}  // namespace polarcrit
