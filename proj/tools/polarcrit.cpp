// polarcrit: degree bounds, polar degrees and critical points of polynomial
// maps on algebraic varieties.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "polarcrit/commands.hpp"

using namespace polarcrit;

int main(int argc, char** argv) {
  CLI::App app{"Polar degrees, degree bounds and critical points on algebraic varieties"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOptions opts;
  std::string field_text, output;
  std::optional<std::uint32_t> prime;
  bool no_timings = false;
  app.add_option("--field", field_text, "rationals | prime [p] (overrides FIELD)");
  app.add_option("--prime", prime, "prime modulus (default 2147483647)");
  app.add_option("--seed", opts.seed, "seed for all random choices")->capture_default_str();
  app.add_option("--route", opts.route, "crit route: algorithm1 | direct | both")
      ->check(CLI::IsMember({"algorithm1", "direct", "both"}))
      ->capture_default_str();
  app.add_option("--jobs", opts.jobs, "problem files processed concurrently")->check(CLI::PositiveNumber);
  app.add_option("-o,--output", output, "write the document here instead of stdout");
  app.add_flag("--no-timings", no_timings, "omit wall-clock timings from the output");
  app.add_flag("--second-prime", opts.second_prime, "recompute degree counts at a second prime");

  BoundArgs bound;
  std::string bound_file;
  std::vector<std::uint64_t> delta_values;
  std::optional<std::size_t> nvars;
  auto* bound_cmd = app.add_subcommand("bound", "Critical-point bound from a delta vector");
  bound_cmd->add_option("file", bound_file, "problem file with a DELTA section");
  bound_cmd->add_option("--delta", delta_values, "delta_1 .. delta_{d+1}");
  bound_cmd->add_option("-D,--degree", bound.degree, "degree of the objective")->required();
  bound_cmd->add_option("-i,--index", bound.indices, "indices i (default 0)");
  bound_cmd->add_option("-n,--nvars", nvars, "number of variables");
  bound_cmd->add_option("--naive-degrees", bound.naive_degrees, "equation degrees for the comparison bound");

  std::vector<std::string> files;
  auto* delta_cmd = app.add_subcommand("delta", "Polar degrees delta_1 .. delta_{d+1}");
  delta_cmd->add_option("files", files, "problem files")->required();

  std::optional<std::string> objective, u_crit;
  auto* crit_cmd = app.add_subcommand("crit", "Critical points of the objective on the variety");
  crit_cmd->add_option("files", files, "problem files")->required();
  crit_cmd->add_option("--objective", objective, "objective polynomial (overrides OBJECTIVE)");
  crit_cmd->add_option("--u", u_crit, "linear form for the output parametrization");

  std::string param_file, problem_file;
  auto* check_cmd = app.add_subcommand("check", "Validate a parametrization against a problem");
  check_cmd->add_option("parametrization", param_file, "JSON parametrization or crit output")->required();
  check_cmd->add_option("problem", problem_file, "problem file")->required();

  auto* fiber_cmd = app.add_subcommand("fiber", "Lifting fiber of the variety");
  fiber_cmd->add_option("files", files, "problem files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitParse;
  }

  opts.timings = !no_timings;
  opts.prime = prime;
  CommandResult result;
  try {
    if (!field_text.empty()) opts.field = parse_field_spec(field_text);
  } catch (const std::exception& e) {
    std::cerr << "polarcrit: " << e.what() << "\n";
    return kExitParse;
  }

  if (bound_cmd->parsed()) {
    if (!bound_file.empty()) bound.file = bound_file;
    if (!delta_values.empty()) bound.delta = DeltaVector{delta_values};
    bound.nvars = nvars;
    result = cmd_bound(bound);
  } else if (delta_cmd->parsed()) {
    result = run_batch(files, opts.jobs, [&](const std::string& f) { return cmd_delta(f, opts); });
  } else if (crit_cmd->parsed()) {
    result = run_batch(files, opts.jobs, [&](const std::string& f) { return cmd_crit(f, opts, objective, u_crit); });
  } else if (check_cmd->parsed()) {
    result = cmd_check(param_file, problem_file, opts);
  } else if (fiber_cmd->parsed()) {
    result = run_batch(files, opts.jobs, [&](const std::string& f) { return cmd_fiber(f, opts); });
  }

  std::string text = result.document.dump(2) + "\n";
  if (output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(output);
    if (!out) {
      std::cerr << "polarcrit: cannot write " << output << "\n";
      return kExitError;
    }
    out << text;
  }
  if (result.exit_code != kExitOk && result.document.contains("error")) {
    std::cerr << "polarcrit: " << result.document["error"]["message"].get<std::string>() << "\n";
  }
  return result.exit_code;
}
