// combsim -- command-line front end for the combinatorial similarity library.
//
// Verbs: validate, classify, group, similar, enumerate, example.
// Exit codes: 0 success, 1 usage error, 2 validation/parse error, 3 cap
// exceeded, 4 internal invariant violation.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "combsim/commands.hpp"

namespace {

int write_report(const combsim::Report& report, bool machine,
                 const std::optional<std::string>& output_path) {
  std::string text = machine ? report.render_machine() : report.render_plain();
  if (output_path) {
    std::ofstream out(*output_path);
    if (!out) {
      std::cerr << "cannot open output file: " << *output_path << "\n";
      return 2;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return report.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "combinatorial similarity toolkit for finite semimetric spaces"};
  app.require_subcommand(1);

  combsim::CommandOptions opts;
  bool machine = false;
  std::optional<std::string> output_path;
  std::string mode_str;

  app.add_option("--cap", opts.cap,
                 "degree cap for exhaustive permutation search")
      ->envname("COMBSIM_CAP")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  auto* mode_opt =
      app.add_option("--mode", mode_str,
                     "search mode: exhaustive (oracle, capped) or pruned")
          ->check(CLI::IsMember({"exhaustive", "pruned"}));
  app.add_flag("--machine", machine,
               "emit one machine-readable JSON record instead of text");
  app.add_option("--output", output_path, "write the report to this file");

  std::string path, path_a, path_b, which, example_name;
  std::vector<std::string> example_params;
  int enum_n = 0;

  auto* validate_cmd =
      app.add_subcommand("validate", "check the semimetric axioms of a file");
  validate_cmd->fallthrough();
  validate_cmd->add_option("path", path, "matrix file")->required();
  validate_cmd->add_flag("--metric", opts.metric_check,
                         "also check the triangle inequality");

  auto* classify_cmd = app.add_subcommand(
      "classify", "compute classification flags and the Cs = Sym verdict");
  classify_cmd->fallthrough();
  classify_cmd->add_option("path", path, "matrix file")->required();

  auto* group_cmd = app.add_subcommand(
      "group", "compute the self-similarity or self-isometry group");
  group_cmd->fallthrough();
  group_cmd->add_option("path", path, "matrix file")->required();
  group_cmd->add_option("which", which, "cs (similarities) or iso (isometries)")
      ->required()
      ->check(CLI::IsMember({"cs", "iso"}));
  group_cmd->add_option("--list-limit", opts.list_limit,
                        "suppress the element list above this order")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* similar_cmd = app.add_subcommand(
      "similar", "decide combinatorial similarity of two spaces");
  similar_cmd->fallthrough();
  similar_cmd->add_option("path_a", path_a, "first matrix file")->required();
  similar_cmd->add_option("path_b", path_b, "second matrix file")->required();

  auto* enumerate_cmd = app.add_subcommand(
      "enumerate", "census of all distance-equality patterns at n points");
  enumerate_cmd->fallthrough();
  enumerate_cmd->add_option("n", enum_n, "point count (3 to 5)")->required();

  auto* example_cmd =
      app.add_subcommand("example", "emit a named example space matrix");
  example_cmd->fallthrough();
  example_cmd
      ->add_option("name", example_name,
                   "rectangle | pseudolinear s t | discrete n k | rigid n")
      ->required();
  example_cmd->add_option("params", example_params, "example parameters");
  example_cmd->add_flag("--metric", opts.metric_check,
                        "rigid: place values in [1, 2] so the result is a metric");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (mode_opt->count() > 0) {
    opts.mode = mode_str == "pruned" ? combsim::SearchMode::pruned
                                     : combsim::SearchMode::exhaustive;
  }

  try {
    combsim::Report report;
    if (*validate_cmd) {
      report = combsim::cmd_validate(path, opts);
    } else if (*classify_cmd) {
      report = combsim::cmd_classify(path, opts);
    } else if (*group_cmd) {
      report = combsim::cmd_group(path,
                                  which == "cs" ? combsim::GroupKind::cs
                                                : combsim::GroupKind::iso,
                                  opts);
    } else if (*similar_cmd) {
      report = combsim::cmd_similar(path_a, path_b, opts);
    } else if (*enumerate_cmd) {
      report = combsim::cmd_enumerate(enum_n, opts);
    } else {
      report = combsim::cmd_example(example_name, example_params, opts);
    }
    return write_report(report, machine, output_path);
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
