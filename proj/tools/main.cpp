#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial invariants of functions with isolated critical points on closed 3-manifolds"};
  app.require_subcommand(1);

  std::string path, path_a, path_b, arrangement, relation = "conjugacy", signs = "oriented";
  std::string out_dir;
  int n = 0, jobs = 1;
  bool json_out = false, code_only = false, dot = false, diff_reference = false;

  CLI::App* validate = app.add_subcommand("validate", "Check a graph document against its class invariants");
  validate->add_option("path", path, "JSON document, or - for stdin")->required();
  validate->add_flag("--json", json_out, "Emit the report as JSON");

  CLI::App* local_tree = app.add_subcommand("local-tree", "Region tree of a balanced-parenthesis circle arrangement");
  local_tree->add_option("arrangement", arrangement, "e.g. \"(())\" or \"()()\"")->required();
  local_tree->add_flag("--code", code_only, "Print the canonical code instead of the document");
  local_tree->add_flag("--dot", dot, "Print DOT instead of the document");

  CLI::App* compare = app.add_subcommand("compare", "Decide a relation between two graph documents");
  compare->add_option("a", path_a, "First document")->required();
  compare->add_option("b", path_b, "Second document")->required();
  compare->add_option("--relation", relation, "local, conjugacy or equivalence")->required();

  CLI::App* enumerate = app.add_subcommand("enumerate", "Enumerate all classes of a given complexity");
  enumerate->add_option("--n", n, "Complexity (1..6)")->required();
  enumerate->add_option("--relation", relation, "conjugacy or equivalence");
  enumerate->add_option("--signs", signs, "oriented or all");
  enumerate->add_option("--out", out_dir, "Output directory")->required();
  enumerate->add_option("--jobs", jobs, "Worker threads");
  enumerate->add_flag("--dot", dot, "Also write DOT files");

  CLI::App* table = app.add_subcommand("table", "Pair-count matrix as CSV");
  table->add_option("--n", n, "Complexity (1..5)")->required();
  table->add_flag("--diff-paper", diff_reference, "Compare against the bundled published table (n=4)");
  table->add_option("--jobs", jobs, "Worker threads");

  CLI::App* signs_cmd = app.add_subcommand("signs", "Sign orbits of a distinguishing document");
  signs_cmd->add_option("path", path, "JSON document, or - for stdin")->required();

  CLI::App* report = app.add_subcommand("report", "Full regression report as markdown");
  report->add_option("--jobs", jobs, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  tricrit::cli::Context ctx;
  ctx.in = &std::cin;
  ctx.out = &std::cout;
  ctx.err = &std::cerr;
  ctx.color = isatty(fileno(stdout)) && std::getenv("NO_COLOR") == nullptr;

  if (app.got_subcommand(validate)) return tricrit::cli::cmd_validate(ctx, path, json_out);
  if (app.got_subcommand(local_tree)) return tricrit::cli::cmd_local_tree(ctx, arrangement, code_only, dot);
  if (app.got_subcommand(compare)) return tricrit::cli::cmd_compare(ctx, path_a, path_b, relation);
  if (app.got_subcommand(enumerate))
    return tricrit::cli::cmd_enumerate(ctx, n, relation, signs, out_dir, jobs, dot);
  if (app.got_subcommand(table)) return tricrit::cli::cmd_table(ctx, n, diff_reference, jobs);
  if (app.got_subcommand(signs_cmd)) return tricrit::cli::cmd_signs(ctx, path);
  if (app.got_subcommand(report)) return tricrit::cli::cmd_report(ctx, jobs);
  return 1;
}
