#pragma once

#include <iosfwd>
#include <string>

namespace tricrit::cli {

// Exit code contract: 0 success or related, 1 input error (parse, flags),
// 2 validation failure or class mismatch, 3 negative comparison or internal
// error.

struct Context {
  std::istream* in = nullptr;   // used when a path argument is "-"
  std::ostream* out = nullptr;
  std::ostream* err = nullptr;
  bool color = false;
};

int cmd_validate(Context& ctx, const std::string& path, bool json_output);
int cmd_local_tree(Context& ctx, const std::string& arrangement, bool code_only, bool dot);
int cmd_compare(Context& ctx, const std::string& path_a, const std::string& path_b,
                const std::string& relation);
int cmd_enumerate(Context& ctx, int n, const std::string& relation, const std::string& signs,
                  const std::string& out_dir, int jobs, bool dot);
int cmd_table(Context& ctx, int n, bool diff_reference, int jobs);
int cmd_signs(Context& ctx, const std::string& path);
int cmd_report(Context& ctx, int jobs);

}  // namespace tricrit::cli
