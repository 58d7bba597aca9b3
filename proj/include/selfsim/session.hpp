#pragma once

// Script execution.  A Session owns the truncation context, the generator
// system and the named expressions of one script, and writes one result per
// command: a JSON line by default, or indented text with `pretty`.

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include <json.hpp>

#include "selfsim/dsl.hpp"
#include "selfsim/expr.hpp"
#include "selfsim/forest.hpp"

namespace selfsim::cli {

/// Process exit codes.
enum ExitCode { kOk = 0, kCheckFailed = 1, kParseError = 2, kContextError = 3, kMathError = 4 };

int exit_code_for(const Error& e);

struct Options {
  // command-line values win over `context` statements
  std::optional<int> m, K, D, L;
  bool pretty = false;
  bool dot = false;  // portraits as DOT text
  std::filesystem::path base_dir = ".";  // for relative file arguments
};

class Session {
 public:
  Session(Options opts, std::ostream& out);
  ~Session();

  /// Runs every statement; returns kOk or kCheckFailed.  Errors propagate as
  /// selfsim::Error with the offending line prepended.
  int run(const dsl::Script& script);

  const adic::Truncation& truncation() const { return t_; }
  int depth() const { return L_; }

 private:
  void set_context(const dsl::Statement& s);
  void define_gen(const dsl::Statement& s);
  void define_let(const dsl::Statement& s);
  bool command(const dsl::Statement& s);

  tree::AutExpr expr(const dsl::Word& w) const;
  tree::Evaluator& evaluator();
  tree::Element eval(const dsl::Word& w, int depth);
  std::optional<std::string> name_of(const tree::Element& e);
  void emit(const std::string& cmd, nlohmann::json body, const std::string& text);

  Options opts_;
  std::ostream& out_;
  adic::Truncation t_{2, 8, 8};
  int L_ = 8;
  bool frozen_ = false;  // context is fixed once a generator exists
  tree::GeneratorSystem sys_{2};
  std::map<std::string, tree::AutExpr> lets_;
  std::unique_ptr<tree::Forest> forest_;
  std::unique_ptr<tree::Evaluator> ev_;
};

/// Parses and runs a script; errors are reported on `err` and mapped to
/// exit codes.
int run_text(const std::string& text, const Options& opts, std::ostream& out, std::ostream& err);

}  // namespace selfsim::cli
