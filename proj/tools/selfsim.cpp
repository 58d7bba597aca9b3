// selfsim: run scripts and built-in verification suites.
//
//   selfsim run script.ss [--m 2 --K 8 --D 8 --L 8] [--pretty|--json] [--dot]
//   selfsim verify example2
//   selfsim verify all

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "selfsim/session.hpp"
#include "selfsim/suites.hpp"

namespace {

int verify(const std::string& name, bool pretty) {
  using namespace selfsim;
  std::vector<std::string> names;
  if (name == "all") {
    for (const auto& s : suites::suite_list()) names.push_back(s.name);
  } else {
    names.push_back(name);
  }
  bool ok = true;
  for (const auto& n : names) {
    auto r = suites::run_suite(n);
    ok = ok && r.passed();
    if (!pretty) {
      auto j = suites::to_json(r);
      j["cmd"] = "verify";
      std::cout << j.dump() << "\n";
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.suite << " (" << r.title << "): "
              << r.checks.size() - r.failures() << "/" << r.checks.size() << "\n";
    for (const auto& c : r.checks) {
      if (!c.pass) std::cout << "  FAIL " << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
  }
  return ok ? selfsim::cli::kOk : selfsim::cli::kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with abelian state-closed groups of tree automorphisms"};
  app.require_subcommand(1);

  selfsim::cli::Options opts;
  bool json = false;
  int m = 0, K = 0, D = 0, L = 0;
  app.add_option("--m", m, "tree degree")->check(CLI::Range(2, 4096));
  app.add_option("--K", K, "m-adic digits")->check(CLI::PositiveNumber);
  app.add_option("--D", D, "series degree bound")->check(CLI::PositiveNumber);
  app.add_option("--L", L, "portrait depth")->check(CLI::PositiveNumber);
  app.add_flag("--pretty", opts.pretty, "human-readable output");
  app.add_flag("--json", json, "JSON lines (default)");
  app.add_flag("--dot", opts.dot, "portraits as DOT");

  std::string script;
  auto* run = app.add_subcommand("run", "execute a script ('-' for stdin)");
  run->add_option("script", script)->required();
  run->fallthrough();

  std::string suite;
  auto* ver = app.add_subcommand("verify", "run a built-in suite, or 'all'");
  ver->add_option("suite", suite)->required();
  ver->fallthrough();

  auto* list = app.add_subcommand("suites", "list built-in suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : selfsim::cli::kParseError;
  }
  if (json) opts.pretty = false;
  if (m) opts.m = m;
  if (K) opts.K = K;
  if (D) opts.D = D;
  if (L) opts.L = L;

  try {
    if (*list) {
      for (const auto& s : selfsim::suites::suite_list()) std::cout << s.name << "\t" << s.title << "\n";
      return 0;
    }
    if (*ver) return verify(suite, opts.pretty);

    std::string text;
    if (script == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream in(script);
      if (!in) {
        std::cerr << "selfsim: cannot read " << script << "\n";
        return selfsim::cli::kContextError;
      }
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
      opts.base_dir = std::filesystem::path(script).parent_path();
      if (opts.base_dir.empty()) opts.base_dir = ".";
    }
    return selfsim::cli::run_text(text, opts, std::cout, std::cerr);
  } catch (const selfsim::Error& e) {
    std::cerr << "selfsim: " << selfsim::errc_name(e.code()) << ": " << e.what() << "\n";
    return selfsim::cli::exit_code_for(e);
  }
}
