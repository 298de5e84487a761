// drinfeld-endo: endomorphism rings in a rank-3 isogeny class.
//
//   drinfeld-endo analyze <config> [--format json|text] [--candidate-bound N]
//   drinfeld-endo check-module <config> --name <name>
//
// Exit status: 0 ok, 2 config, 3 Weil validation, 4 internal, 5 candidate bound.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "drinfeld/error.hpp"
#include "drinfeld/report.hpp"

namespace {

using namespace drinfeld;

const char* stage_of(ErrorKind k) {
  switch (exit_code(k)) {
    case 2:
      return "config";
    case 3:
      return "weil validation";
    case 5:
      return "enumeration";
    default:
      return "pipeline";
  }
}

ProblemConfig load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Config, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

int analyze(const std::string& path, const std::string& format, std::optional<std::uint64_t> bound) {
  const ProblemConfig cfg = load(path);
  const std::uint64_t b = resolve_candidate_bound(cfg, bound, std::getenv("DRINFELD_CANDIDATE_BOUND"));
  const std::string fmt = format.empty() ? cfg.output_format : format;
  const Analysis a = run_analysis(cfg, b);
  if (fmt == "text")
    std::cout << to_text(a.report);
  else
    std::cout << to_json(a.report).dump(2) << "\n";
  return 0;
}

int check(const std::string& path, const std::string& name) {
  const ProblemConfig cfg = load(path);
  bool known = false;
  for (const auto& m : cfg.modules) known = known || m.name == name;
  if (!known) fail(ErrorKind::Config, "no module named '" + name + "' in " + path);
  const std::uint64_t b = resolve_candidate_bound(cfg, std::nullopt, std::getenv("DRINFELD_CANDIDATE_BOUND"));
  const Analysis a = run_analysis(cfg, b, {name}, false);
  std::cout << verdict_line(a.report.modules.front(), a.report.frobenius_order) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Endomorphism rings of rank-3 Drinfeld modules in an isogeny class"};
  app.require_subcommand(1);

  std::string config;
  std::string format;
  std::optional<std::uint64_t> bound;
  auto* an = app.add_subcommand("analyze", "run the full pipeline and print a report");
  an->add_option("config", config, "problem description (JSON)")->required();
  an->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  an->add_option("--candidate-bound", bound, "refuse larger candidate spaces")
      ->check(CLI::PositiveNumber);

  std::string name;
  auto* cm = app.add_subcommand("check-module", "class membership and End of one module");
  cm->add_option("config", config, "problem description (JSON)")->required();
  cm->add_option("--name", name, "module name from the config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*an) return analyze(config, format, bound);
    return check(config, name);
  } catch (const Error& e) {
    std::cerr << "drinfeld-endo: " << stage_of(e.kind()) << ": " << to_string(e.kind()) << ": "
              << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "drinfeld-endo: pipeline: " << e.what() << "\n";
    return 4;
  }
}
