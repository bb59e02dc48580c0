#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "gradix/run.hpp"
#include "gradix/selftest.hpp"

namespace {

using gradix::json;

void emit(const json& report, bool pretty) {
  if (pretty)
    gradix::render_pretty(std::cout, report);
  else
    std::cout << report.dump(2) << "\n";
}

int run_file(const std::string& path, const std::string& command, const gradix::RunOptions& cli,
             const std::function<void(gradix::RunOptions&)>& apply_flags, bool pretty) {
  json doc;
  try {
    std::ifstream in(path);
    if (!in) throw gradix::Error(gradix::Errc::ValidationError, "cannot open " + path);
    doc = gradix::io::parse_json(in, path);
    if (command == "tower") doc = gradix::as_request(doc, "cayley-tower");
    if (command == "laurent") doc = gradix::as_request(doc, "laurent");
  } catch (const gradix::Error& e) {
    std::cerr << e.what() << "\n";
    return gradix::exit_code_for(e.code());
  }
  gradix::RunOptions opt = cli;
  try {
    opt = gradix::options_from_json(doc.is_object() && doc.contains("options") ? doc["options"] : json(nullptr), cli);
  } catch (const gradix::Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  apply_flags(opt);
  auto outcome = gradix::execute(doc, opt);
  if (outcome.report.contains("error")) {
    const auto& err = outcome.report["error"];
    std::cerr << err["class"].get<std::string>() << ": " << err["message"].get<std::string>() << "\n";
  }
  if (command == "verdict" && !outcome.report.contains("error"))
    emit({{"kind", outcome.report["kind"]}, {"verdict", outcome.report["result"]["verdict"]}}, pretty);
  else
    emit(outcome.report, pretty);
  return outcome.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gradix: simplicity of group-graded non-associative algebras"};
  app.require_subcommand(1);
  gradix::RunOptions defaults;
  double budget = 1e6;
  std::uint64_t trials = 1000, seed = 0;
  std::size_t maxlen = 5;
  bool pretty = false, timing = false;
  auto* budget_opt = app.add_option("--budget", budget, "projective point budget for exact enumeration")
                         ->check(CLI::PositiveNumber);
  auto* trials_opt = app.add_option("--trials", trials, "samples for randomized verdicts")->check(CLI::PositiveNumber);
  auto* seed_opt = app.add_option("--seed", seed, "random seed");
  auto* maxlen_opt = app.add_option("--oracle-maxlen", maxlen, "maximum word length for the ideal oracle")
                         ->check(CLI::PositiveNumber);
  app.add_flag("--pretty", pretty, "indented text instead of JSON");
  app.add_flag("--timing", timing, "include wall-clock time in reports");

  std::string file;
  std::string command;
  for (const char* name : {"analyze", "verdict", "tower", "laurent"}) {
    const char* help = std::string(name) == "analyze"   ? "full report for any request kind"
                       : std::string(name) == "verdict" ? "verdict block only"
                       : std::string(name) == "tower"   ? "Cayley-Dickson tower request"
                                                        : "skew Laurent ring request";
    auto* sub = app.add_subcommand(name, help)->fallthrough();
    sub->add_option("file", file, "request JSON")->required();
    sub->callback([&command, name] { command = name; });
  }
  app.add_subcommand("selftest", "run the acceptance criteria")->fallthrough()->callback([&command] { command = "selftest"; });
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // usage errors share exit status 1 with validation errors
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  auto apply_flags = [&](gradix::RunOptions& o) {
    if (budget_opt->count()) o.search.budget = static_cast<std::uint64_t>(budget);
    if (trials_opt->count()) o.search.trials = trials;
    if (seed_opt->count()) o.search.seed = seed;
    if (maxlen_opt->count()) o.oracle_maxlen = maxlen;
    o.timing = timing;
  };

  if (command == "selftest") {
    bool ok = true;
    for (const auto& criterion : gradix::selftest::all_criteria()) {
      auto r = criterion();
      std::cout << gradix::selftest::summary_line(r) << std::endl;
      for (const auto& f : r.failures) std::cout << "  " << f << "\n";
      ok = ok && r.pass;
    }
    return ok ? 0 : 1;
  }
  return run_file(file, command, defaults, apply_flags, pretty);
}
