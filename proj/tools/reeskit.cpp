#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "reeskit/script.hpp"

namespace rs = reeskit::script;

namespace {

int runText(const std::string& text, const rs::Config& config, bool json) {
  rs::ResultDocument doc;
  try {
    doc = rs::executeScript(rs::parseScript(text), config);
  } catch (const std::exception& e) {
    doc.status = rs::Status::Error;
    doc.message = e.what();
  }
  std::cout << rs::emit(doc, json ? rs::OutputMode::Json : rs::OutputMode::Text, config);
  return rs::exitCode(doc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reeskit: Rees algebras, reductions and intersection theory over prime fields"};
  app.require_subcommand(1);

  rs::Config config;
  if (const char* env = std::getenv("REESKIT_SEED")) {
    try {
      config.seed = std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "REESKIT_SEED must be a non-negative integer\n";
      return 2;
    }
  }
  bool json = false;
  std::string file;
  std::string expr;

  auto addFlags = [&](CLI::App* sub) {
    sub->add_option("--seed", config.seed, "random seed (default 0, or REESKIT_SEED)");
    sub->add_option("--cap-reduction", config.capReduction, "largest r tried by isReduction")->capture_default_str();
    sub->add_option("--cap-multiplicity", config.capMultiplicity, "largest power used by multiplicity")
        ->capture_default_str();
    sub->add_flag("--json", json, "emit the JSON document");
    sub->add_flag("--verify", config.verify, "cross-check results with a second strategy");
  };

  CLI::App* run = app.add_subcommand("run", "run a script file");
  run->add_option("FILE", file, "script path")->required();
  addFlags(run);
  CLI::App* eval = app.add_subcommand("eval", "evaluate script text given on the command line");
  eval->add_option("EXPR", expr, "script text")->required();
  addFlags(eval);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (run->parsed()) {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "cannot read " << file << "\n";
      return 2;
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return runText(ss.str(), config, json);
  }
  return runText(expr, config, json);
}
