#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "weft/cli/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"weft: multilayer network storage and query engine"};
  bool json = false;
  bool quiet = false;
  std::string script;
  std::optional<std::uint64_t> seed;
  app.add_flag("--json", json, "Start in JSON output mode");
  app.add_flag("--quiet", quiet, "Suppress Text-mode output of successful statements");
  app.add_option("--script", script, "Run a script file and exit");
  app.add_option("--seed", seed, "Base seed for generate() calls without an explicit seed");
  CLI11_PARSE(app, argc, argv);

  weft::cli::SessionOptions options;
  options.mode = json ? weft::cli::OutputMode::Json : weft::cli::OutputMode::Text;
  options.quiet = quiet;
  options.seed_base = seed;
  weft::cli::Session session(std::cout, options);

  if (!script.empty()) {
    const bool ok = session.run_script(script);
    return ok || session.mode() == weft::cli::OutputMode::Json ? 0 : 1;
  }

  const bool prompt = !json && !quiet;
  if (prompt) std::cout << "weft 1.0.0, type help() for commands\n";
  std::string line;
  for (;;) {
    if (prompt && session.mode() == weft::cli::OutputMode::Text) std::cout << "> " << std::flush;
    if (!std::getline(std::cin, line)) break;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (session.execute_line(line) == weft::cli::StepStatus::Quit) break;
  }
  return 0;
}
