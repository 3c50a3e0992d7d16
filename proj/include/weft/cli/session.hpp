#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "weft/network.hpp"
#include "weft/nodeset.hpp"

namespace weft::cli {

enum class OutputMode { Text, Json };

struct SessionOptions {
  OutputMode mode = OutputMode::Text;
  /// Suppress Text-mode output of successful statements.
  bool quiet = false;
  /// Base for seeds of `generate` calls without `seed =`. Wall clock if unset.
  std::optional<std::uint64_t> seed_base;
};

enum class StepStatus { Ok, Error, Quit };

/// Interpreter state: named objects plus the output mode. Each statement
/// produces one rendered result on the output stream (Text lines or exactly
/// one JSON object per line). Errors never end the session.
class Session {
 public:
  explicit Session(std::ostream& out, SessionOptions options = {});
  ~Session();
  Session(const Session&) = delete;
  Session& operator=(const Session&) = delete;

  /// Parses and executes one line. Blank and comment lines return Ok and
  /// print nothing.
  StepStatus execute_line(std::string_view line);

  /// Executes a script. Text mode stops at the first failing line, Json mode
  /// reports every statement and keeps going. Returns false if any statement
  /// failed (or the file could not be read).
  bool run_script(const std::filesystem::path& path);
  bool run_script(std::istream& in, std::string_view source_name);

  OutputMode mode() const noexcept;
  bool quit_requested() const noexcept;

  std::shared_ptr<Nodeset> nodeset(std::string_view name) const;
  std::shared_ptr<Network> network(std::string_view name) const;

  struct State;

 private:
  std::unique_ptr<State> state_;
};

}  // namespace weft::cli
