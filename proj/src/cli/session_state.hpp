#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include <json.hpp>

#include "weft/cli/script.hpp"
#include "weft/cli/session.hpp"

namespace weft::cli {

using Json = nlohmann::ordered_json;
using Object = std::variant<std::shared_ptr<Nodeset>, std::shared_ptr<Network>>;

struct Session::State {
  Session& session;
  std::ostream& out;
  SessionOptions options;
  OutputMode mode;
  std::map<std::string, Object, std::less<>> objects;
  std::uint64_t generated = 0;  // generate calls without explicit seed
  int script_depth = 0;
  bool quit = false;

  State(Session& s, std::ostream& o, SessionOptions opts)
      : session(s), out(o), options(opts), mode(opts.mode) {}

  std::uint64_t next_seed();
  /// Name bound to this nodeset, if any.
  std::optional<std::string> name_of(const std::shared_ptr<Nodeset>& ns) const;
};

struct Reply {
  Json result;
  /// Text-mode rendering; derived from `result` when empty.
  std::string text;
};

/// Runs one parsed statement; throws weft::Error on failure.
Reply dispatch(Session::State& state, const Statement& stmt);

std::string render_text(const Json& value);

}  // namespace weft::cli
