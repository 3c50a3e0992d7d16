#include <fstream>
#include <istream>

#include "session_state.hpp"
#include "weft/error.hpp"

namespace weft::cli {

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "null";
  return v.dump();
}

}  // namespace

std::string render_text(const Json& value) {
  if (value.is_null()) return "OK";
  if (value.is_array()) {
    std::string s;
    for (const auto& item : value) s += (s.empty() ? "" : " ") + scalar_text(item);
    return s.empty() ? "(none)" : s;
  }
  if (value.is_object()) {
    std::string s;
    for (const auto& [key, item] : value.items()) {
      s += (s.empty() ? "" : "\n") + key + ": " + scalar_text(item);
    }
    return s;
  }
  return scalar_text(value);
}

Session::Session(std::ostream& out, SessionOptions options)
    : state_(std::make_unique<State>(*this, out, options)) {}

Session::~Session() = default;

OutputMode Session::mode() const noexcept { return state_->mode; }
bool Session::quit_requested() const noexcept { return state_->quit; }

std::shared_ptr<Nodeset> Session::nodeset(std::string_view name) const {
  auto it = state_->objects.find(name);
  if (it == state_->objects.end()) return nullptr;
  auto* p = std::get_if<std::shared_ptr<Nodeset>>(&it->second);
  return p ? *p : nullptr;
}

std::shared_ptr<Network> Session::network(std::string_view name) const {
  auto it = state_->objects.find(name);
  if (it == state_->objects.end()) return nullptr;
  auto* p = std::get_if<std::shared_ptr<Network>>(&it->second);
  return p ? *p : nullptr;
}

namespace {

void emit(Session::State& state, const std::optional<std::string>& command, const Reply* reply,
          const std::string* error) {
  if (state.mode == OutputMode::Json) {
    Json line;
    line["status"] = error ? "error" : "ok";
    line["command"] = command ? Json(*command) : Json(nullptr);
    line["result"] = reply ? reply->result : Json(nullptr);
    line["error"] = error ? Json(*error) : Json(nullptr);
    state.out << line.dump() << '\n' << std::flush;
    return;
  }
  if (error) {
    state.out << "Error: " << *error << '\n' << std::flush;
  } else if (!state.options.quiet) {
    state.out << (reply->text.empty() ? render_text(reply->result) : reply->text) << '\n' << std::flush;
  }
}

StepStatus step(Session::State& state, std::string_view line, const std::string& context) {
  std::optional<std::string> command;
  std::string message;
  try {
    auto stmt = parse_statement(line);
    if (!stmt) return StepStatus::Ok;
    command = stmt->command;
    const Reply reply = dispatch(state, *stmt);
    emit(state, command, &reply, nullptr);
    return state.quit ? StepStatus::Quit : StepStatus::Ok;
  } catch (const Error& e) {
    message = context + std::string(to_string(e.code())) + ": " + e.what();
  } catch (const std::bad_alloc&) {
    message = context + "OutOfMemory: allocation failed";
  } catch (const std::exception& e) {
    message = context + "InternalError: " + e.what();
  }
  emit(state, command, nullptr, &message);
  return StepStatus::Error;
}

}  // namespace

StepStatus Session::execute_line(std::string_view line) { return step(*state_, line, {}); }

bool Session::run_script(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    const std::string message = "IoError: cannot open script '" + path.string() + "'";
    emit(*state_, std::string("runscript"), nullptr, &message);
    return false;
  }
  return run_script(in, path.string());
}

bool Session::run_script(std::istream& in, std::string_view) {
  ++state_->script_depth;
  bool ok = true;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto status = step(*state_, line, "line " + std::to_string(line_no) + ": ");
    if (status == StepStatus::Quit) break;
    if (status == StepStatus::Error) {
      ok = false;
      if (state_->mode == OutputMode::Text) break;
    }
  }
  --state_->script_depth;
  return ok;
}

}  // namespace weft::cli
