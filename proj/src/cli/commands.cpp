#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <span>
#include <string_view>
#include <unordered_map>

#include "session_state.hpp"
#include "weft/error.hpp"
#include "weft/generators.hpp"
#include "weft/io.hpp"
#include "weft/processing.hpp"
#include "weft/query.hpp"

namespace weft::cli {

namespace {

constexpr std::string_view kVersion = "1.0.0";

[[noreturn]] void type_error(const std::string& msg) { throw Error(ErrorCode::TypeError, msg); }

std::string_view kind_name(Value::Kind k) {
  switch (k) {
    case Value::Kind::Number: return "number";
    case Value::Kind::Bool: return "boolean";
    case Value::Kind::String: return "string";
    case Value::Kind::Bare: return "identifier";
    case Value::Kind::List: return "list";
  }
  return "value";
}

Json json_float(float v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  double d = 0;
  std::from_chars(buf, ptr, d);
  return d;
}

Json attribute_json(const AttributeValue& value) {
  return std::visit(
      [](const auto& v) -> Json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Char>) return encode_utf8(v.value);
        else if constexpr (std::is_same_v<T, float>) return json_float(v);
        else return v;
      },
      value);
}

struct Param {
  std::string_view name;
  bool required = false;
};

/// Positional and named arguments bound to a command's parameter list.
class Call {
 public:
  Call(Session::State& state, const Statement& stmt, std::span<const Param> params)
      : state_(state), stmt_(stmt) {
    std::size_t positional = 0;
    for (const auto& arg : stmt.args) {
      std::string_view name;
      if (arg.name) {
        auto it = std::find_if(params.begin(), params.end(), [&](const Param& p) { return p.name == *arg.name; });
        if (it == params.end()) {
          throw Error(ErrorCode::ArityError, stmt.command + "() has no parameter '" + *arg.name + "'");
        }
        name = it->name;
      } else {
        if (positional >= params.size()) {
          throw Error(ErrorCode::ArityError, stmt.command + "() takes at most " + std::to_string(params.size()) +
                                                 " arguments");
        }
        name = params[positional++].name;
      }
      if (!bound_.emplace(name, &arg.value).second) {
        throw Error(ErrorCode::ArityError, stmt.command + "(): parameter '" + std::string(name) + "' given twice");
      }
    }
    for (const auto& p : params) {
      if (p.required && !bound_.contains(p.name)) {
        throw Error(ErrorCode::ArityError, stmt.command + "(): missing required parameter '" + std::string(p.name) + "'");
      }
    }
  }

  const Statement& statement() const { return stmt_; }
  bool has(std::string_view name) const { return bound_.contains(name); }

  const Value& get(std::string_view name) const {
    auto it = bound_.find(name);
    if (it == bound_.end()) {
      throw Error(ErrorCode::ArityError, stmt_.command + "(): missing parameter '" + std::string(name) + "'");
    }
    return *it->second;
  }

  Object object(std::string_view name) const {
    const Value& v = get(name);
    if (v.kind != Value::Kind::Bare && v.kind != Value::Kind::String) {
      type_error("parameter '" + std::string(name) + "' must name an object");
    }
    auto it = state_.objects.find(v.text);
    if (it == state_.objects.end()) throw Error(ErrorCode::UnknownObject, "no object named '" + v.text + "'");
    return it->second;
  }

  std::shared_ptr<Network> network(std::string_view name) const {
    auto obj = object(name);
    auto* net = std::get_if<std::shared_ptr<Network>>(&obj);
    if (!net) type_error("'" + get(name).text + "' is a nodeset, not a network");
    if (!state_.name_of((*net)->nodeset_ptr())) {
      throw Error(ErrorCode::InvalidObject, "network '" + get(name).text + "' refers to a deleted nodeset");
    }
    return *net;
  }

  /// A nodeset, or the nodeset of a network.
  std::shared_ptr<Nodeset> nodeset(std::string_view name) const {
    auto obj = object(name);
    if (auto* ns = std::get_if<std::shared_ptr<Nodeset>>(&obj)) return *ns;
    return network(name)->nodeset_ptr();
  }

  std::string string(std::string_view name) const {
    const Value& v = get(name);
    if (v.kind == Value::Kind::List || v.kind == Value::Kind::Bool) {
      type_error("parameter '" + std::string(name) + "' must be a string, got " + std::string(kind_name(v.kind)));
    }
    return v.text;
  }

  std::string string_or(std::string_view name, std::string fallback) const {
    return has(name) ? string(name) : std::move(fallback);
  }

  std::vector<std::string> strings(std::string_view name) const {
    const Value& v = get(name);
    std::vector<std::string> out;
    if (v.kind != Value::Kind::List) {
      out.push_back(string(name));
      return out;
    }
    for (const auto& item : v.items) {
      if (item.kind == Value::Kind::Bool) type_error("parameter '" + std::string(name) + "' must list names");
      out.push_back(item.text);
    }
    return out;
  }

  template <typename T>
  T integer(std::string_view name) const {
    return parse_integer<T>(get(name), name);
  }

  template <typename T>
  T integer_or(std::string_view name, T fallback) const {
    return has(name) ? integer<T>(name) : fallback;
  }

  NodeId node(std::string_view name) const { return integer<NodeId>(name); }

  std::vector<NodeId> nodes(std::string_view name) const {
    const Value& v = get(name);
    std::vector<NodeId> out;
    if (v.kind != Value::Kind::List) {
      out.push_back(parse_integer<NodeId>(v, name));
      return out;
    }
    for (const auto& item : v.items) out.push_back(parse_integer<NodeId>(item, name));
    return out;
  }

  double real(std::string_view name) const {
    const Value& v = get(name);
    if (v.kind != Value::Kind::Number) type_error("parameter '" + std::string(name) + "' must be a number");
    double d = 0;
    auto [ptr, ec] = std::from_chars(v.text.data() + (v.text[0] == '+'), v.text.data() + v.text.size(), d);
    if (ec != std::errc{}) type_error("number '" + v.text + "' is out of range");
    return d;
  }

  double real_or(std::string_view name, double fallback) const { return has(name) ? real(name) : fallback; }

  float single(std::string_view name) const {
    const Value& v = get(name);
    if (v.kind == Value::Kind::Bare && (v.text == "inf" || v.text == "-inf")) {
      return v.text[0] == '-' ? -std::numeric_limits<float>::infinity() : std::numeric_limits<float>::infinity();
    }
    const double d = real(name);
    if (std::abs(d) > std::numeric_limits<float>::max()) type_error("number '" + v.text + "' does not fit a 32-bit float");
    return static_cast<float>(d);
  }

  bool boolean(std::string_view name) const {
    const Value& v = get(name);
    if (v.kind != Value::Kind::Bool) type_error("parameter '" + std::string(name) + "' must be true or false");
    return v.boolean;
  }

  bool boolean_or(std::string_view name, bool fallback) const { return has(name) ? boolean(name) : fallback; }

  EdgeTraversal traversal(std::string_view name) const {
    if (!has(name)) return EdgeTraversal::Both;
    auto t = parse_traversal(string(name));
    if (!t) type_error("direction must be both, out or in");
    return *t;
  }

  /// Layer names from `layernames` (or the singular alias); empty = all.
  LayerSelection layers() const {
    LayerSelection out;
    if (has("layernames")) out = strings("layernames");
    if (has("layername")) {
      for (auto& s : strings("layername")) out.push_back(std::move(s));
    }
    return out;
  }

 private:
  template <typename T>
  static T parse_integer(const Value& v, std::string_view name) {
    if (v.kind != Value::Kind::Number) {
      type_error("parameter '" + std::string(name) + "' must be an integer, got " + std::string(kind_name(v.kind)));
    }
    T out{};
    const char* begin = v.text.data() + (v.text[0] == '+');
    const char* end = v.text.data() + v.text.size();
    auto [ptr, ec] = std::from_chars(begin, end, out);
    if (ec == std::errc::result_out_of_range) type_error("integer '" + v.text + "' is out of range");
    if (ec != std::errc{} || ptr != end) {
      type_error("parameter '" + std::string(name) + "' must be a non-negative integer, got '" + v.text + "'");
    }
    return out;
  }

  Session::State& state_;
  const Statement& stmt_;
  std::unordered_map<std::string_view, const Value*> bound_;
};

using Handler = std::function<Reply(Session::State&, const Call&)>;

struct Command {
  std::vector<Param> params;
  Handler run;
  std::string_view help;
};

std::string bind_target(Session::State& state, const Call& call, Object obj) {
  const auto& target = call.statement().target;
  if (!target) return {};
  state.objects[*target] = std::move(obj);
  return *target;
}

Json object_info(Session::State& state, const std::string& name, const Object& obj) {
  Json j;
  j["name"] = name;
  if (auto* ns = std::get_if<std::shared_ptr<Nodeset>>(&obj)) {
    j["type"] = "nodeset";
    j["nodes"] = (*ns)->size();
    j["attributed"] = (*ns)->attributed_count();
    Json schema = Json::array();
    for (const auto& def : (*ns)->schema()) schema.push_back({{"name", def.name}, {"type", to_string(def.type)}});
    j["attributes"] = schema;
    return j;
  }
  const auto& net = *std::get<std::shared_ptr<Network>>(obj);
  j["type"] = "network";
  const auto ns_name = state.name_of(net.nodeset_ptr());
  j["nodeset"] = ns_name ? Json(*ns_name) : Json(nullptr);
  j["nodes"] = net.nodeset().size();
  Json layers = Json::array();
  for (std::size_t i = 0; i < net.layer_count(); ++i) {
    const Layer& l = net.layer_at(i);
    Json lj;
    lj["name"] = l.name();
    lj["mode"] = static_cast<int>(l.mode());
    if (l.mode() == LayerMode::OneMode) {
      const auto& one = static_cast<const LayerOneMode&>(l);
      lj["directed"] = one.directed();
      lj["valued"] = one.valued();
      lj["selfties"] = one.spec().allow_self_ties;
      lj["inbound"] = one.has_inbound();
      lj["edges"] = one.edge_count();
    } else {
      const auto& two = static_cast<const LayerTwoMode&>(l);
      lj["hyperedges"] = two.hyperedge_count();
      lj["memberships"] = two.membership_count();
    }
    layers.push_back(std::move(lj));
  }
  j["layers"] = layers;
  return j;
}

const std::map<std::string, Command, std::less<>>& command_table();

Reply cmd_createnodeset(Session::State& state, const Call& call) {
  auto ns = std::make_shared<Nodeset>();
  if (call.has("createnodes") && call.has("nodes")) {
    throw Error(ErrorCode::ArityError, "createnodeset(): give either createnodes or nodes, not both");
  }
  if (call.has("createnodes")) *ns = Nodeset::with_count(call.integer<std::uint32_t>("createnodes"));
  if (call.has("nodes")) *ns = Nodeset::with_ids(call.nodes("nodes"));
  const std::string name = bind_target(state, call, ns);
  Json r{{"type", "nodeset"}, {"name", name.empty() ? Json(nullptr) : Json(name)}, {"nodes", ns->size()}};
  return {r, "Created nodeset" + (name.empty() ? "" : " '" + name + "'") + " with " + std::to_string(ns->size()) + " nodes"};
}

Reply cmd_createnetwork(Session::State& state, const Call& call) {
  auto obj = call.object("nodeset");
  auto* ns = std::get_if<std::shared_ptr<Nodeset>>(&obj);
  if (!ns) type_error("createnetwork() needs a nodeset");
  auto net = std::make_shared<Network>(*ns);
  const std::string name = bind_target(state, call, net);
  Json r{{"type", "network"}, {"name", name.empty() ? Json(nullptr) : Json(name)},
         {"nodeset", call.get("nodeset").text}, {"layers", 0}};
  return {r, "Created network" + (name.empty() ? "" : " '" + name + "'") + " on nodeset '" + call.get("nodeset").text + "'"};
}

Reply cmd_addlayer(Session::State&, const Call& call) {
  auto net = call.network("network");
  const auto mode = call.integer_or<int>("mode", 1);
  LayerSpec spec;
  if (mode == 1) {
    spec = LayerSpec::one_mode(call.string("layername"), call.boolean_or("directed", false),
                               call.boolean_or("valued", false), call.boolean_or("selfties", false),
                               call.boolean_or("inbound", true));
  } else if (mode == 2) {
    spec = LayerSpec::two_mode(call.string("layername"));
  } else {
    type_error("mode must be 1 or 2");
  }
  net->add_layer(spec);
  return {Json{{"layer", spec.name}, {"mode", mode}}, "Added " + std::to_string(mode) + "-mode layer '" + spec.name + "'"};
}

Reply cmd_deletelayer(Session::State&, const Call& call) {
  const auto name = call.string("layername");
  call.network("network")->remove_layer(name);
  return {Json{{"layer", name}}, "Deleted layer '" + name + "'"};
}

Reply cmd_generate(Session::State& state, const Call& call) {
  auto net = call.network("network");
  const auto layer = call.string("layername");
  const auto type = call.string("type");
  const std::uint64_t seed = call.has("seed") ? call.integer<std::uint64_t>("seed") : state.next_seed();
  GenerationSummary s;
  Json r{{"layer", layer}, {"type", type}, {"seed", seed}};
  if (type == "er") {
    s = generate_er(*net, layer, call.real("p"), seed);
    r["edges"] = s.edges;
  } else if (type == "ws") {
    s = generate_ws(*net, layer, call.integer<std::uint32_t>("k"), call.real("beta"), seed);
    r["edges"] = s.edges;
    r["rewired"] = s.rewired;
  } else if (type == "ba") {
    s = generate_ba(*net, layer, call.integer<std::uint32_t>("m"), seed);
    r["edges"] = s.edges;
  } else if (type == "2mode") {
    s = generate_2mode(*net, layer, call.integer<std::uint32_t>("h"), call.real("a"), seed);
    r["memberships"] = s.memberships;
  } else {
    type_error("unknown generator type '" + type + "' (expected er, ws, ba or 2mode)");
  }
  std::string text = "Generated " + type + " in layer '" + layer + "': ";
  text += type == "2mode" ? std::to_string(s.memberships) + " memberships" : std::to_string(s.edges) + " edges";
  text += " (seed " + std::to_string(seed) + ")";
  return {r, text};
}

Reply cmd_addedge(Session::State&, const Call& call) {
  const float value = call.has("value") ? call.single("value") : 1.0f;
  call.network("network")->add_edge(call.string("layername"), call.node("node1"), call.node("node2"), value);
  return {nullptr, "OK"};
}

Reply cmd_removeedge(Session::State&, const Call& call) {
  auto net = call.network("network");
  const auto a = call.node("node1");
  const auto b = call.node("node2");
  net->require_node(a);
  net->require_node(b);
  net->remove_edge(call.string("layername"), a, b);
  return {nullptr, "OK"};
}

Reply cmd_addhyperedge(Session::State&, const Call& call) {
  std::vector<NodeId> members;
  if (call.has("nodes")) members = call.nodes("nodes");
  call.network("network")->add_hyperedge(call.string("layername"), call.string("hyperedge"), members);
  return {nullptr, "OK"};
}

Reply cmd_addtohyperedge(Session::State&, const Call& call) {
  call.network("network")->add_to_hyperedge(call.string("layername"), call.string("hyperedge"), call.node("nodeid"));
  return {nullptr, "OK"};
}

Reply cmd_removefromhyperedge(Session::State&, const Call& call) {
  call.network("network")->remove_from_hyperedge(call.string("layername"), call.string("hyperedge"), call.node("nodeid"));
  return {nullptr, "OK"};
}

Reply cmd_checkedge(Session::State&, const Call& call) {
  return {check_edge_exists(*call.network("network"), call.string("layername"), call.node("node1"),
                            call.node("node2"), call.traversal("direction")),
          {}};
}

Reply cmd_getedge(Session::State&, const Call& call) {
  return {json_float(get_edge_value(*call.network("network"), call.string("layername"), call.node("node1"),
                                    call.node("node2"))),
          {}};
}

Reply cmd_getnodealters(Session::State&, const Call& call) {
  return {get_node_alters(*call.network("network"), call.node("nodeid"), call.layers(), call.traversal("direction")), {}};
}

Reply cmd_degree(Session::State&, const Call& call) {
  return {degree(*call.network("network"), call.string("layername"), call.node("nodeid"), call.traversal("direction"),
                 call.boolean_or("projected", true)),
          {}};
}

Reply cmd_density(Session::State&, const Call& call) {
  return {density(*call.network("network"), call.string("layername")), {}};
}

Reply cmd_components(Session::State&, const Call& call) {
  const auto c = connected_components(*call.network("network"), call.layers());
  std::size_t largest = 0;
  for (const auto& [label, size] : c.sizes()) largest = std::max(largest, size);
  Json r{{"count", c.count}, {"largest", largest}};
  if (call.boolean_or("labels", false)) {
    std::vector<std::pair<NodeId, NodeId>> pairs(c.label.begin(), c.label.end());
    std::sort(pairs.begin(), pairs.end());
    Json labels = Json::array();
    for (const auto& [node, label] : pairs) labels.push_back({node, label});
    r["labels"] = labels;
  }
  return {r, {}};
}

Reply cmd_shortestpath(Session::State&, const Call& call) {
  auto path = shortest_path(*call.network("network"), call.node("node1"), call.node("node2"), call.layers());
  if (!path) return {Json{{"length", nullptr}, {"nodes", Json::array()}}, "unreachable"};
  Json r{{"length", path->length}, {"nodes", path->nodes}};
  std::string text = "length " + std::to_string(path->length) + ":";
  for (NodeId n : path->nodes) text += " " + std::to_string(n);
  return {r, text};
}

Reply cmd_projectedsize(Session::State&, const Call& call) {
  return {projected_edge_count(call.network("network")->two_mode(call.string("layername"))), {}};
}

AttributeValue attribute_from(const Call& call) {
  const Value& v = call.get("value");
  std::optional<AttributeType> type;
  if (call.has("type")) {
    type = parse_attribute_type(call.string("type"));
    if (!type) type_error("type must be int, float, bool or char");
  } else if (v.kind == Value::Kind::Bool) {
    type = AttributeType::Bool;
  } else if (v.kind == Value::Kind::Number) {
    type = v.text.find_first_of(".eE") == std::string::npos ? AttributeType::Int : AttributeType::Float;
  } else {
    type = AttributeType::Char;
  }
  switch (*type) {
    case AttributeType::Int: return call.integer<std::int32_t>("value");
    case AttributeType::Float: return call.single("value");
    case AttributeType::Bool: return call.boolean("value");
    case AttributeType::Char: {
      if (v.kind == Value::Kind::List) type_error("char attribute needs a single character");
      auto c = decode_single_utf8(v.text);
      if (!c) type_error("'" + v.text + "' is not a single character");
      return Char{*c};
    }
  }
  type_error("bad attribute value");
}

Reply cmd_setattribute(Session::State&, const Call& call) {
  call.nodeset("nodeset")->set_attribute(call.node("nodeid"), call.string("attrname"), attribute_from(call));
  return {nullptr, "OK"};
}

Reply cmd_getattribute(Session::State&, const Call& call) {
  auto v = call.nodeset("nodeset")->get_attribute(call.node("nodeid"), call.string("attrname"));
  if (!v) return {nullptr, "(absent)"};
  return {attribute_json(*v), {}};
}

Reply cmd_removeattribute(Session::State&, const Call& call) {
  call.nodeset("nodeset")->remove_attribute(call.node("nodeid"), call.string("attrname"));
  return {nullptr, "OK"};
}

Reply cmd_summarizeattribute(Session::State&, const Call& call) {
  const auto s = summarize_attribute(*call.nodeset("nodeset"), call.string("attrname"));
  Json r{{"type", s.type ? Json(to_string(*s.type)) : Json(nullptr)}, {"count", s.count}};
  if (s.type == AttributeType::Int || s.type == AttributeType::Float) {
    r["min"] = s.min ? Json(*s.min) : Json(nullptr);
    r["max"] = s.max ? Json(*s.max) : Json(nullptr);
    r["mean"] = s.mean ? Json(*s.mean) : Json(nullptr);
  } else if (s.type == AttributeType::Bool) {
    r["true"] = s.true_count;
  } else if (s.type == AttributeType::Char) {
    Json freq = Json::object();
    for (const auto& [c, n] : s.frequencies) freq[encode_utf8(c)] = n;
    r["frequencies"] = freq;
  }
  return {r, {}};
}

Reply cmd_symmetrize(Session::State&, const Call& call) {
  auto method = parse_symmetrize_method(call.string_or("method", "max"));
  if (!method) throw Error(ErrorCode::UnsupportedMethod, "method must be max, min, sum or or");
  symmetrize(*call.network("network"), call.string("layername"), *method);
  return {nullptr, "OK"};
}

Reply cmd_dichotomize(Session::State&, const Call& call) {
  const float threshold = call.has("threshold") ? call.single("threshold") : 1.0f;
  dichotomize(*call.network("network"), call.string("layername"), threshold, call.boolean_or("keepabove", true));
  return {nullptr, "OK"};
}

Reply cmd_filteredges(Session::State&, const Call& call) {
  std::optional<float> lo;
  std::optional<float> hi;
  if (call.has("min")) lo = call.single("min");
  if (call.has("max")) hi = call.single("max");
  filter_edges(*call.network("network"), call.string("layername"), lo, hi);
  return {nullptr, "OK"};
}

Reply cmd_savefile(Session::State&, const Call& call) {
  const auto obj = call.object("object");
  const auto file = call.string("file");
  if (auto* ns = std::get_if<std::shared_ptr<Nodeset>>(&obj)) {
    save_nodeset(**ns, file);
  } else {
    save_network(*call.network("object"), file);
  }
  return {Json{{"file", file}}, "Saved '" + call.get("object").text + "' to " + file};
}

Reply cmd_loadfile(Session::State& state, const Call& call) {
  const auto& target = call.statement().target;
  if (!target) throw Error(ErrorCode::ArityError, "loadfile() needs an assignment target, e.g. net = loadfile(...)");
  const auto file = call.string("file");
  if (detect_object_kind(file) == ObjectKind::Nodeset) {
    auto ns = std::make_shared<Nodeset>(load_nodeset(file));
    state.objects[*target] = ns;
    return {Json{{"type", "nodeset"}, {"name", *target}, {"nodes", ns->size()}},
            "Loaded nodeset '" + *target + "' (" + std::to_string(ns->size()) + " nodes)"};
  }
  const bool create = call.boolean_or("createnodes", false);
  std::shared_ptr<Nodeset> ns;
  std::string ns_name;
  if (call.has("nodeset")) {
    auto obj = call.object("nodeset");
    auto* p = std::get_if<std::shared_ptr<Nodeset>>(&obj);
    if (!p) type_error("nodeset parameter must name a nodeset");
    ns = *p;
    ns_name = call.get("nodeset").text;
  } else if (create) {
    ns = std::make_shared<Nodeset>();
    ns_name = *target + "_nodes";
  } else {
    throw Error(ErrorCode::ArityError, "loading a network needs nodeset = <nodeset> or createnodes = true");
  }
  auto net = std::make_shared<Network>(load_network(file, ns, {create}));
  state.objects[ns_name] = ns;
  state.objects[*target] = net;
  return {Json{{"type", "network"}, {"name", *target}, {"nodeset", ns_name}, {"layers", net->layer_count()}},
          "Loaded network '" + *target + "' on nodeset '" + ns_name + "'"};
}

Reply cmd_exportlayer(Session::State&, const Call& call) {
  export_layer(*call.network("network"), call.string("layername"), call.string("file"));
  return {Json{{"file", call.string("file")}}, "OK"};
}

Reply cmd_importlayer(Session::State&, const Call& call) {
  import_layer(*call.network("network"), call.string("layername"), call.string("file"));
  return {nullptr, "OK"};
}

Reply cmd_info(Session::State& state, const Call& call) {
  if (!call.has("object")) {
    return {Json{{"name", "weft"}, {"version", kVersion}, {"objects", state.objects.size()}},
            "weft " + std::string(kVersion) + ", " + std::to_string(state.objects.size()) + " objects"};
  }
  const auto obj = call.object("object");
  if (std::holds_alternative<std::shared_ptr<Network>>(obj)) call.network("object");
  return {object_info(state, call.get("object").text, obj), {}};
}

Reply cmd_listobjects(Session::State& state, const Call&) {
  Json r = Json::array();
  std::string text;
  for (const auto& [name, obj] : state.objects) {
    const bool is_net = std::holds_alternative<std::shared_ptr<Network>>(obj);
    r.push_back({{"name", name}, {"type", is_net ? "network" : "nodeset"}});
    text += (text.empty() ? "" : "\n") + name + " (" + (is_net ? "network" : "nodeset") + ")";
  }
  return {r, text.empty() ? "(no objects)" : text};
}

Reply cmd_deleteobject(Session::State& state, const Call& call) {
  const auto name = call.string("object");
  auto it = state.objects.find(name);
  if (it == state.objects.end()) throw Error(ErrorCode::UnknownObject, "no object named '" + name + "'");
  state.objects.erase(it);
  return {nullptr, "Deleted '" + name + "'"};
}

Reply cmd_outputmode(Session::State& state, const Call& call) {
  const auto mode = call.string("mode");
  if (mode == "json") {
    state.mode = OutputMode::Json;
  } else if (mode == "text") {
    state.mode = OutputMode::Text;
  } else {
    type_error("mode must be text or json");
  }
  return {Json{{"mode", mode}}, "Output mode: " + mode};
}

Reply cmd_runscript(Session::State& state, const Call& call) {
  if (state.script_depth >= 16) throw Error(ErrorCode::InvalidParameter, "scripts nested too deeply");
  const auto file = call.string("file");
  const bool ok = state.session.run_script(file);
  if (!ok) throw Error(ErrorCode::InvalidParameter, "script '" + file + "' reported errors");
  return {Json{{"file", file}}, "Ran " + file};
}

Reply cmd_help(Session::State&, const Call& call) {
  const auto& table = command_table();
  if (call.has("command")) {
    const auto name = call.string("command");
    auto it = table.find(name);
    if (it == table.end()) throw Error(ErrorCode::UnknownCommand, "unknown command '" + name + "'");
    std::string sig = name + "(";
    Json params = Json::array();
    for (std::size_t i = 0; i < it->second.params.size(); ++i) {
      const auto& p = it->second.params[i];
      sig += (i ? ", " : "") + std::string(p.name) + (p.required ? "" : "?");
      params.push_back({{"name", p.name}, {"required", p.required}});
    }
    sig += ")";
    return {Json{{"command", name}, {"params", params}, {"help", it->second.help}},
            sig + "\n  " + std::string(it->second.help)};
  }
  Json names = Json::array();
  std::string text;
  for (const auto& [name, cmd] : table) {
    names.push_back(name);
    text += (text.empty() ? "" : " ") + name;
  }
  return {names, text};
}

Reply cmd_quit(Session::State& state, const Call&) {
  state.quit = true;
  return {nullptr, "Bye"};
}

const std::map<std::string, Command, std::less<>>& command_table() {
  static const std::map<std::string, Command, std::less<>> table = [] {
    std::map<std::string, Command, std::less<>> t;
    const Param net{"network", true};
    const Param layer{"layername", true};
    t["createnodeset"] = {{{"createnodes"}, {"nodes"}}, cmd_createnodeset, "Create a nodeset of IDs 0..n-1 or of listed IDs."};
    t["createnetwork"] = {{{"nodeset", true}}, cmd_createnetwork, "Create an empty network over a nodeset."};
    t["addlayer"] = {{net, layer, {"mode"}, {"directed"}, {"valued"}, {"selfties"}, {"inbound"}}, cmd_addlayer,
                     "Add a one-mode (mode = 1) or two-mode (mode = 2) layer."};
    t["deletelayer"] = {{net, layer}, cmd_deletelayer, "Remove a layer."};
    t["generate"] = {{net, layer, {"type", true}, {"p"}, {"k"}, {"beta"}, {"m"}, {"h"}, {"a"}, {"seed"}}, cmd_generate,
                     "Fill an empty layer: type = er (p), ws (k, beta), ba (m) or 2mode (h, a)."};
    t["addedge"] = {{net, layer, {"node1", true}, {"node2", true}, {"value"}}, cmd_addedge, "Add or overwrite a one-mode edge."};
    t["removeedge"] = {{net, layer, {"node1", true}, {"node2", true}}, cmd_removeedge, "Remove a one-mode edge."};
    t["addhyperedge"] = {{net, layer, {"hyperedge", true}, {"nodes"}}, cmd_addhyperedge,
                         "Add a named hyperedge with members nodes = a;b;c."};
    t["addtohyperedge"] = {{net, layer, {"hyperedge", true}, {"nodeid", true}}, cmd_addtohyperedge, "Add a node to a hyperedge."};
    t["removefromhyperedge"] = {{net, layer, {"hyperedge", true}, {"nodeid", true}}, cmd_removefromhyperedge,
                                "Remove a node from a hyperedge."};
    t["checkedge"] = {{net, layer, {"node1", true}, {"node2", true}, {"direction"}}, cmd_checkedge,
                      "Whether two nodes are tied (two-mode: share a hyperedge)."};
    t["getedge"] = {{net, layer, {"node1", true}, {"node2", true}}, cmd_getedge,
                    "Edge value (two-mode: number of shared hyperedges)."};
    t["getnodealters"] = {{net, {"nodeid", true}, {"layernames"}, {"direction"}}, cmd_getnodealters,
                          "Alters of a node across the listed layers (default: all)."};
    t["degree"] = {{net, layer, {"nodeid", true}, {"direction"}, {"projected"}}, cmd_degree, "Degree of a node in a layer."};
    t["density"] = {{net, layer}, cmd_density, "Density of a layer."};
    t["components"] = {{net, {"layernames"}, {"labels"}}, cmd_components, "Weakly connected components."};
    t["shortestpath"] = {{net, {"node1", true}, {"node2", true}, {"layername"}, {"layernames"}}, cmd_shortestpath,
                         "Unweighted shortest path across the listed layers (default: all)."};
    t["projectedsize"] = {{net, layer}, cmd_projectedsize, "Edges a full projection of a two-mode layer would hold."};
    t["setattribute"] = {{{"nodeset", true}, {"nodeid", true}, {"attrname", true}, {"value", true}, {"type"}},
                         cmd_setattribute, "Set a node attribute (int, float, bool or char)."};
    t["getattribute"] = {{{"nodeset", true}, {"nodeid", true}, {"attrname", true}}, cmd_getattribute,
                         "Read a node attribute; null when absent."};
    t["removeattribute"] = {{{"nodeset", true}, {"nodeid", true}, {"attrname", true}}, cmd_removeattribute,
                            "Remove a node attribute."};
    t["summarizeattribute"] = {{{"nodeset", true}, {"attrname", true}}, cmd_summarizeattribute,
                               "Summary statistics over nodes holding an attribute."};
    t["symmetrize"] = {{net, layer, {"method"}}, cmd_symmetrize, "Make a directed layer symmetric (max, min, sum, or)."};
    t["dichotomize"] = {{net, layer, {"threshold"}, {"keepabove"}}, cmd_dichotomize, "Make a layer binary by threshold."};
    t["filteredges"] = {{net, layer, {"min"}, {"max"}}, cmd_filteredges, "Drop edges with values outside [min, max]."};
    t["savefile"] = {{{"object", true}, {"file", true}}, cmd_savefile, "Save a nodeset or network (.tsv, .tsv.gz, .bin, .bin.gz)."};
    t["loadfile"] = {{{"file", true}, {"nodeset"}, {"createnodes"}}, cmd_loadfile, "Load a nodeset or network."};
    t["exportlayer"] = {{net, layer, {"file", true}}, cmd_exportlayer, "Write a layer as an edge or membership list."};
    t["importlayer"] = {{net, layer, {"file", true}}, cmd_importlayer, "Read an edge or membership list into an empty layer."};
    t["info"] = {{{"object"}}, cmd_info, "Describe an object, or the engine."};
    t["listobjects"] = {{}, cmd_listobjects, "List session objects."};
    t["deleteobject"] = {{{"object", true}}, cmd_deleteobject, "Remove an object from the session."};
    t["outputmode"] = {{{"mode", true}}, cmd_outputmode, "Switch between text and json output."};
    t["runscript"] = {{{"file", true}}, cmd_runscript, "Execute a script file."};
    t["help"] = {{{"command"}}, cmd_help, "List commands or describe one."};
    t["quit"] = {{}, cmd_quit, "End the session."};
    return t;
  }();
  return table;
}

}  // namespace

std::uint64_t Session::State::next_seed() {
  std::uint64_t x = options.seed_base
                        ? *options.seed_base + 0x9E3779B97F4A7C15ull * (++generated)
                        : static_cast<std::uint64_t>(std::chrono::system_clock::now().time_since_epoch().count());
  // splitmix64 finalizer
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

std::optional<std::string> Session::State::name_of(const std::shared_ptr<Nodeset>& ns) const {
  for (const auto& [name, obj] : objects) {
    if (auto* p = std::get_if<std::shared_ptr<Nodeset>>(&obj); p && *p == ns) return name;
  }
  return std::nullopt;
}

Reply dispatch(Session::State& state, const Statement& stmt) {
  const auto& table = command_table();
  auto it = table.find(stmt.command);
  if (it == table.end()) throw Error(ErrorCode::UnknownCommand, "unknown command '" + stmt.command + "'");
  Call call(state, stmt, it->second.params);
  return it->second.run(state, call);
}

}  // namespace weft::cli
