#include "weft/io.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstring>
#include <limits>

#include "file_stream.hpp"
#include "weft/error.hpp"

namespace weft {

namespace {

using detail::InFile;
using detail::OutFile;

constexpr char kMagic[4] = {'W', 'F', 'T', '1'};
constexpr std::uint16_t kVersion = 1;
constexpr std::uint8_t kKindNodeset = 0;
constexpr std::uint8_t kKindNetwork = 1;

enum LayerFlags : std::uint8_t { kDirected = 1, kValued = 2, kSelfTies = 4, kInbound = 8 };

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

FileFormat require_format(const std::filesystem::path& path) {
  auto f = format_from_path(path);
  if (!f) {
    throw Error(ErrorCode::IoError,
                "unrecognized file extension for '" + path.string() + "' (expected .tsv, .tsv.gz, .bin or .bin.gz)");
  }
  return *f;
}

bool compressed(FileFormat f) { return f == FileFormat::TsvGz || f == FileFormat::BinGz; }
bool binary(FileFormat f) { return f == FileFormat::Bin || f == FileFormat::BinGz; }

[[noreturn]] void fail_at(ErrorCode code, std::size_t line, const std::string& what) {
  throw Error(code, "line " + std::to_string(line) + ": " + what);
}

// ---------------------------------------------------------------------------
// Text helpers

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  for (;;) {
    const auto tab = line.find('\t', start);
    cells.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos : tab - start));
    if (tab == std::string_view::npos) return cells;
    start = tab + 1;
  }
}

template <typename T>
std::optional<T> parse_number(std::string_view s) {
  T value{};
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc{} || ptr != end || s.empty()) return std::nullopt;
  return value;
}

template <typename T>
void append_number(std::string& out, T value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, ptr);
}

NodeId parse_node(std::string_view cell, std::size_t line) {
  auto id = parse_number<NodeId>(cell);
  if (!id) fail_at(ErrorCode::MalformedSection, line, "invalid node id '" + std::string(cell) + "'");
  return *id;
}

std::string escape_char(char32_t c) {
  switch (c) {
    case '\t': return "\\t";
    case '\n': return "\\n";
    case '\r': return "\\r";
    case '\\': return "\\\\";
    default: return encode_utf8(c);
  }
}

std::optional<char32_t> unescape_char(std::string_view cell) {
  if (cell == "\\t") return U'\t';
  if (cell == "\\n") return U'\n';
  if (cell == "\\r") return U'\r';
  if (cell == "\\\\") return U'\\';
  return decode_single_utf8(cell);
}

void append_value(std::string& out, const AttributeValue& value) {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) {
          out += v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, Char>) {
          out += escape_char(v.value);
        } else {
          append_number(out, v);
        }
      },
      value);
}

std::optional<AttributeValue> parse_value(std::string_view cell, AttributeType type) {
  switch (type) {
    case AttributeType::Int:
      if (auto v = parse_number<std::int32_t>(cell)) return AttributeValue{*v};
      return std::nullopt;
    case AttributeType::Float:
      if (auto v = parse_number<float>(cell)) return AttributeValue{*v};
      return std::nullopt;
    case AttributeType::Bool:
      if (cell == "true") return AttributeValue{true};
      if (cell == "false") return AttributeValue{false};
      return std::nullopt;
    case AttributeType::Char:
      if (auto c = unescape_char(cell)) return AttributeValue{Char{*c}};
      return std::nullopt;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Binary helpers

class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(static_cast<char>(v)); }
  void u16(std::uint16_t v) { le(v); }
  void u32(std::uint32_t v) { le(v); }
  void u64(std::uint64_t v) { le(v); }
  void f32(float v) { le(std::bit_cast<std::uint32_t>(v)); }
  void str(std::string_view s) {
    if (s.size() > std::numeric_limits<std::uint16_t>::max()) {
      throw Error(ErrorCode::FormatError, "name too long for binary format");
    }
    u16(static_cast<std::uint16_t>(s.size()));
    buf_.append(s);
  }
  void raw(std::string_view s) { buf_.append(s); }
  std::string& bytes() { return buf_; }

 private:
  template <typename T>
  void le(T v) {
    for (std::size_t i = 0; i < sizeof(T); ++i) buf_.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
  }
  std::string buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::string data) : data_(std::move(data)) {}
  std::uint8_t u8() { return static_cast<std::uint8_t>(le<std::uint8_t>()); }
  std::uint16_t u16() { return le<std::uint16_t>(); }
  std::uint32_t u32() { return le<std::uint32_t>(); }
  std::uint64_t u64() { return le<std::uint64_t>(); }
  float f32() { return std::bit_cast<float>(le<std::uint32_t>()); }
  std::string str() {
    const std::size_t n = u16();
    need(n);
    std::string s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  bool done() const { return pos_ == data_.size(); }
  void expect_done() const {
    if (!done()) throw Error(ErrorCode::FormatError, "trailing bytes in binary section");
  }

 private:
  void need(std::size_t n) const {
    if (data_.size() - pos_ < n) throw Error(ErrorCode::FormatError, "binary section truncated");
  }
  template <typename T>
  T le() {
    need(sizeof(T));
    T v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i) {
      v |= static_cast<T>(static_cast<T>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i));
    }
    pos_ += sizeof(T);
    return v;
  }
  std::string data_;
  std::size_t pos_ = 0;
};

void write_header(OutFile& out, std::uint8_t kind) {
  ByteWriter w;
  w.raw(std::string_view(kMagic, 4));
  w.u16(kVersion);
  w.u8(kind);
  out.write(w.bytes());
}

void write_section(OutFile& out, ByteWriter& section) {
  ByteWriter len;
  len.u64(section.bytes().size());
  out.write(len.bytes());
  out.write(section.bytes());
}

std::uint8_t read_header(InFile& in) {
  char head[7];
  in.read_exact(head, sizeof(head));
  if (std::memcmp(head, kMagic, 4) != 0) throw Error(ErrorCode::FormatError, "not a binary network file (bad magic)");
  ByteReader r(std::string(head + 4, 3));
  const auto version = r.u16();
  if (version != kVersion) {
    throw Error(ErrorCode::FormatError, "unsupported binary format version " + std::to_string(version));
  }
  return r.u8();
}

ByteReader read_section(InFile& in) {
  char len_bytes[8];
  in.read_exact(len_bytes, 8);
  const auto len = ByteReader(std::string(len_bytes, 8)).u64();
  std::string data;
  data.resize(len);
  in.read_exact(data.data(), len);
  return ByteReader(std::move(data));
}

std::uint32_t encode_value(const AttributeValue& value) {
  return std::visit(
      [](const auto& v) -> std::uint32_t {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, bool>) return v ? 1u : 0u;
        else if constexpr (std::is_same_v<T, Char>) return static_cast<std::uint32_t>(v.value);
        else return std::bit_cast<std::uint32_t>(v);
      },
      value);
}

AttributeValue decode_value(std::uint32_t raw, AttributeType type) {
  switch (type) {
    case AttributeType::Int: return std::bit_cast<std::int32_t>(raw);
    case AttributeType::Float: return std::bit_cast<float>(raw);
    case AttributeType::Bool:
      if (raw > 1) throw Error(ErrorCode::FormatError, "invalid bool value in binary nodeset");
      return raw == 1;
    case AttributeType::Char:
      if (!is_unicode_scalar(raw)) throw Error(ErrorCode::FormatError, "invalid char value in binary nodeset");
      return Char{raw};
  }
  throw Error(ErrorCode::FormatError, "invalid attribute type");
}

// ---------------------------------------------------------------------------
// Nodeset

void save_nodeset_text(const Nodeset& ns, OutFile& out) {
  std::string line = "nodeid";
  for (const auto& def : ns.schema()) {
    line += '\t';
    line += def.name;
    line += ':';
    line += to_string(def.type);
  }
  line += '\n';
  out.write(line);
  const std::size_t columns = ns.schema().size();
  for (NodeId id : ns.sorted_ids()) {
    line.clear();
    append_number(line, id);
    const auto& row = ns.attributes_of(id);
    auto it = row.begin();
    for (std::size_t c = 0; c < columns; ++c) {
      line += '\t';
      if (it != row.end() && it->first == c) {
        append_value(line, it->second);
        ++it;
      }
    }
    line += '\n';
    out.write(line);
  }
}

Nodeset load_nodeset_text(InFile& in) {
  Nodeset ns;
  std::string line;
  if (!in.getline(line)) throw Error(ErrorCode::MalformedHeader, "empty nodeset file");
  const auto header = split_tabs(line);
  if (header[0] != "nodeid") throw Error(ErrorCode::MalformedHeader, "nodeset header must start with 'nodeid'");
  std::vector<std::pair<std::uint16_t, AttributeType>> columns;
  for (std::size_t i = 1; i < header.size(); ++i) {
    const auto colon = header[i].rfind(':');
    if (colon == std::string_view::npos) {
      throw Error(ErrorCode::MalformedHeader, "column '" + std::string(header[i]) + "' lacks a ':type' suffix");
    }
    const auto type = parse_attribute_type(header[i].substr(colon + 1));
    if (!type) throw Error(ErrorCode::MalformedHeader, "unknown attribute type in column '" + std::string(header[i]) + "'");
    const auto name = header[i].substr(0, colon);
    if (ns.schema_index(name)) throw Error(ErrorCode::MalformedHeader, "duplicate column '" + std::string(name) + "'");
    try {
      columns.emplace_back(ns.declare_attribute(name, *type), *type);
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedHeader, e.what());
    }
  }

  std::size_t line_no = 1;
  while (in.getline(line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split_tabs(line);
    if (cells.size() != columns.size() + 1) {
      fail_at(ErrorCode::TypeParseError, line_no,
              "expected " + std::to_string(columns.size() + 1) + " columns, found " + std::to_string(cells.size()));
    }
    auto id = parse_number<NodeId>(cells[0]);
    if (!id) fail_at(ErrorCode::TypeParseError, line_no, "invalid node id '" + std::string(cells[0]) + "'");
    if (ns.contains(*id)) fail_at(ErrorCode::DuplicateNode, line_no, "duplicate node " + std::to_string(*id));
    ns.add_node(*id);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto cell = cells[c + 1];
      if (cell.empty()) continue;
      auto value = parse_value(cell, columns[c].second);
      if (!value) {
        fail_at(ErrorCode::TypeParseError, line_no,
                "cannot parse '" + std::string(cell) + "' as " + std::string(to_string(columns[c].second)));
      }
      ns.set_attribute(*id, ns.schema()[columns[c].first].name, *value);
    }
  }
  return ns;
}

void save_nodeset_binary(const Nodeset& ns, OutFile& out) {
  write_header(out, kKindNodeset);

  std::vector<NodeId> plain(ns.plain_nodes().begin(), ns.plain_nodes().end());
  std::sort(plain.begin(), plain.end());
  ByteWriter s1;
  s1.u32(static_cast<std::uint32_t>(plain.size()));
  for (NodeId id : plain) s1.u32(id);
  write_section(out, s1);

  ByteWriter s2;
  s2.u32(static_cast<std::uint32_t>(ns.schema().size()));
  for (const auto& def : ns.schema()) {
    s2.str(def.name);
    s2.u8(static_cast<std::uint8_t>(def.type));
  }
  write_section(out, s2);

  std::vector<NodeId> attributed;
  attributed.reserve(ns.attributed_count());
  for (const auto& [id, row] : ns.attributed_nodes()) attributed.push_back(id);
  std::sort(attributed.begin(), attributed.end());
  ByteWriter s3;
  s3.u32(static_cast<std::uint32_t>(attributed.size()));
  for (NodeId id : attributed) {
    const auto& row = ns.attributes_of(id);
    s3.u32(id);
    s3.u16(static_cast<std::uint16_t>(row.size()));
    for (const auto& [idx, value] : row) {
      s3.u16(idx);
      s3.u32(encode_value(value));
    }
  }
  write_section(out, s3);
}

Nodeset load_nodeset_binary(InFile& in) {
  if (read_header(in) != kKindNodeset) throw Error(ErrorCode::FormatError, "binary file does not hold a nodeset");
  Nodeset ns;
  auto s1 = read_section(in);
  for (std::uint32_t n = s1.u32(); n > 0; --n) ns.add_node(s1.u32());
  s1.expect_done();

  auto s2 = read_section(in);
  for (std::uint32_t n = s2.u32(); n > 0; --n) {
    std::string name = s2.str();
    const auto tag = s2.u8();
    if (tag > static_cast<std::uint8_t>(AttributeType::Char)) throw Error(ErrorCode::FormatError, "invalid attribute type tag");
    if (ns.schema_index(name)) throw Error(ErrorCode::FormatError, "duplicate attribute '" + name + "'");
    ns.declare_attribute(name, static_cast<AttributeType>(tag));
  }
  s2.expect_done();

  auto s3 = read_section(in);
  for (std::uint32_t n = s3.u32(); n > 0; --n) {
    const NodeId id = s3.u32();
    ns.add_node(id);
    const auto count = s3.u16();
    if (count == 0) throw Error(ErrorCode::FormatError, "attributed node without attributes");
    for (std::uint16_t i = 0; i < count; ++i) {
      const auto idx = s3.u16();
      const auto raw = s3.u32();
      if (idx >= ns.schema().size()) throw Error(ErrorCode::FormatError, "attribute index out of range");
      const auto& def = ns.schema()[idx];
      ns.set_attribute(id, def.name, decode_value(raw, def.type));
    }
  }
  s3.expect_done();
  if (!in.at_end()) throw Error(ErrorCode::FormatError, "trailing data after nodeset");
  return ns;
}

// ---------------------------------------------------------------------------
// Network text

char flag(bool b) { return b ? 't' : 'f'; }

std::string layer_header(const Layer& layer) {
  std::string s = "#layer\t" + layer.name();
  if (layer.mode() == LayerMode::TwoMode) return s + "\tmode=2\n";
  const auto& spec = layer.spec();
  s += "\tmode=1\tdirected=";
  s += flag(spec.directed);
  s += "\tvalued=";
  s += flag(spec.valued);
  s += "\tselfties=";
  s += flag(spec.allow_self_ties);
  s += "\tinbound=";
  s += flag(spec.store_inbound);
  s += '\n';
  return s;
}

void write_layer_body(const Layer& layer, OutFile& out) {
  std::string line;
  if (layer.mode() == LayerMode::OneMode) {
    const auto& one = static_cast<const LayerOneMode&>(layer);
    const bool valued = one.valued();
    one.for_each_edge([&](NodeId a, NodeId b, float v) {
      line.clear();
      append_number(line, a);
      line += '\t';
      append_number(line, b);
      if (valued) {
        line += '\t';
        append_number(line, v);
      }
      line += '\n';
      out.write(line);
    });
    return;
  }
  const auto& two = static_cast<const LayerTwoMode&>(layer);
  for (auto h : two.sorted_by_name()) {
    const auto& he = two.hyperedge(h);
    if (he.members.empty()) {
      out.write("#hyperedge\t" + he.name + "\n");
      continue;
    }
    for (NodeId m : he.members) {
      line.assign(he.name);
      line += '\t';
      append_number(line, m);
      line += '\n';
      out.write(line);
    }
  }
}

LayerSpec parse_layer_header(const std::vector<std::string_view>& cells, std::size_t line_no) {
  if (cells.size() < 3) fail_at(ErrorCode::MalformedSection, line_no, "layer header needs a name and mode");
  LayerSpec spec;
  spec.name = std::string(cells[1]);
  bool have_mode = false;
  for (std::size_t i = 2; i < cells.size(); ++i) {
    const auto eq = cells[i].find('=');
    if (eq == std::string_view::npos) fail_at(ErrorCode::MalformedSection, line_no, "expected key=value in layer header");
    const auto key = cells[i].substr(0, eq);
    const auto value = cells[i].substr(eq + 1);
    if (key == "mode") {
      if (value == "1") {
        spec.mode = LayerMode::OneMode;
      } else if (value == "2") {
        spec.mode = LayerMode::TwoMode;
      } else {
        fail_at(ErrorCode::MalformedSection, line_no, "mode must be 1 or 2");
      }
      have_mode = true;
      continue;
    }
    bool* target = nullptr;
    if (key == "directed") target = &spec.directed;
    else if (key == "valued") target = &spec.valued;
    else if (key == "selfties") target = &spec.allow_self_ties;
    else if (key == "inbound") target = &spec.store_inbound;
    else fail_at(ErrorCode::UnknownLayerHeaderKey, line_no, "unknown layer header key '" + std::string(key) + "'");
    if (value != "t" && value != "f") fail_at(ErrorCode::MalformedSection, line_no, "flag values must be t or f");
    *target = value == "t";
  }
  if (!have_mode) fail_at(ErrorCode::MalformedSection, line_no, "layer header lacks mode");
  return spec;
}

NodeId endpoint(Nodeset& ns, std::string_view cell, std::size_t line_no, bool create) {
  const NodeId id = parse_node(cell, line_no);
  if (!ns.contains(id)) {
    if (!create) fail_at(ErrorCode::UnknownNodeInEdge, line_no, "node " + std::to_string(id) + " is not in the nodeset");
    ns.add_node(id);
  }
  return id;
}

// Applies one body row to a layer. Shared by network files and layer import.
void apply_row(Layer& layer, Nodeset& ns, std::string_view line, std::size_t line_no, bool create, bool strict) {
  const auto cells = split_tabs(line);
  if (layer.mode() == LayerMode::TwoMode) {
    auto& two = static_cast<LayerTwoMode&>(layer);
    if (cells.size() == 2 && cells[0] == "#hyperedge") {
      if (two.find_hyperedge(cells[1])) fail_at(ErrorCode::MalformedSection, line_no, "repeated hyperedge marker");
      two.add_hyperedge(cells[1]);
      return;
    }
    if (cells.size() != 2) fail_at(ErrorCode::MalformedSection, line_no, "expected 'hyperedge<TAB>node'");
    if (!is_valid_name(cells[0])) fail_at(ErrorCode::MalformedSection, line_no, "empty hyperedge name");
    const NodeId node = endpoint(ns, cells[1], line_no, create);
    auto h = two.find_hyperedge(cells[0]);
    if (!h) h = two.add_hyperedge(cells[0]);
    two.add_member(*h, node);
    return;
  }
  auto& one = static_cast<LayerOneMode&>(layer);
  const std::size_t want = one.valued() ? 3 : 2;
  if (cells.size() != want && (strict || (cells.size() != 2 && cells.size() != 3))) {
    fail_at(ErrorCode::MalformedSection, line_no, "expected " + std::to_string(want) + " columns");
  }
  const NodeId a = endpoint(ns, cells[0], line_no, create);
  const NodeId b = endpoint(ns, cells[1], line_no, create);
  float value = 1.0f;
  if (cells.size() == 3) {
    auto v = parse_number<float>(cells[2]);
    if (!v) fail_at(ErrorCode::MalformedSection, line_no, "invalid edge value '" + std::string(cells[2]) + "'");
    value = *v;
  }
  try {
    one.add_edge(a, b, value);
  } catch (const Error& e) {
    fail_at(e.code(), line_no, e.what());
  }
}

Network load_network_text(InFile& in, std::shared_ptr<Nodeset> nodes, bool create) {
  Network net(std::move(nodes));
  Layer* current = nullptr;
  std::string line;
  std::size_t line_no = 0;
  while (in.getline(line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.starts_with("#layer\t")) {
      const auto spec = parse_layer_header(split_tabs(line), line_no);
      try {
        current = &net.add_layer(spec);
      } catch (const Error& e) {
        fail_at(ErrorCode::MalformedSection, line_no, e.what());
      }
      continue;
    }
    if (!current) fail_at(ErrorCode::MalformedSection, line_no, "data row before any #layer header");
    apply_row(*current, net.nodeset(), line, line_no, create, true);
  }
  return net;
}

// ---------------------------------------------------------------------------
// Network binary

void save_network_binary(const Network& net, OutFile& out) {
  write_header(out, kKindNetwork);
  ByteWriter count;
  count.u16(static_cast<std::uint16_t>(net.layer_count()));
  out.write(count.bytes());
  for (std::size_t i = 0; i < net.layer_count(); ++i) {
    const Layer& layer = net.layer_at(i);
    ByteWriter w;
    w.str(layer.name());
    w.u8(static_cast<std::uint8_t>(layer.mode()));
    if (layer.mode() == LayerMode::OneMode) {
      const auto& one = static_cast<const LayerOneMode&>(layer);
      const auto& spec = one.spec();
      w.u8(static_cast<std::uint8_t>((spec.directed ? kDirected : 0) | (spec.valued ? kValued : 0) |
                                     (spec.allow_self_ties ? kSelfTies : 0) | (spec.store_inbound ? kInbound : 0)));
      w.u64(one.edge_count());
      one.for_each_edge([&](NodeId a, NodeId b, float v) {
        w.u32(a);
        w.u32(b);
        if (spec.valued) w.f32(v);
      });
    } else {
      const auto& two = static_cast<const LayerTwoMode&>(layer);
      if (two.hyperedge_count() > std::numeric_limits<std::uint16_t>::max() + std::size_t{1}) {
        throw Error(ErrorCode::FormatError, "binary format supports at most 65536 hyperedges per layer");
      }
      const auto order = two.sorted_by_name();
      w.u32(static_cast<std::uint32_t>(order.size()));
      for (auto h : order) w.str(two.hyperedge(h).name);
      w.u64(two.membership_count());
      for (std::size_t pos = 0; pos < order.size(); ++pos) {
        for (NodeId m : two.hyperedge(order[pos]).members) {
          w.u16(static_cast<std::uint16_t>(pos));
          w.u32(m);
        }
      }
    }
    write_section(out, w);
  }
}

Network load_network_binary(InFile& in, std::shared_ptr<Nodeset> nodes, bool create) {
  if (read_header(in) != kKindNetwork) throw Error(ErrorCode::FormatError, "binary file does not hold a network");
  Network net(std::move(nodes));
  Nodeset& ns = net.nodeset();
  auto check = [&](NodeId id) {
    if (ns.contains(id)) return;
    if (!create) throw Error(ErrorCode::UnknownNodeInEdge, "node " + std::to_string(id) + " is not in the nodeset");
    ns.add_node(id);
  };
  char count_bytes[2];
  in.read_exact(count_bytes, 2);
  const auto layers = ByteReader(std::string(count_bytes, 2)).u16();
  for (std::uint16_t i = 0; i < layers; ++i) {
    auto r = read_section(in);
    LayerSpec spec;
    spec.name = r.str();
    const auto mode = r.u8();
    if (mode == 1) {
      const auto flags = r.u8();
      spec = LayerSpec::one_mode(spec.name, flags & kDirected, flags & kValued, flags & kSelfTies, flags & kInbound);
      auto& one = static_cast<LayerOneMode&>(net.add_layer(spec));
      for (std::uint64_t e = r.u64(); e > 0; --e) {
        const NodeId a = r.u32();
        const NodeId b = r.u32();
        const float v = spec.valued ? r.f32() : 1.0f;
        check(a);
        check(b);
        one.add_edge(a, b, v);
      }
    } else if (mode == 2) {
      auto& two = static_cast<LayerTwoMode&>(net.add_layer(LayerSpec::two_mode(spec.name)));
      for (std::uint32_t n = r.u32(); n > 0; --n) two.add_hyperedge(r.str());
      for (std::uint64_t n = r.u64(); n > 0; --n) {
        const auto h = r.u16();
        const NodeId node = r.u32();
        if (h >= two.hyperedge_count()) throw Error(ErrorCode::FormatError, "hyperedge index out of range");
        check(node);
        two.add_member(h, node);
      }
    } else {
      throw Error(ErrorCode::FormatError, "invalid layer mode " + std::to_string(mode));
    }
    r.expect_done();
  }
  if (!in.at_end()) throw Error(ErrorCode::FormatError, "trailing data after network");
  return net;
}

}  // namespace

std::optional<FileFormat> format_from_path(const std::filesystem::path& path) {
  const std::string name = path.filename().string();
  if (ends_with(name, ".tsv.gz")) return FileFormat::TsvGz;
  if (ends_with(name, ".bin.gz")) return FileFormat::BinGz;
  if (ends_with(name, ".tsv")) return FileFormat::Tsv;
  if (ends_with(name, ".bin")) return FileFormat::Bin;
  return std::nullopt;
}

ObjectKind detect_object_kind(const std::filesystem::path& path) {
  const auto format = require_format(path);
  InFile in(path);
  if (binary(format)) return read_header(in) == kKindNodeset ? ObjectKind::Nodeset : ObjectKind::Network;
  std::string line;
  in.getline(line);
  return line == "nodeid" || line.starts_with("nodeid\t") ? ObjectKind::Nodeset : ObjectKind::Network;
}

void save_nodeset(const Nodeset& ns, const std::filesystem::path& path) {
  const auto format = require_format(path);
  OutFile out(path, compressed(format));
  if (binary(format)) {
    save_nodeset_binary(ns, out);
  } else {
    save_nodeset_text(ns, out);
  }
  out.close();
}

Nodeset load_nodeset(const std::filesystem::path& path) {
  const auto format = require_format(path);
  InFile in(path);
  return binary(format) ? load_nodeset_binary(in) : load_nodeset_text(in);
}

void save_network(const Network& net, const std::filesystem::path& path) {
  const auto format = require_format(path);
  OutFile out(path, compressed(format));
  if (binary(format)) {
    save_network_binary(net, out);
  } else {
    for (std::size_t i = 0; i < net.layer_count(); ++i) {
      out.write(layer_header(net.layer_at(i)));
      write_layer_body(net.layer_at(i), out);
    }
  }
  out.close();
}

Network load_network(const std::filesystem::path& path, std::shared_ptr<Nodeset> nodes, NetworkLoadOptions options) {
  const auto format = require_format(path);
  if (!nodes) nodes = std::make_shared<Nodeset>();
  InFile in(path);
  return binary(format) ? load_network_binary(in, std::move(nodes), options.create_missing_nodes)
                        : load_network_text(in, std::move(nodes), options.create_missing_nodes);
}

void export_layer(const Network& net, std::string_view layer, const std::filesystem::path& path) {
  const Layer& l = net.layer(layer);
  OutFile out(path, path.extension() == ".gz");
  write_layer_body(l, out);
  out.close();
}

void import_layer(Network& net, std::string_view layer, const std::filesystem::path& path) {
  const Layer& target = net.layer(layer);
  if (!target.empty()) throw Error(ErrorCode::NonEmptyLayer, "layer '" + std::string(layer) + "' is not empty");
  std::unique_ptr<Layer> fresh;
  if (target.mode() == LayerMode::OneMode) {
    fresh = std::make_unique<LayerOneMode>(target.spec());
  } else {
    fresh = std::make_unique<LayerTwoMode>(target.spec());
  }
  InFile in(path);
  std::string line;
  std::size_t line_no = 0;
  while (in.getline(line)) {
    ++line_no;
    if (line.empty()) continue;
    apply_row(*fresh, net.nodeset(), line, line_no, false, false);
  }
  net.replace_layer(layer, std::move(fresh));
}

}  // namespace weft
