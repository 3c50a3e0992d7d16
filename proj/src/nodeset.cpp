#include "weft/nodeset.hpp"

#include <algorithm>
#include <limits>

#include "weft/error.hpp"

namespace weft {

namespace {

const Nodeset::AttributeRow kEmptyRow;

std::string node_message(NodeId id) { return "node " + std::to_string(id) + " is not in the nodeset"; }

}  // namespace

Nodeset Nodeset::with_count(std::uint32_t count) {
  Nodeset ns;
  ns.plain_.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i) ns.plain_.insert(i);
  return ns;
}

Nodeset Nodeset::with_ids(std::span<const NodeId> ids) {
  Nodeset ns;
  ns.plain_.reserve(ids.size());
  for (NodeId id : ids) ns.add_node(id);
  return ns;
}

void Nodeset::add_node(NodeId id) {
  if (contains(id)) throw Error(ErrorCode::DuplicateNode, "duplicate node " + std::to_string(id));
  plain_.insert(id);
}

bool Nodeset::ensure_node(NodeId id) {
  if (contains(id)) return false;
  plain_.insert(id);
  return true;
}

void Nodeset::require_node(NodeId id) const {
  if (!contains(id)) throw Error(ErrorCode::UnknownNode, node_message(id));
}

std::optional<std::uint16_t> Nodeset::schema_index(std::string_view name) const {
  auto it = schema_lookup_.find(std::string(name));
  if (it == schema_lookup_.end()) return std::nullopt;
  return it->second;
}

std::uint16_t Nodeset::declare_attribute(std::string_view name, AttributeType type) {
  if (auto idx = schema_index(name)) {
    if (schema_[*idx].type != type) {
      throw Error(ErrorCode::TypeMismatch, "attribute '" + std::string(name) + "' is " +
                                               std::string(to_string(schema_[*idx].type)) + ", not " +
                                               std::string(to_string(type)));
    }
    return *idx;
  }
  if (!is_valid_name(name) || name.find(':') != std::string_view::npos) {
    throw Error(ErrorCode::InvalidName, "invalid attribute name '" + std::string(name) + "'");
  }
  if (schema_.size() >= std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorCode::InvalidParameter, "too many attribute names");
  }
  const auto idx = static_cast<std::uint16_t>(schema_.size());
  schema_.push_back({std::string(name), type});
  schema_lookup_.emplace(std::string(name), idx);
  return idx;
}

void Nodeset::set_attribute(NodeId node, std::string_view name, AttributeValue value) {
  require_node(node);
  if (const auto* c = std::get_if<Char>(&value); c && !is_unicode_scalar(c->value)) {
    throw Error(ErrorCode::TypeMismatch, "char attribute must be a Unicode scalar value");
  }
  const std::uint16_t idx = declare_attribute(name, type_of(value));

  auto it = attributed_.find(node);
  if (it == attributed_.end()) {
    plain_.erase(node);
    attributed_.emplace(node, AttributeRow{{idx, value}});
    return;
  }
  auto& row = it->second;
  auto pos = std::lower_bound(row.begin(), row.end(), idx,
                              [](const auto& entry, std::uint16_t i) { return entry.first < i; });
  if (pos != row.end() && pos->first == idx) {
    pos->second = value;
  } else {
    row.insert(pos, {idx, value});
  }
}

std::optional<AttributeValue> Nodeset::get_attribute(NodeId node, std::string_view name) const {
  require_node(node);
  auto idx = schema_index(name);
  if (!idx) return std::nullopt;
  auto it = attributed_.find(node);
  if (it == attributed_.end()) return std::nullopt;
  for (const auto& [i, v] : it->second) {
    if (i == *idx) return v;
  }
  return std::nullopt;
}

void Nodeset::remove_attribute(NodeId node, std::string_view name) {
  require_node(node);
  auto idx = schema_index(name);
  if (!idx) return;
  auto it = attributed_.find(node);
  if (it == attributed_.end()) return;
  auto& row = it->second;
  std::erase_if(row, [&](const auto& entry) { return entry.first == *idx; });
  if (row.empty()) {
    attributed_.erase(it);
    plain_.insert(node);
  }
}

const Nodeset::AttributeRow& Nodeset::attributes_of(NodeId id) const {
  auto it = attributed_.find(id);
  return it == attributed_.end() ? kEmptyRow : it->second;
}

std::vector<NodeId> Nodeset::sorted_ids() const {
  std::vector<NodeId> ids;
  ids.reserve(size());
  ids.insert(ids.end(), plain_.begin(), plain_.end());
  for (const auto& [id, row] : attributed_) ids.push_back(id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool operator==(const Nodeset& a, const Nodeset& b) {
  if (a.schema_ != b.schema_ || a.plain_ != b.plain_ || a.attributed_.size() != b.attributed_.size()) {
    return false;
  }
  for (const auto& [id, row] : a.attributed_) {
    auto it = b.attributed_.find(id);
    if (it == b.attributed_.end() || it->second.size() != row.size()) return false;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].first != it->second[i].first || !same_value(row[i].second, it->second[i].second)) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace weft
