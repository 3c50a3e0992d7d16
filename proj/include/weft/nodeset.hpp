#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "weft/types.hpp"

namespace weft {

struct AttributeDef {
  std::string name;
  AttributeType type;
  friend bool operator==(const AttributeDef&, const AttributeDef&) = default;
};

/// A population of node IDs with sparse, typed attributes.
///
/// Nodes without attributes live in a plain hash set; nodes with at least one
/// attribute live in a dictionary keyed by node ID. Nodes migrate between the
/// two as their last attribute is removed or their first one is set. Absent
/// attributes are never stored.
///
/// An attribute name is bound to one type by its first write and keeps that
/// binding for the lifetime of the nodeset (it survives removal of the last
/// value).
class Nodeset {
 public:
  /// (schema index, value) pairs sorted by schema index.
  using AttributeRow = std::vector<std::pair<std::uint16_t, AttributeValue>>;

  Nodeset() = default;

  /// Nodes 0..count-1.
  static Nodeset with_count(std::uint32_t count);
  /// Exactly `ids`; throws DuplicateNode on repeats.
  static Nodeset with_ids(std::span<const NodeId> ids);

  std::size_t size() const noexcept { return plain_.size() + attributed_.size(); }
  bool contains(NodeId id) const noexcept {
    return plain_.contains(id) || attributed_.contains(id);
  }

  /// Throws DuplicateNode if present.
  void add_node(NodeId id);
  /// Adds if absent; returns whether it was added.
  bool ensure_node(NodeId id);

  void set_attribute(NodeId node, std::string_view name, AttributeValue value);
  std::optional<AttributeValue> get_attribute(NodeId node, std::string_view name) const;
  void remove_attribute(NodeId node, std::string_view name);

  const std::vector<AttributeDef>& schema() const noexcept { return schema_; }
  std::optional<std::uint16_t> schema_index(std::string_view name) const;
  /// Registers a name without assigning values (used by loaders).
  std::uint16_t declare_attribute(std::string_view name, AttributeType type);

  // Storage introspection.
  std::size_t plain_count() const noexcept { return plain_.size(); }
  std::size_t attributed_count() const noexcept { return attributed_.size(); }
  bool is_plain(NodeId id) const noexcept { return plain_.contains(id); }
  bool is_attributed(NodeId id) const noexcept { return attributed_.contains(id); }
  /// Empty for plain or unknown nodes.
  const AttributeRow& attributes_of(NodeId id) const;

  const std::unordered_map<NodeId, AttributeRow>& attributed_nodes() const noexcept { return attributed_; }
  const std::unordered_set<NodeId>& plain_nodes() const noexcept { return plain_; }

  /// All node IDs ascending.
  std::vector<NodeId> sorted_ids() const;

  friend bool operator==(const Nodeset& a, const Nodeset& b);

 private:
  void require_node(NodeId id) const;

  std::unordered_set<NodeId> plain_;
  std::unordered_map<NodeId, AttributeRow> attributed_;
  std::vector<AttributeDef> schema_;
  std::unordered_map<std::string, std::uint16_t> schema_lookup_;
};

}  // namespace weft
