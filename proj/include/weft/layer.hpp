#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "weft/types.hpp"

namespace weft {

struct LayerSpec {
  std::string name;
  LayerMode mode = LayerMode::OneMode;
  // The remaining flags only apply to one-mode layers.
  bool directed = false;
  bool valued = false;
  bool allow_self_ties = false;
  bool store_inbound = true;

  static LayerSpec one_mode(std::string name, bool directed = false, bool valued = false,
                            bool allow_self_ties = false, bool store_inbound = true);
  static LayerSpec two_mode(std::string name);

  /// Two-mode specs compare equal regardless of the one-mode-only flags.
  friend bool operator==(const LayerSpec& a, const LayerSpec& b);
};

/// Query surface shared by one-mode and two-mode layers. Two-mode layers
/// answer these as if they had been projected to one-mode form, without
/// materializing the projection.
///
/// Node IDs are not validated here; `Network` and the free functions in
/// query.hpp check them against the nodeset.
class Layer {
 public:
  virtual ~Layer() = default;

  virtual const LayerSpec& spec() const noexcept = 0;
  const std::string& name() const noexcept { return spec().name; }
  LayerMode mode() const noexcept { return spec().mode; }

  virtual bool check_edge(NodeId a, NodeId b, EdgeTraversal t = EdgeTraversal::Both) const = 0;
  virtual float edge_value(NodeId a, NodeId b) const = 0;
  /// Appends the alters of `node` to `out`; may append duplicates.
  virtual void collect_alters(NodeId node, EdgeTraversal t, std::vector<NodeId>& out) const = 0;
  virtual bool empty() const noexcept = 0;

  /// Sorted, duplicate-free alters.
  std::vector<NodeId> alters(NodeId node, EdgeTraversal t = EdgeTraversal::Both) const;
};

class LayerOneMode final : public Layer {
 public:
  /// Neighbor IDs ascending; `values` is parallel to `ids` on valued layers
  /// and empty on binary ones.
  struct Adjacency {
    std::vector<NodeId> ids;
    std::vector<float> values;
  };

  explicit LayerOneMode(LayerSpec spec);

  const LayerSpec& spec() const noexcept override { return spec_; }
  bool directed() const noexcept { return spec_.directed; }
  bool valued() const noexcept { return spec_.valued; }
  bool has_inbound() const noexcept { return !spec_.directed || spec_.store_inbound; }

  bool check_edge(NodeId a, NodeId b, EdgeTraversal t = EdgeTraversal::Both) const override;
  /// Stored a->b value; 1.0 for binary edges, 0.0 when absent.
  float edge_value(NodeId a, NodeId b) const override;
  void collect_alters(NodeId node, EdgeTraversal t, std::vector<NodeId>& out) const override;
  bool empty() const noexcept override { return edge_count_ == 0; }

  /// Throws SelfTieForbidden. Binary layers ignore `value`; re-adding an
  /// existing edge overwrites its value.
  void add_edge(NodeId a, NodeId b, float value = 1.0f);
  /// Returns whether an edge was removed.
  bool remove_edge(NodeId a, NodeId b);

  /// Stored edge a->b (either direction on symmetric layers).
  bool has_edge(NodeId from, NodeId to) const;
  std::optional<float> stored_value(NodeId from, NodeId to) const;

  std::span<const NodeId> out_neighbors(NodeId node) const;
  /// Throws InboundUnavailable when the in-index was not kept.
  std::span<const NodeId> in_neighbors(NodeId node) const;
  /// Alter count for a traversal; same error rules as collect_alters.
  std::size_t degree(NodeId node, EdgeTraversal t) const;

  /// Distinct edges: unordered pairs on symmetric layers, arcs on directed.
  std::uint64_t edge_count() const noexcept { return edge_count_; }
  std::uint64_t self_tie_count() const noexcept { return self_ties_; }

  /// Canonical order: source ascending, target ascending; symmetric layers
  /// report each edge once with source <= target.
  void for_each_edge(const std::function<void(NodeId, NodeId, float)>& fn) const;

  std::size_t out_index_size() const noexcept { return out_.size(); }
  std::size_t in_index_size() const noexcept { return in_.size(); }

  /// Extensional equality (spec plus edge set with values).
  friend bool operator==(const LayerOneMode& a, const LayerOneMode& b);

 private:
  static bool insert(Adjacency& adj, NodeId id, float value, bool valued);
  static bool erase(Adjacency& adj, NodeId id, bool valued);
  static const Adjacency* find(const std::unordered_map<NodeId, Adjacency>& m, NodeId id);

  LayerSpec spec_;
  std::unordered_map<NodeId, Adjacency> out_;
  std::unordered_map<NodeId, Adjacency> in_;
  std::uint64_t edge_count_ = 0;
  std::uint64_t self_ties_ = 0;
};

struct Hyperedge {
  std::string name;
  /// Ascending, duplicate-free.
  std::vector<NodeId> members;
};

/// Named hyperedges plus the reverse node -> memberships index. The two
/// indexes are always mutated together.
class LayerTwoMode final : public Layer {
 public:
  using HyperedgeIndex = std::uint32_t;

  explicit LayerTwoMode(LayerSpec spec);

  const LayerSpec& spec() const noexcept override { return spec_; }

  /// True iff the membership sets overlap. Iterates the smaller set and stops
  /// at the first shared hyperedge.
  bool check_edge(NodeId a, NodeId b, EdgeTraversal t = EdgeTraversal::Both) const override;
  /// Number of shared hyperedges.
  float edge_value(NodeId a, NodeId b) const override;
  /// Co-members across all of the node's hyperedges, excluding the node.
  void collect_alters(NodeId node, EdgeTraversal t, std::vector<NodeId>& out) const override;
  bool empty() const noexcept override { return hyperedges_.empty(); }

  std::uint32_t shared_count(NodeId a, NodeId b) const;

  /// Members are deduplicated. Throws DuplicateHyperedge / InvalidName.
  HyperedgeIndex add_hyperedge(std::string_view name, std::span<const NodeId> members = {});
  /// Returns whether the node was newly added. Throws UnknownHyperedge.
  bool add_member(std::string_view hyperedge, NodeId node);
  bool add_member(HyperedgeIndex h, NodeId node);
  /// Returns whether the node was a member. Throws UnknownHyperedge.
  bool remove_member(std::string_view hyperedge, NodeId node);

  std::optional<HyperedgeIndex> find_hyperedge(std::string_view name) const;
  const Hyperedge& hyperedge(HyperedgeIndex h) const { return hyperedges_.at(h); }
  std::span<const Hyperedge> hyperedges() const noexcept { return hyperedges_; }
  std::size_t hyperedge_count() const noexcept { return hyperedges_.size(); }

  /// Hyperedge indices ascending; empty span for nodes without memberships.
  std::span<const HyperedgeIndex> memberships(NodeId node) const;
  std::size_t membership_degree(NodeId node) const { return memberships(node).size(); }
  /// Total stored node-hyperedge ties.
  std::uint64_t membership_count() const noexcept { return membership_total_; }
  /// Nodes with at least one membership.
  std::size_t member_node_count() const noexcept { return memberships_.size(); }
  const std::unordered_map<NodeId, std::vector<HyperedgeIndex>>& membership_index() const noexcept {
    return memberships_;
  }

  /// Hyperedge indices ordered by name (canonical output order).
  std::vector<HyperedgeIndex> sorted_by_name() const;

  /// Extensional equality: same hyperedge names with the same member sets.
  friend bool operator==(const LayerTwoMode& a, const LayerTwoMode& b);

 private:
  const std::vector<HyperedgeIndex>* find_memberships(NodeId node) const;

  LayerSpec spec_;
  std::vector<Hyperedge> hyperedges_;
  std::unordered_map<std::string, HyperedgeIndex> by_name_;
  std::unordered_map<NodeId, std::vector<HyperedgeIndex>> memberships_;
  std::uint64_t membership_total_ = 0;
};

/// Set-membership probes performed by two-mode edge checks on this thread.
/// Used to verify the "iterate the smaller collection" cost contract.
std::uint64_t& two_mode_probe_counter() noexcept;

}  // namespace weft
