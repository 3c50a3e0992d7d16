#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "weft/network.hpp"

namespace weft {

/// Layer names to query; empty selects every layer of the network.
using LayerSelection = std::vector<std::string>;

// Pseudo-projection queries. These validate node IDs (UnknownNode) and layer
// names (UnknownLayer) and dispatch to the layer's shared query interface.

bool check_edge_exists(const Network& net, std::string_view layer, NodeId a, NodeId b,
                       EdgeTraversal t = EdgeTraversal::Both);
float get_edge_value(const Network& net, std::string_view layer, NodeId a, NodeId b);
/// Union of per-layer alters, ascending.
std::vector<NodeId> get_node_alters(const Network& net, NodeId node,
                                    const LayerSelection& layers = {},
                                    EdgeTraversal t = EdgeTraversal::Both);

/// Sum of k(k-1)/2 over hyperedge sizes; throws ArithmeticOverflow past 2^64-1.
std::uint64_t projected_edge_count(std::span<const std::uint64_t> hyperedge_sizes);
std::uint64_t projected_edge_count(const LayerTwoMode& layer);

/// One-mode: alter count for the traversal. Two-mode: distinct co-members
/// when `projected`, otherwise the number of memberships.
std::size_t degree(const Network& net, std::string_view layer, NodeId node,
                   EdgeTraversal t = EdgeTraversal::Both, bool projected = true);

/// One-mode: edges over possible edges (self-ties in the denominator only when
/// allowed). Two-mode: memberships / (nodes * hyperedges). 0 for empty
/// denominators.
double density(const Network& net, std::string_view layer);

struct Components {
  /// Every node of the nodeset mapped to the smallest node ID in its
  /// (weak) component.
  std::unordered_map<NodeId, NodeId> label;
  std::size_t count = 0;

  NodeId label_of(NodeId node) const { return label.at(node); }
  /// Component sizes keyed by label, ascending by label.
  std::map<NodeId, std::size_t> sizes() const;
};

Components connected_components(const Network& net, const LayerSelection& layers = {});

struct PathResult {
  std::size_t length = 0;
  std::vector<NodeId> nodes;
};

/// Unweighted BFS over the union of the selected layers. Directed layers are
/// followed outbound; two-mode layers connect co-members. Alters are visited
/// in ascending ID order so the returned path is deterministic. nullopt when
/// the target is unreachable.
std::optional<PathResult> shortest_path(const Network& net, NodeId source, NodeId target,
                                        const LayerSelection& layers = {});

struct AttributeSummary {
  std::optional<AttributeType> type;  // nullopt for names never declared
  std::size_t count = 0;              // nodes holding the attribute
  // Int / Float
  std::optional<double> min;
  std::optional<double> max;
  std::optional<double> mean;
  // Bool
  std::size_t true_count = 0;
  // Char
  std::map<char32_t, std::size_t> frequencies;
};

AttributeSummary summarize_attribute(const Nodeset& ns, std::string_view name);

}  // namespace weft
