#pragma once

#include <memory>
#include <span>
#include <string_view>
#include <vector>

#include "weft/layer.hpp"
#include "weft/nodeset.hpp"

namespace weft {

/// A multilayer network over a (possibly shared) nodeset. Layers keep their
/// insertion order. Mutations through `Network` validate node IDs against the
/// nodeset; the layer classes themselves do not.
class Network {
 public:
  explicit Network(std::shared_ptr<Nodeset> nodes);

  Network(const Network&) = delete;
  Network& operator=(const Network&) = delete;
  Network(Network&&) noexcept = default;
  Network& operator=(Network&&) noexcept = default;

  const Nodeset& nodeset() const noexcept { return *nodes_; }
  Nodeset& nodeset() noexcept { return *nodes_; }
  const std::shared_ptr<Nodeset>& nodeset_ptr() const noexcept { return nodes_; }

  Layer& add_layer(const LayerSpec& spec);
  void remove_layer(std::string_view name);

  bool has_layer(std::string_view name) const noexcept;
  /// Throws UnknownLayer.
  const Layer& layer(std::string_view name) const;
  Layer& layer(std::string_view name);
  /// Throw UnknownLayer or WrongLayerMode.
  const LayerOneMode& one_mode(std::string_view name) const;
  LayerOneMode& one_mode(std::string_view name);
  const LayerTwoMode& two_mode(std::string_view name) const;
  LayerTwoMode& two_mode(std::string_view name);

  std::size_t layer_count() const noexcept { return layers_.size(); }
  const Layer& layer_at(std::size_t i) const { return *layers_.at(i); }
  Layer& layer_at(std::size_t i) { return *layers_.at(i); }
  std::vector<std::string_view> layer_names() const;

  /// Swaps in a rebuilt layer of the same name (used by in-place transforms).
  void replace_layer(std::string_view name, std::unique_ptr<Layer> layer);

  void add_edge(std::string_view layer, NodeId a, NodeId b, float value = 1.0f);
  void remove_edge(std::string_view layer, NodeId a, NodeId b);
  void add_hyperedge(std::string_view layer, std::string_view name, std::span<const NodeId> members);
  void add_to_hyperedge(std::string_view layer, std::string_view name, NodeId node);
  void remove_from_hyperedge(std::string_view layer, std::string_view name, NodeId node);

  /// Throws UnknownNode.
  void require_node(NodeId id) const;

  /// Layer-by-layer extensional equality (nodesets are not compared).
  friend bool operator==(const Network& a, const Network& b);

 private:
  std::size_t index_of(std::string_view name) const;

  std::shared_ptr<Nodeset> nodes_;
  std::vector<std::unique_ptr<Layer>> layers_;
};

}  // namespace weft
