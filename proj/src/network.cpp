#include "weft/network.hpp"

#include "weft/error.hpp"

namespace weft {

Network::Network(std::shared_ptr<Nodeset> nodes) : nodes_(std::move(nodes)) {
  if (!nodes_) throw Error(ErrorCode::InvalidObject, "network requires a nodeset");
}

std::size_t Network::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    if (layers_[i]->name() == name) return i;
  }
  throw Error(ErrorCode::UnknownLayer, "no layer named '" + std::string(name) + "'");
}

bool Network::has_layer(std::string_view name) const noexcept {
  for (const auto& l : layers_) {
    if (l->name() == name) return true;
  }
  return false;
}

Layer& Network::add_layer(const LayerSpec& spec) {
  if (has_layer(spec.name)) throw Error(ErrorCode::DuplicateLayer, "layer '" + spec.name + "' already exists");
  if (spec.mode == LayerMode::OneMode) {
    layers_.push_back(std::make_unique<LayerOneMode>(spec));
  } else {
    layers_.push_back(std::make_unique<LayerTwoMode>(spec));
  }
  return *layers_.back();
}

void Network::remove_layer(std::string_view name) { layers_.erase(layers_.begin() + index_of(name)); }

const Layer& Network::layer(std::string_view name) const { return *layers_[index_of(name)]; }
Layer& Network::layer(std::string_view name) { return *layers_[index_of(name)]; }

const LayerOneMode& Network::one_mode(std::string_view name) const {
  const Layer& l = layer(name);
  if (l.mode() != LayerMode::OneMode) {
    throw Error(ErrorCode::WrongLayerMode, "layer '" + std::string(name) + "' is not one-mode");
  }
  return static_cast<const LayerOneMode&>(l);
}

LayerOneMode& Network::one_mode(std::string_view name) {
  return const_cast<LayerOneMode&>(std::as_const(*this).one_mode(name));
}

const LayerTwoMode& Network::two_mode(std::string_view name) const {
  const Layer& l = layer(name);
  if (l.mode() != LayerMode::TwoMode) {
    throw Error(ErrorCode::WrongLayerMode, "layer '" + std::string(name) + "' is not two-mode");
  }
  return static_cast<const LayerTwoMode&>(l);
}

LayerTwoMode& Network::two_mode(std::string_view name) {
  return const_cast<LayerTwoMode&>(std::as_const(*this).two_mode(name));
}

std::vector<std::string_view> Network::layer_names() const {
  std::vector<std::string_view> names;
  names.reserve(layers_.size());
  for (const auto& l : layers_) names.push_back(l->name());
  return names;
}

void Network::replace_layer(std::string_view name, std::unique_ptr<Layer> layer) {
  const std::size_t i = index_of(name);
  if (!layer || layer->name() != name) {
    throw Error(ErrorCode::InvalidParameter, "replacement layer must keep the name '" + std::string(name) + "'");
  }
  layers_[i] = std::move(layer);
}

void Network::require_node(NodeId id) const {
  if (!nodes_->contains(id)) {
    throw Error(ErrorCode::UnknownNode, "node " + std::to_string(id) + " is not in the nodeset");
  }
}

void Network::add_edge(std::string_view layer, NodeId a, NodeId b, float value) {
  auto& l = one_mode(layer);
  require_node(a);
  require_node(b);
  l.add_edge(a, b, value);
}

void Network::remove_edge(std::string_view layer, NodeId a, NodeId b) { one_mode(layer).remove_edge(a, b); }

void Network::add_hyperedge(std::string_view layer, std::string_view name, std::span<const NodeId> members) {
  auto& l = two_mode(layer);
  for (NodeId m : members) require_node(m);
  l.add_hyperedge(name, members);
}

void Network::add_to_hyperedge(std::string_view layer, std::string_view name, NodeId node) {
  auto& l = two_mode(layer);
  require_node(node);
  l.add_member(name, node);
}

void Network::remove_from_hyperedge(std::string_view layer, std::string_view name, NodeId node) {
  auto& l = two_mode(layer);
  require_node(node);
  l.remove_member(name, node);
}

bool operator==(const Network& a, const Network& b) {
  if (a.layers_.size() != b.layers_.size()) return false;
  for (std::size_t i = 0; i < a.layers_.size(); ++i) {
    const Layer& x = *a.layers_[i];
    const Layer& y = *b.layers_[i];
    if (x.mode() != y.mode()) return false;
    if (x.mode() == LayerMode::OneMode) {
      if (!(static_cast<const LayerOneMode&>(x) == static_cast<const LayerOneMode&>(y))) return false;
    } else if (!(static_cast<const LayerTwoMode&>(x) == static_cast<const LayerTwoMode&>(y))) {
      return false;
    }
  }
  return true;
}

}  // namespace weft
