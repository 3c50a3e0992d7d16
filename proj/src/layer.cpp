#include "weft/layer.hpp"

#include <algorithm>
#include <cmath>

#include "weft/error.hpp"

namespace weft {

LayerSpec LayerSpec::one_mode(std::string name, bool directed, bool valued, bool allow_self_ties,
                              bool store_inbound) {
  return LayerSpec{std::move(name), LayerMode::OneMode, directed, valued, allow_self_ties, store_inbound};
}

LayerSpec LayerSpec::two_mode(std::string name) {
  return LayerSpec{std::move(name), LayerMode::TwoMode, false, false, false, true};
}

bool operator==(const LayerSpec& a, const LayerSpec& b) {
  if (a.name != b.name || a.mode != b.mode) return false;
  if (a.mode == LayerMode::TwoMode) return true;
  // store_inbound is meaningless on symmetric layers.
  return a.directed == b.directed && a.valued == b.valued && a.allow_self_ties == b.allow_self_ties &&
         (!a.directed || a.store_inbound == b.store_inbound);
}

std::vector<NodeId> Layer::alters(NodeId node, EdgeTraversal t) const {
  std::vector<NodeId> out;
  collect_alters(node, t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t& two_mode_probe_counter() noexcept {
  thread_local std::uint64_t probes = 0;
  return probes;
}

// ---------------------------------------------------------------------------
// LayerOneMode

LayerOneMode::LayerOneMode(LayerSpec spec) : spec_(std::move(spec)) {
  if (!is_valid_name(spec_.name)) throw Error(ErrorCode::InvalidName, "invalid layer name '" + spec_.name + "'");
  spec_.mode = LayerMode::OneMode;
  if (!spec_.directed) spec_.store_inbound = true;
}

const LayerOneMode::Adjacency* LayerOneMode::find(const std::unordered_map<NodeId, Adjacency>& m, NodeId id) {
  auto it = m.find(id);
  return it == m.end() ? nullptr : &it->second;
}

bool LayerOneMode::insert(Adjacency& adj, NodeId id, float value, bool valued) {
  auto& ids = adj.ids;
  if (ids.empty() || ids.back() < id) {
    ids.push_back(id);
    if (valued) adj.values.push_back(value);
    return true;
  }
  auto pos = std::lower_bound(ids.begin(), ids.end(), id);
  const auto offset = pos - ids.begin();
  if (*pos == id) {
    if (valued) adj.values[offset] = value;
    return false;
  }
  ids.insert(pos, id);
  if (valued) adj.values.insert(adj.values.begin() + offset, value);
  return true;
}

bool LayerOneMode::erase(Adjacency& adj, NodeId id, bool valued) {
  auto pos = std::lower_bound(adj.ids.begin(), adj.ids.end(), id);
  if (pos == adj.ids.end() || *pos != id) return false;
  const auto offset = pos - adj.ids.begin();
  adj.ids.erase(pos);
  if (valued) adj.values.erase(adj.values.begin() + offset);
  return true;
}

void LayerOneMode::add_edge(NodeId a, NodeId b, float value) {
  if (a == b && !spec_.allow_self_ties) {
    throw Error(ErrorCode::SelfTieForbidden,
                "self-tie " + std::to_string(a) + " not allowed in layer '" + spec_.name + "'");
  }
  if (spec_.valued && !std::isfinite(value)) {
    throw Error(ErrorCode::InvalidParameter, "edge values must be finite");
  }
  const bool valued = spec_.valued;
  bool inserted = insert(out_[a], b, value, valued);
  if (!spec_.directed) {
    if (a != b) insert(out_[b], a, value, valued);
  } else if (spec_.store_inbound && inserted) {
    insert(in_[b], a, 0.0f, false);
  }
  if (inserted) {
    ++edge_count_;
    if (a == b) ++self_ties_;
  }
}

bool LayerOneMode::remove_edge(NodeId a, NodeId b) {
  auto drop = [this](std::unordered_map<NodeId, Adjacency>& m, NodeId from, NodeId to, bool valued) {
    auto it = m.find(from);
    if (it == m.end() || !erase(it->second, to, valued)) return false;
    if (it->second.ids.empty()) m.erase(it);
    return true;
  };
  if (!drop(out_, a, b, spec_.valued)) return false;
  if (!spec_.directed) {
    if (a != b) drop(out_, b, a, spec_.valued);
  } else if (spec_.store_inbound) {
    drop(in_, b, a, false);
  }
  --edge_count_;
  if (a == b) --self_ties_;
  return true;
}

bool LayerOneMode::has_edge(NodeId from, NodeId to) const {
  const Adjacency* adj = find(out_, from);
  return adj && std::binary_search(adj->ids.begin(), adj->ids.end(), to);
}

std::optional<float> LayerOneMode::stored_value(NodeId from, NodeId to) const {
  const Adjacency* adj = find(out_, from);
  if (!adj) return std::nullopt;
  auto pos = std::lower_bound(adj->ids.begin(), adj->ids.end(), to);
  if (pos == adj->ids.end() || *pos != to) return std::nullopt;
  return spec_.valued ? adj->values[pos - adj->ids.begin()] : 1.0f;
}

bool LayerOneMode::check_edge(NodeId a, NodeId b, EdgeTraversal t) const {
  if (!spec_.directed) return has_edge(a, b);
  switch (t) {
    case EdgeTraversal::Out: return has_edge(a, b);
    case EdgeTraversal::In: return has_edge(b, a);
    case EdgeTraversal::Both: return has_edge(a, b) || has_edge(b, a);
  }
  return false;
}

float LayerOneMode::edge_value(NodeId a, NodeId b) const { return stored_value(a, b).value_or(0.0f); }

std::span<const NodeId> LayerOneMode::out_neighbors(NodeId node) const {
  const Adjacency* adj = find(out_, node);
  return adj ? std::span<const NodeId>(adj->ids) : std::span<const NodeId>{};
}

std::span<const NodeId> LayerOneMode::in_neighbors(NodeId node) const {
  if (!spec_.directed) return out_neighbors(node);
  if (!spec_.store_inbound) {
    throw Error(ErrorCode::InboundUnavailable, "layer '" + spec_.name + "' does not store inbound edges");
  }
  const Adjacency* adj = find(in_, node);
  return adj ? std::span<const NodeId>(adj->ids) : std::span<const NodeId>{};
}

void LayerOneMode::collect_alters(NodeId node, EdgeTraversal t, std::vector<NodeId>& out) const {
  if (!spec_.directed || t == EdgeTraversal::Out) {
    auto ids = out_neighbors(node);
    out.insert(out.end(), ids.begin(), ids.end());
    return;
  }
  auto in = in_neighbors(node);
  if (t == EdgeTraversal::Both) {
    auto ids = out_neighbors(node);
    out.insert(out.end(), ids.begin(), ids.end());
  }
  out.insert(out.end(), in.begin(), in.end());
}

std::size_t LayerOneMode::degree(NodeId node, EdgeTraversal t) const {
  if (!spec_.directed || t == EdgeTraversal::Out) return out_neighbors(node).size();
  auto in = in_neighbors(node);
  if (t == EdgeTraversal::In) return in.size();
  auto out = out_neighbors(node);
  // |out ∪ in| by merge.
  std::size_t shared = 0;
  for (std::size_t i = 0, j = 0; i < out.size() && j < in.size();) {
    if (out[i] < in[j]) {
      ++i;
    } else if (in[j] < out[i]) {
      ++j;
    } else {
      ++shared, ++i, ++j;
    }
  }
  return out.size() + in.size() - shared;
}

void LayerOneMode::for_each_edge(const std::function<void(NodeId, NodeId, float)>& fn) const {
  std::vector<NodeId> sources;
  sources.reserve(out_.size());
  for (const auto& [id, adj] : out_) sources.push_back(id);
  std::sort(sources.begin(), sources.end());
  for (NodeId src : sources) {
    const Adjacency& adj = out_.at(src);
    auto start = spec_.directed ? adj.ids.begin() : std::lower_bound(adj.ids.begin(), adj.ids.end(), src);
    for (auto it = start; it != adj.ids.end(); ++it) {
      const auto offset = it - adj.ids.begin();
      fn(src, *it, spec_.valued ? adj.values[offset] : 1.0f);
    }
  }
}

bool operator==(const LayerOneMode& a, const LayerOneMode& b) {
  if (!(a.spec_ == b.spec_) || a.edge_count_ != b.edge_count_ || a.out_.size() != b.out_.size()) return false;
  for (const auto& [id, adj] : a.out_) {
    const auto* other = LayerOneMode::find(b.out_, id);
    if (!other || other->ids != adj.ids || other->values != adj.values) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LayerTwoMode

LayerTwoMode::LayerTwoMode(LayerSpec spec) : spec_(std::move(spec)) {
  if (!is_valid_name(spec_.name)) throw Error(ErrorCode::InvalidName, "invalid layer name '" + spec_.name + "'");
  spec_ = LayerSpec::two_mode(std::move(spec_.name));
}

const std::vector<LayerTwoMode::HyperedgeIndex>* LayerTwoMode::find_memberships(NodeId node) const {
  auto it = memberships_.find(node);
  return it == memberships_.end() ? nullptr : &it->second;
}

std::span<const LayerTwoMode::HyperedgeIndex> LayerTwoMode::memberships(NodeId node) const {
  const auto* m = find_memberships(node);
  return m ? std::span<const HyperedgeIndex>(*m) : std::span<const HyperedgeIndex>{};
}

// The projection has no self-pairs, so a node is never its own neighbor.
bool LayerTwoMode::check_edge(NodeId a, NodeId b, EdgeTraversal) const {
  if (a == b) return false;
  const auto* ma = find_memberships(a);
  const auto* mb = find_memberships(b);
  if (!ma || !mb) return false;
  const auto& small = ma->size() <= mb->size() ? *ma : *mb;
  const auto& large = ma->size() <= mb->size() ? *mb : *ma;
  auto& probes = two_mode_probe_counter();
  for (HyperedgeIndex h : small) {
    ++probes;
    if (std::binary_search(large.begin(), large.end(), h)) return true;
  }
  return false;
}

std::uint32_t LayerTwoMode::shared_count(NodeId a, NodeId b) const {
  if (a == b) return 0;
  const auto* ma = find_memberships(a);
  const auto* mb = find_memberships(b);
  if (!ma || !mb) return 0;
  const auto& small = ma->size() <= mb->size() ? *ma : *mb;
  const auto& large = ma->size() <= mb->size() ? *mb : *ma;
  auto& probes = two_mode_probe_counter();
  std::uint32_t shared = 0;
  for (HyperedgeIndex h : small) {
    ++probes;
    if (std::binary_search(large.begin(), large.end(), h)) ++shared;
  }
  return shared;
}

float LayerTwoMode::edge_value(NodeId a, NodeId b) const { return static_cast<float>(shared_count(a, b)); }

void LayerTwoMode::collect_alters(NodeId node, EdgeTraversal, std::vector<NodeId>& out) const {
  const auto* m = find_memberships(node);
  if (!m) return;
  for (HyperedgeIndex h : *m) {
    for (NodeId member : hyperedges_[h].members) {
      if (member != node) out.push_back(member);
    }
  }
}

LayerTwoMode::HyperedgeIndex LayerTwoMode::add_hyperedge(std::string_view name, std::span<const NodeId> members) {
  if (!is_valid_name(name)) throw Error(ErrorCode::InvalidName, "invalid hyperedge name '" + std::string(name) + "'");
  if (by_name_.contains(std::string(name))) {
    throw Error(ErrorCode::DuplicateHyperedge,
                "hyperedge '" + std::string(name) + "' already exists in layer '" + spec_.name + "'");
  }
  const auto idx = static_cast<HyperedgeIndex>(hyperedges_.size());
  Hyperedge he{std::string(name), std::vector<NodeId>(members.begin(), members.end())};
  std::sort(he.members.begin(), he.members.end());
  he.members.erase(std::unique(he.members.begin(), he.members.end()), he.members.end());
  for (NodeId m : he.members) memberships_[m].push_back(idx);
  membership_total_ += he.members.size();
  by_name_.emplace(he.name, idx);
  hyperedges_.push_back(std::move(he));
  return idx;
}

std::optional<LayerTwoMode::HyperedgeIndex> LayerTwoMode::find_hyperedge(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

bool LayerTwoMode::add_member(HyperedgeIndex h, NodeId node) {
  auto& members = hyperedges_.at(h).members;
  if (members.empty() || members.back() < node) {
    members.push_back(node);
  } else {
    auto pos = std::lower_bound(members.begin(), members.end(), node);
    if (*pos == node) return false;
    members.insert(pos, node);
  }
  auto& m = memberships_[node];
  m.insert(std::lower_bound(m.begin(), m.end(), h), h);
  ++membership_total_;
  return true;
}

bool LayerTwoMode::add_member(std::string_view hyperedge, NodeId node) {
  auto h = find_hyperedge(hyperedge);
  if (!h) throw Error(ErrorCode::UnknownHyperedge, "no hyperedge '" + std::string(hyperedge) + "' in layer '" + spec_.name + "'");
  return add_member(*h, node);
}

bool LayerTwoMode::remove_member(std::string_view hyperedge, NodeId node) {
  auto h = find_hyperedge(hyperedge);
  if (!h) throw Error(ErrorCode::UnknownHyperedge, "no hyperedge '" + std::string(hyperedge) + "' in layer '" + spec_.name + "'");
  auto& members = hyperedges_[*h].members;
  auto pos = std::lower_bound(members.begin(), members.end(), node);
  if (pos == members.end() || *pos != node) return false;
  members.erase(pos);
  auto it = memberships_.find(node);
  auto& m = it->second;
  m.erase(std::lower_bound(m.begin(), m.end(), *h));
  if (m.empty()) memberships_.erase(it);
  --membership_total_;
  return true;
}

std::vector<LayerTwoMode::HyperedgeIndex> LayerTwoMode::sorted_by_name() const {
  std::vector<HyperedgeIndex> order(hyperedges_.size());
  for (HyperedgeIndex i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [this](HyperedgeIndex x, HyperedgeIndex y) { return hyperedges_[x].name < hyperedges_[y].name; });
  return order;
}

bool operator==(const LayerTwoMode& a, const LayerTwoMode& b) {
  if (!(a.spec_ == b.spec_) || a.hyperedges_.size() != b.hyperedges_.size() ||
      a.membership_total_ != b.membership_total_) {
    return false;
  }
  for (const auto& he : a.hyperedges_) {
    auto idx = b.find_hyperedge(he.name);
    if (!idx || b.hyperedges_[*idx].members != he.members) return false;
  }
  return true;
}

}  // namespace weft
