#include "weft/query.hpp"

#include <algorithm>
#include <numeric>

#include "weft/error.hpp"

namespace weft {

namespace {

std::vector<const Layer*> resolve(const Network& net, const LayerSelection& names) {
  std::vector<const Layer*> layers;
  if (names.empty()) {
    for (std::size_t i = 0; i < net.layer_count(); ++i) layers.push_back(&net.layer_at(i));
    return layers;
  }
  for (const auto& name : names) {
    const Layer* l = &net.layer(name);
    if (std::find(layers.begin(), layers.end(), l) == layers.end()) layers.push_back(l);
  }
  return layers;
}

}  // namespace

bool check_edge_exists(const Network& net, std::string_view layer, NodeId a, NodeId b, EdgeTraversal t) {
  const Layer& l = net.layer(layer);
  net.require_node(a);
  net.require_node(b);
  return l.check_edge(a, b, t);
}

float get_edge_value(const Network& net, std::string_view layer, NodeId a, NodeId b) {
  const Layer& l = net.layer(layer);
  net.require_node(a);
  net.require_node(b);
  return l.edge_value(a, b);
}

std::vector<NodeId> get_node_alters(const Network& net, NodeId node, const LayerSelection& layers,
                                    EdgeTraversal t) {
  const auto selected = resolve(net, layers);
  net.require_node(node);
  std::vector<NodeId> out;
  for (const Layer* l : selected) l->collect_alters(node, t, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t projected_edge_count(std::span<const std::uint64_t> hyperedge_sizes) {
  std::uint64_t total = 0;
  for (std::uint64_t k : hyperedge_sizes) {
    if (k < 2) continue;
    // k(k-1)/2 without intermediate overflow: halve the even factor first.
    std::uint64_t a = k;
    std::uint64_t b = k - 1;
    if (a % 2 == 0) {
      a /= 2;
    } else {
      b /= 2;
    }
    std::uint64_t pairs = 0;
    if (__builtin_mul_overflow(a, b, &pairs) || __builtin_add_overflow(total, pairs, &total)) {
      throw Error(ErrorCode::ArithmeticOverflow, "projected edge count exceeds 64 bits");
    }
  }
  return total;
}

std::uint64_t projected_edge_count(const LayerTwoMode& layer) {
  std::vector<std::uint64_t> sizes;
  sizes.reserve(layer.hyperedge_count());
  for (const auto& he : layer.hyperedges()) sizes.push_back(he.members.size());
  return projected_edge_count(sizes);
}

std::size_t degree(const Network& net, std::string_view layer, NodeId node, EdgeTraversal t, bool projected) {
  const Layer& l = net.layer(layer);
  net.require_node(node);
  if (l.mode() == LayerMode::OneMode) return static_cast<const LayerOneMode&>(l).degree(node, t);
  const auto& two = static_cast<const LayerTwoMode&>(l);
  return projected ? two.alters(node).size() : two.membership_degree(node);
}

double density(const Network& net, std::string_view layer) {
  const Layer& l = net.layer(layer);
  const auto n = static_cast<double>(net.nodeset().size());
  if (l.mode() == LayerMode::TwoMode) {
    const auto& two = static_cast<const LayerTwoMode&>(l);
    const double denom = n * static_cast<double>(two.hyperedge_count());
    return denom > 0 ? static_cast<double>(two.membership_count()) / denom : 0.0;
  }
  const auto& one = static_cast<const LayerOneMode&>(l);
  const bool self = one.spec().allow_self_ties;
  double denom = 0;
  if (one.directed()) {
    denom = self ? n * n : n * (n - 1);
  } else {
    denom = self ? n * (n + 1) / 2 : n * (n - 1) / 2;
  }
  return denom > 0 ? static_cast<double>(one.edge_count()) / denom : 0.0;
}

std::map<NodeId, std::size_t> Components::sizes() const {
  std::map<NodeId, std::size_t> out;
  for (const auto& [node, l] : label) ++out[l];
  return out;
}

Components connected_components(const Network& net, const LayerSelection& layers) {
  const auto selected = resolve(net, layers);
  const std::vector<NodeId> ids = net.nodeset().sorted_ids();
  std::unordered_map<NodeId, std::uint32_t> index;
  index.reserve(ids.size());
  for (std::uint32_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);

  std::vector<std::uint32_t> parent(ids.size());
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](NodeId a, NodeId b) {
    const auto ra = find(index.at(a));
    const auto rb = find(index.at(b));
    if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
  };

  for (const Layer* l : selected) {
    if (l->mode() == LayerMode::OneMode) {
      static_cast<const LayerOneMode*>(l)->for_each_edge([&](NodeId a, NodeId b, float) { unite(a, b); });
    } else {
      for (const auto& he : static_cast<const LayerTwoMode*>(l)->hyperedges()) {
        for (std::size_t i = 1; i < he.members.size(); ++i) unite(he.members[0], he.members[i]);
      }
    }
  }

  // Roots are always the smallest index in their set, i.e. the smallest ID.
  Components result;
  result.label.reserve(ids.size());
  for (std::uint32_t i = 0; i < ids.size(); ++i) {
    const auto root = find(i);
    if (root == i) ++result.count;
    result.label.emplace(ids[i], ids[root]);
  }
  return result;
}

std::optional<PathResult> shortest_path(const Network& net, NodeId source, NodeId target,
                                        const LayerSelection& layers) {
  const auto selected = resolve(net, layers);
  net.require_node(source);
  net.require_node(target);
  if (source == target) return PathResult{0, {source}};

  // Hyperedges already expanded, per selected layer; each member list is
  // scanned at most once per search.
  std::vector<std::vector<bool>> expanded(selected.size());
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i]->mode() == LayerMode::TwoMode) {
      expanded[i].assign(static_cast<const LayerTwoMode*>(selected[i])->hyperedge_count(), false);
    }
  }

  std::unordered_map<NodeId, NodeId> parent;
  parent.emplace(source, source);
  std::vector<NodeId> queue{source};
  std::vector<NodeId> discovered;

  for (std::size_t head = 0; head < queue.size(); ++head) {
    const NodeId u = queue[head];
    discovered.clear();
    for (std::size_t i = 0; i < selected.size(); ++i) {
      const Layer* l = selected[i];
      if (l->mode() == LayerMode::OneMode) {
        for (NodeId v : static_cast<const LayerOneMode*>(l)->out_neighbors(u)) {
          if (!parent.contains(v)) discovered.push_back(v);
        }
        continue;
      }
      const auto* two = static_cast<const LayerTwoMode*>(l);
      for (auto h : two->memberships(u)) {
        if (expanded[i][h]) continue;
        expanded[i][h] = true;
        for (NodeId v : two->hyperedge(h).members) {
          if (!parent.contains(v)) discovered.push_back(v);
        }
      }
    }
    std::sort(discovered.begin(), discovered.end());
    discovered.erase(std::unique(discovered.begin(), discovered.end()), discovered.end());
    for (NodeId v : discovered) {
      parent.emplace(v, u);
      if (v == target) {
        PathResult path;
        for (NodeId x = target; x != source; x = parent.at(x)) path.nodes.push_back(x);
        path.nodes.push_back(source);
        std::reverse(path.nodes.begin(), path.nodes.end());
        path.length = path.nodes.size() - 1;
        return path;
      }
      queue.push_back(v);
    }
  }
  return std::nullopt;
}

AttributeSummary summarize_attribute(const Nodeset& ns, std::string_view name) {
  AttributeSummary s;
  const auto idx = ns.schema_index(name);
  if (!idx) return s;
  s.type = ns.schema()[*idx].type;
  double sum = 0;
  for (const auto& [node, row] : ns.attributed_nodes()) {
    for (const auto& [i, value] : row) {
      if (i != *idx) continue;
      ++s.count;
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, bool>) {
              if (v) ++s.true_count;
            } else if constexpr (std::is_same_v<T, Char>) {
              ++s.frequencies[v.value];
            } else {
              const auto x = static_cast<double>(v);
              s.min = s.min ? std::min(*s.min, x) : x;
              s.max = s.max ? std::max(*s.max, x) : x;
              sum += x;
            }
          },
          value);
    }
  }
  if (s.count > 0 && (s.type == AttributeType::Int || s.type == AttributeType::Float)) {
    s.mean = sum / static_cast<double>(s.count);
  }
  return s;
}

}  // namespace weft
