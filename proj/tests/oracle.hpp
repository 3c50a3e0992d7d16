#pragma once

// Brute-force reference implementations used by the tests. These materialize
// what the engine deliberately avoids materializing (pairwise projections,
// dense matrices, explicit union graphs) and share no code with the engine's
// query paths.

#include <algorithm>
#include <cstdint>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "weft/network.hpp"

namespace oracle {

using weft::NodeId;

/// Two-mode data as plain vectors: hyperedge name -> members.
struct Affiliations {
  std::vector<std::pair<std::string, std::vector<NodeId>>> hyperedges;
};

/// Random affiliations: each of n nodes joins min(Poisson(a), h) distinct
/// hyperedges out of h. Uses <random> directly, independent of the engine's
/// generators.
inline Affiliations random_affiliations(std::mt19937_64& rng, std::uint32_t n, std::uint32_t h, double a) {
  Affiliations aff;
  for (std::uint32_t i = 0; i < h; ++i) aff.hyperedges.push_back({"he" + std::to_string(i), {}});
  std::poisson_distribution<int> count(a);
  std::vector<std::uint32_t> order(h);
  for (NodeId node = 0; node < n; ++node) {
    const int c = std::min<int>(count(rng), static_cast<int>(h));
    for (std::uint32_t i = 0; i < h; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    for (int j = 0; j < c; ++j) aff.hyperedges[order[j]].second.push_back(node);
  }
  return aff;
}

/// Projection with multiplicity: unordered pair -> number of hyperedges both
/// nodes belong to. Every hyperedge of size k contributes its k(k-1)/2 pairs.
struct Projection {
  std::map<std::pair<NodeId, NodeId>, std::uint32_t> weight;
  std::map<NodeId, std::set<NodeId>> neighbors;

  std::uint32_t value(NodeId a, NodeId b) const {
    auto it = weight.find({std::min(a, b), std::max(a, b)});
    return it == weight.end() ? 0 : it->second;
  }
  std::vector<NodeId> alters(NodeId a) const {
    auto it = neighbors.find(a);
    return it == neighbors.end() ? std::vector<NodeId>{} : std::vector<NodeId>(it->second.begin(), it->second.end());
  }
  std::uint64_t pair_count_with_multiplicity() const {
    std::uint64_t total = 0;
    for (const auto& [pair, w] : weight) total += w;
    return total;
  }
};

inline Projection project(const Affiliations& aff) {
  Projection p;
  for (const auto& [name, members] : aff.hyperedges) {
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const NodeId a = std::min(members[i], members[j]);
        const NodeId b = std::max(members[i], members[j]);
        if (a == b) continue;
        ++p.weight[{a, b}];
        p.neighbors[a].insert(b);
        p.neighbors[b].insert(a);
      }
    }
  }
  return p;
}

/// Dense n x n matrix; 0 means no edge.
using Matrix = std::vector<std::vector<double>>;

inline Matrix dense(const weft::LayerOneMode& layer, std::uint32_t n) {
  Matrix m(n, std::vector<double>(n, 0.0));
  for (NodeId a = 0; a < n; ++a) {
    for (NodeId b = 0; b < n; ++b) {
      if (auto v = layer.stored_value(a, b)) m[a][b] = *v;
    }
  }
  return m;
}

/// Materialized union graph over layers: out-adjacency sets. Directed
/// one-mode layers add a->b only; symmetric layers and two-mode projections
/// add both directions.
struct UnionGraph {
  std::map<NodeId, std::set<NodeId>> out;

  void add(NodeId a, NodeId b, bool both) {
    out[a].insert(b);
    if (both) out[b].insert(a);
  }
};

inline UnionGraph materialize(const weft::Network& net, const std::vector<std::string>& layers) {
  UnionGraph g;
  for (std::size_t i = 0; i < net.layer_count(); ++i) {
    const weft::Layer& l = net.layer_at(i);
    if (!layers.empty() && std::find(layers.begin(), layers.end(), l.name()) == layers.end()) continue;
    if (l.mode() == weft::LayerMode::OneMode) {
      const auto& one = static_cast<const weft::LayerOneMode&>(l);
      one.for_each_edge([&](NodeId a, NodeId b, float) { g.add(a, b, !one.directed()); });
    } else {
      for (const auto& he : static_cast<const weft::LayerTwoMode&>(l).hyperedges()) {
        for (NodeId a : he.members) {
          for (NodeId b : he.members) {
            if (a != b) g.add(a, b, false);
          }
        }
      }
    }
  }
  return g;
}

/// Hop distance by plain BFS; -1 when unreachable.
inline long bfs_distance(const UnionGraph& g, NodeId s, NodeId t) {
  if (s == t) return 0;
  std::map<NodeId, long> dist{{s, 0}};
  std::queue<NodeId> q;
  q.push(s);
  while (!q.empty()) {
    const NodeId u = q.front();
    q.pop();
    auto it = g.out.find(u);
    if (it == g.out.end()) continue;
    for (NodeId v : it->second) {
      if (dist.contains(v)) continue;
      dist[v] = dist[u] + 1;
      if (v == t) return dist[v];
      q.push(v);
    }
  }
  return -1;
}

/// Weak components via union-find over the union graph; label = min member.
inline std::map<NodeId, NodeId> weak_components(const UnionGraph& g, const std::vector<NodeId>& nodes) {
  std::map<NodeId, NodeId> parent;
  for (NodeId n : nodes) parent[n] = n;
  auto find = [&](NodeId x) {
    while (parent[x] != x) x = parent[x];
    return x;
  };
  for (const auto& [a, outs] : g.out) {
    for (NodeId b : outs) {
      const NodeId ra = find(a);
      const NodeId rb = find(b);
      if (ra != rb) parent[std::max(ra, rb)] = std::min(ra, rb);
    }
  }
  std::map<NodeId, NodeId> label;
  for (NodeId n : nodes) label[n] = find(n);
  return label;
}

}  // namespace oracle
