#include "weft/generators.hpp"

#include <algorithm>
#include <cmath>

#include "weft/error.hpp"
#include "weft/random.hpp"

namespace weft {

namespace {

LayerOneMode& empty_symmetric(Network& net, std::string_view name) {
  auto& layer = net.one_mode(name);
  if (layer.directed()) {
    throw Error(ErrorCode::WrongLayerMode, "generators require a symmetric layer; '" + std::string(name) + "' is directed");
  }
  if (!layer.empty()) throw Error(ErrorCode::NonEmptyLayer, "layer '" + std::string(name) + "' is not empty");
  return layer;
}

void require_probability(double p, const char* what) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw Error(ErrorCode::InvalidParameter, std::string(what) + " must be a probability in [0, 1]");
  }
}

}  // namespace

GenerationSummary generate_er(Network& net, std::string_view name, double p, std::uint64_t seed) {
  auto& layer = empty_symmetric(net, name);
  require_probability(p, "p");
  const std::vector<NodeId> ids = net.nodeset().sorted_ids();
  const auto n = static_cast<std::int64_t>(ids.size());
  GenerationSummary summary;
  if (n < 2 || p == 0.0) return summary;

  if (p == 1.0) {
    for (std::int64_t v = 1; v < n; ++v) {
      for (std::int64_t w = 0; w < v; ++w) layer.add_edge(ids[v], ids[w]);
    }
    summary.edges = layer.edge_count();
    return summary;
  }

  // Walk the pairs (v, w), w < v, in lexicographic order, jumping over a
  // geometrically distributed number of absent pairs each step.
  Rng rng(seed);
  const double log_q = std::log1p(-p);
  const double max_skip = static_cast<double>(n) * static_cast<double>(n);
  std::int64_t v = 1;
  std::int64_t w = -1;
  while (v < n) {
    const double r = uniform01(rng);
    const double skip = std::floor(std::log1p(-r) / log_q);
    if (skip >= max_skip) break;
    w += 1 + static_cast<std::int64_t>(skip);
    while (w >= v && v < n) {
      w -= v;
      ++v;
    }
    if (v < n) layer.add_edge(ids[v], ids[w]);
  }
  summary.edges = layer.edge_count();
  return summary;
}

GenerationSummary generate_ws(Network& net, std::string_view name, std::uint32_t k, double beta,
                              std::uint64_t seed) {
  auto& layer = empty_symmetric(net, name);
  const std::vector<NodeId> ids = net.nodeset().sorted_ids();
  const std::size_t n = ids.size();
  if (k == 0 || k % 2 != 0 || k >= n) {
    throw Error(ErrorCode::InvalidK, "k must be even, positive and smaller than the node count");
  }
  require_probability(beta, "beta");

  std::vector<std::pair<std::uint32_t, std::uint32_t>> lattice;
  lattice.reserve(n * (k / 2));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 1; j <= k / 2; ++j) {
      const auto t = static_cast<std::uint32_t>((i + j) % n);
      lattice.emplace_back(std::min(i, t), std::max(i, t));
      layer.add_edge(ids[i], ids[t]);
    }
  }

  Rng rng(seed);
  GenerationSummary summary;
  for (const auto& [u, v] : lattice) {
    if (uniform01(rng) >= beta) continue;
    for (std::size_t attempt = 0; attempt < n; ++attempt) {
      const auto w = static_cast<std::uint32_t>(uniform_below(rng, n));
      if (w == u || layer.has_edge(ids[u], ids[w])) continue;
      layer.remove_edge(ids[u], ids[v]);
      layer.add_edge(ids[u], ids[w]);
      ++summary.rewired;
      break;
    }
  }
  summary.edges = layer.edge_count();
  return summary;
}

GenerationSummary generate_ba(Network& net, std::string_view name, std::uint32_t m, std::uint64_t seed) {
  auto& layer = empty_symmetric(net, name);
  const std::vector<NodeId> ids = net.nodeset().sorted_ids();
  const std::size_t n = ids.size();
  if (m == 0 || m >= n) throw Error(ErrorCode::InvalidM, "m must be positive and smaller than the node count");

  // Every edge appends both endpoints, so a uniform draw from this list is a
  // degree-proportional draw over nodes.
  std::vector<std::uint32_t> endpoints;
  endpoints.reserve(2 * static_cast<std::size_t>(m) * (n - m));
  for (std::uint32_t s = 0; s < m; ++s) {
    layer.add_edge(ids[m], ids[s]);
    endpoints.push_back(m);
    endpoints.push_back(s);
  }

  Rng rng(seed);
  std::vector<std::uint32_t> targets;
  targets.reserve(m);
  for (std::uint32_t t = m + 1; t < n; ++t) {
    targets.clear();
    while (targets.size() < m) {
      const std::uint32_t x = endpoints[uniform_below(rng, endpoints.size())];
      if (std::find(targets.begin(), targets.end(), x) == targets.end()) targets.push_back(x);
    }
    for (std::uint32_t x : targets) {
      layer.add_edge(ids[t], ids[x]);
      endpoints.push_back(t);
      endpoints.push_back(x);
    }
  }
  GenerationSummary summary;
  summary.edges = layer.edge_count();
  return summary;
}

GenerationSummary generate_2mode(Network& net, std::string_view name, std::uint32_t h, double a,
                                 std::uint64_t seed) {
  auto& layer = net.two_mode(name);
  if (!layer.empty()) throw Error(ErrorCode::NonEmptyLayer, "layer '" + std::string(name) + "' is not empty");
  if (h == 0) throw Error(ErrorCode::InvalidParameter, "h must be positive");
  if (!(a >= 0.0) || !std::isfinite(a)) throw Error(ErrorCode::InvalidParameter, "a must be a non-negative mean");

  for (std::uint32_t i = 0; i < h; ++i) layer.add_hyperedge(std::to_string(i));

  Rng rng(seed);
  std::vector<char> taken(h, 0);
  std::vector<std::uint32_t> chosen;
  for (NodeId node : net.nodeset().sorted_ids()) {
    const auto c = static_cast<std::uint32_t>(std::min<std::uint64_t>(poisson(rng, a), h));
    // Floyd's sampling of c distinct indices from [0, h).
    chosen.clear();
    for (std::uint32_t j = h - c; j < h; ++j) {
      const auto t = static_cast<std::uint32_t>(uniform_below(rng, j + 1));
      const std::uint32_t pick = taken[t] ? j : t;
      taken[pick] = 1;
      chosen.push_back(pick);
    }
    std::sort(chosen.begin(), chosen.end());
    for (std::uint32_t x : chosen) {
      taken[x] = 0;
      layer.add_member(x, node);
    }
  }
  GenerationSummary summary;
  summary.memberships = layer.membership_count();
  return summary;
}

}  // namespace weft
