#pragma once

// Random nodesets and networks for round-trip tests, plus a scratch
// directory helper.

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include "weft/network.hpp"

namespace instances {

using weft::NodeId;

class TempDir {
 public:
  explicit TempDir(const std::string& tag) {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() / ("weft-" + tag + "-" + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline std::string random_name(std::mt19937_64& rng, const std::string& prefix) {
  static const std::vector<std::string> pieces{"a", "Work", " ", "é", "日本", "\\", "x_y", "#", "=", "7"};
  std::string s = prefix;
  const int len = 1 + static_cast<int>(rng() % 4);
  for (int i = 0; i < len; ++i) s += pieces[rng() % pieces.size()];
  return s;
}

inline float random_float(std::mt19937_64& rng) {
  switch (rng() % 6) {
    case 0: return 0.1f;
    case 1: return -0.0f;
    case 2: return 1e-40f;  // subnormal
    case 3: return 3.4e38f;
    default: return static_cast<float>(static_cast<double>(rng() % 2000000) / 997.0 - 1000.0);
  }
}

inline char32_t random_char(std::mt19937_64& rng) {
  static const std::vector<char32_t> chars{U'a', U'Z', U'\t', U'\n', U'\r', U'\\', U'é', U'€', U'𝄞', U' ', U'0'};
  return chars[rng() % chars.size()];
}

/// Sparse IDs, a few attributes of every type, mixed plain/attributed nodes.
inline weft::Nodeset random_nodeset(std::mt19937_64& rng, std::uint32_t n) {
  std::vector<NodeId> ids;
  NodeId next = static_cast<NodeId>(rng() % 5);
  for (std::uint32_t i = 0; i < n; ++i) {
    ids.push_back(next);
    next += 1 + static_cast<NodeId>(rng() % 3);
  }
  auto ns = weft::Nodeset::with_ids(ids);
  if (n == 0) return ns;
  const int attrs = static_cast<int>(rng() % 5);
  for (int k = 0; k < attrs; ++k) {
    const std::string name = "attr" + std::to_string(k) + (k % 2 ? "é" : "");
    const auto type = static_cast<weft::AttributeType>(rng() % 4);
    const std::uint32_t assigned = static_cast<std::uint32_t>(rng() % (n + 1));
    for (std::uint32_t j = 0; j < assigned; ++j) {
      const NodeId node = ids[rng() % n];
      switch (type) {
        case weft::AttributeType::Int:
          ns.set_attribute(node, name, static_cast<std::int32_t>(rng()));
          break;
        case weft::AttributeType::Float: ns.set_attribute(node, name, random_float(rng)); break;
        case weft::AttributeType::Bool: ns.set_attribute(node, name, static_cast<bool>(rng() % 2)); break;
        case weft::AttributeType::Char: ns.set_attribute(node, name, weft::Char{random_char(rng)}); break;
      }
    }
    // Declared names may end up with no values at all.
    if (rng() % 4 == 0) {
      for (NodeId id : ids) ns.remove_attribute(id, name);
    }
  }
  return ns;
}

/// Layers of every flavor over the given nodeset.
inline weft::Network random_network(std::mt19937_64& rng, std::shared_ptr<weft::Nodeset> nodes) {
  weft::Network net(nodes);
  const auto ids = nodes->sorted_ids();
  const std::size_t n = ids.size();
  const int layers = static_cast<int>(rng() % 5);
  for (int l = 0; l < layers; ++l) {
    const std::string name = random_name(rng, "L" + std::to_string(l));
    if (rng() % 3 == 0) {
      net.add_layer(weft::LayerSpec::two_mode(name));
      const int hyperedges = static_cast<int>(rng() % 6);
      for (int h = 0; h < hyperedges; ++h) {
        std::vector<NodeId> members;
        const std::size_t k = n == 0 ? 0 : rng() % std::min<std::size_t>(n, 20);
        for (std::size_t i = 0; i < k; ++i) members.push_back(ids[rng() % n]);
        net.add_hyperedge(name, random_name(rng, "h" + std::to_string(h)), members);
      }
      continue;
    }
    const bool directed = rng() % 2;
    const bool valued = rng() % 2;
    const bool selfties = rng() % 2;
    const bool inbound = rng() % 2;
    net.add_layer(weft::LayerSpec::one_mode(name, directed, valued, selfties, inbound));
    if (n < 2) continue;
    const std::size_t edges = rng() % (3 * n);
    for (std::size_t i = 0; i < edges; ++i) {
      const NodeId a = ids[rng() % n];
      const NodeId b = ids[rng() % n];
      if (a == b && !selfties) continue;
      net.add_edge(name, a, b, random_float(rng));
    }
  }
  return net;
}

}  // namespace instances
