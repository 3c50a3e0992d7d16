#include "weft/processing.hpp"

#include <algorithm>
#include <map>

#include "weft/error.hpp"

namespace weft {

namespace {

// Copies the edges of `src` accepted by `keep` into a fresh layer with `spec`
// and swaps it into the network.
template <typename Keep>
void rebuild(Network& net, const LayerOneMode& src, LayerSpec spec, Keep keep) {
  auto fresh = std::make_unique<LayerOneMode>(std::move(spec));
  src.for_each_edge([&](NodeId a, NodeId b, float v) {
    if (keep(v)) fresh->add_edge(a, b, v);
  });
  const std::string name = src.name();
  net.replace_layer(name, std::move(fresh));
}

}  // namespace

std::optional<SymmetrizeMethod> parse_symmetrize_method(std::string_view s) noexcept {
  if (s == "max") return SymmetrizeMethod::Max;
  if (s == "min") return SymmetrizeMethod::Min;
  if (s == "sum") return SymmetrizeMethod::Sum;
  if (s == "or") return SymmetrizeMethod::Or;
  return std::nullopt;
}

void symmetrize(Network& net, std::string_view name, SymmetrizeMethod method) {
  const auto& layer = net.one_mode(name);
  if (!layer.directed()) return;
  if (!layer.valued() && method != SymmetrizeMethod::Or) {
    throw Error(ErrorCode::UnsupportedMethod, "binary layers can only be symmetrized with 'or'");
  }

  struct PairValues {
    float forward = 0.0f;   // lower -> higher
    float backward = 0.0f;  // higher -> lower
  };
  std::map<std::pair<NodeId, NodeId>, PairValues> pairs;
  layer.for_each_edge([&](NodeId a, NodeId b, float v) {
    auto& entry = pairs[{std::min(a, b), std::max(a, b)}];
    if (a <= b) {
      entry.forward = v;
    } else {
      entry.backward = v;
    }
  });

  LayerSpec spec = layer.spec();
  spec.directed = false;
  spec.store_inbound = true;
  spec.valued = layer.valued() && method != SymmetrizeMethod::Or;
  auto fresh = std::make_unique<LayerOneMode>(spec);
  for (const auto& [key, pv] : pairs) {
    const auto [a, b] = key;
    float value = 0.0f;
    if (a == b) {
      value = pv.forward;
    } else {
      switch (method) {
        case SymmetrizeMethod::Max: value = std::max(pv.forward, pv.backward); break;
        case SymmetrizeMethod::Min: value = std::min(pv.forward, pv.backward); break;
        case SymmetrizeMethod::Sum: value = pv.forward + pv.backward; break;
        case SymmetrizeMethod::Or: value = 1.0f; break;
      }
    }
    if (value != 0.0f) fresh->add_edge(a, b, value);
  }
  net.replace_layer(name, std::move(fresh));
}

void dichotomize(Network& net, std::string_view name, float threshold, bool keep_at_or_above) {
  const auto& layer = net.one_mode(name);
  LayerSpec spec = layer.spec();
  spec.valued = false;
  rebuild(net, layer, std::move(spec),
          [&](float v) { return keep_at_or_above ? v >= threshold : v < threshold; });
}

void filter_edges(Network& net, std::string_view name, std::optional<float> min_value,
                  std::optional<float> max_value) {
  const auto& layer = net.one_mode(name);
  rebuild(net, layer, layer.spec(), [&](float v) {
    return (!min_value || v >= *min_value) && (!max_value || v <= *max_value);
  });
}

}  // namespace weft
