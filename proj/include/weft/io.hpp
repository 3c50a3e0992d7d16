#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string_view>

#include "weft/network.hpp"
#include "weft/nodeset.hpp"

namespace weft {

enum class FileFormat { Tsv, TsvGz, Bin, BinGz };

/// From the extension: .tsv, .tsv.gz, .bin, .bin.gz (case-sensitive).
std::optional<FileFormat> format_from_path(const std::filesystem::path& path);

enum class ObjectKind { Nodeset, Network };

/// Binary files carry the kind in their header; text files are nodesets when
/// the first line starts with the `nodeid` column.
ObjectKind detect_object_kind(const std::filesystem::path& path);

// Output is canonical: node IDs ascending, layers in insertion order,
// hyperedges by name. Saving the same object twice gives identical bytes.

void save_nodeset(const Nodeset& ns, const std::filesystem::path& path);
Nodeset load_nodeset(const std::filesystem::path& path);

void save_network(const Network& net, const std::filesystem::path& path);

struct NetworkLoadOptions {
  /// Add unknown endpoint IDs to the nodeset as plain nodes instead of
  /// failing with UnknownNodeInEdge.
  bool create_missing_nodes = false;
};

Network load_network(const std::filesystem::path& path, std::shared_ptr<Nodeset> nodes,
                     NetworkLoadOptions options = {});

/// Edgelist (`src\tdst[\tvalue]`) or membership (`hyperedge\tnode`) TSV,
/// gzip-compressed when the path ends in .gz.
void export_layer(const Network& net, std::string_view layer, const std::filesystem::path& path);
/// Into an existing empty layer (NonEmptyLayer otherwise).
void import_layer(Network& net, std::string_view layer, const std::filesystem::path& path);

}  // namespace weft
