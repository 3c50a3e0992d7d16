#include <doctest.h>

#include <fstream>
#include <sstream>
#include <zlib.h>

#include "instances.hpp"
#include "weft/error.hpp"
#include "weft/generators.hpp"
#include "weft/io.hpp"

using namespace weft;
using instances::TempDir;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string gunzip(const std::filesystem::path& p) {
  gzFile f = gzopen(p.string().c_str(), "rb");
  std::string out;
  char buf[1 << 14];
  int n;
  while ((n = gzread(f, buf, sizeof buf)) > 0) out.append(buf, static_cast<std::size_t>(n));
  gzclose(f);
  return out;
}

void write_file(const std::filesystem::path& p, const std::string& content) {
  std::ofstream(p, std::ios::binary) << content;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidObject;
}

const std::vector<std::string> kExtensions{".tsv", ".tsv.gz", ".bin", ".bin.gz"};

}  // namespace

TEST_SUITE("io") {

TEST_CASE("format from path") {
  CHECK(format_from_path("a/b.tsv") == FileFormat::Tsv);
  CHECK(format_from_path("x.tsv.gz") == FileFormat::TsvGz);
  CHECK(format_from_path("x.bin") == FileFormat::Bin);
  CHECK(format_from_path("benchmark_net.bin.gz") == FileFormat::BinGz);
  CHECK_FALSE(format_from_path("x.txt"));
  CHECK_FALSE(format_from_path("x.gz"));
}

TEST_CASE("nodeset text format") {
  TempDir dir("io");
  auto empty = Nodeset::with_count(0);
  save_nodeset(empty, dir / "empty.tsv");
  CHECK(slurp(dir / "empty.tsv") == "nodeid\n");
  CHECK(load_nodeset(dir / "empty.tsv").size() == 0);

  auto ns = Nodeset::with_ids(std::vector<NodeId>{4, 5});
  ns.set_attribute(4, "age", std::int32_t{30});
  save_nodeset(ns, dir / "ns.tsv");
  CHECK(slurp(dir / "ns.tsv") == "nodeid\tage:int\n4\t30\n5\t\n");
  const auto back = load_nodeset(dir / "ns.tsv");
  CHECK(back.is_attributed(4));
  CHECK(back.is_plain(5));
  CHECK(back == ns);
}

TEST_CASE("nodeset text values: floats, bools, escaped chars") {
  TempDir dir("io");
  auto ns = Nodeset::with_count(4);
  ns.set_attribute(0, "f", 0.1f);
  ns.set_attribute(1, "f", -0.0f);
  ns.set_attribute(0, "b", true);
  ns.set_attribute(1, "b", false);
  ns.set_attribute(0, "c", Char{U'\t'});
  ns.set_attribute(1, "c", Char{U'€'});
  ns.set_attribute(2, "c", Char{U'\\'});
  save_nodeset(ns, dir / "v.tsv");
  CHECK(slurp(dir / "v.tsv") ==
        "nodeid\tf:float\tb:bool\tc:char\n"
        "0\t0.1\ttrue\t\\t\n"
        "1\t-0\tfalse\t€\n"
        "2\t\t\t\\\\\n"
        "3\t\t\t\n");
  const auto back = load_nodeset(dir / "v.tsv");
  CHECK(back == ns);
  CHECK(std::signbit(std::get<float>(*back.get_attribute(1, "f"))));
}

TEST_CASE("nodeset load errors") {
  TempDir dir("io");
  write_file(dir / "a.tsv", "id\tage:int\n");
  CHECK(code_of([&] { load_nodeset(dir / "a.tsv"); }) == ErrorCode::MalformedHeader);
  write_file(dir / "b.tsv", "nodeid\tage\n");
  CHECK(code_of([&] { load_nodeset(dir / "b.tsv"); }) == ErrorCode::MalformedHeader);
  write_file(dir / "c.tsv", "nodeid\tage:int\n1\t2\n2\tx\n");
  try {
    load_nodeset(dir / "c.tsv");
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TypeParseError);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  write_file(dir / "d.tsv", "nodeid\n1\n1\n");
  CHECK(code_of([&] { load_nodeset(dir / "d.tsv"); }) == ErrorCode::DuplicateNode);
  CHECK(code_of([&] { load_nodeset(dir / "missing.tsv"); }) == ErrorCode::IoError);
}

TEST_CASE("network text format") {
  TempDir dir("io");
  auto nodes = std::make_shared<Nodeset>(Nodeset::with_count(10));
  Network empty(nodes);
  save_network(empty, dir / "e.tsv");
  CHECK(slurp(dir / "e.tsv").empty());
  CHECK(load_network(dir / "e.tsv", nodes).layer_count() == 0);

  Network net(nodes);
  net.add_layer(LayerSpec::one_mode("L", false, true));
  net.add_edge("L", 7, 2, 1.5f);
  net.add_layer(LayerSpec::two_mode("W"));
  net.add_hyperedge("W", "b", std::vector<NodeId>{3, 1});
  net.add_hyperedge("W", "a", {});
  save_network(net, dir / "n.tsv");
  CHECK(slurp(dir / "n.tsv") ==
        "#layer\tL\tmode=1\tdirected=f\tvalued=t\tselfties=f\tinbound=t\n"
        "2\t7\t1.5\n"
        "#layer\tW\tmode=2\n"
        "#hyperedge\ta\n"
        "b\t1\n"
        "b\t3\n");
  CHECK(load_network(dir / "n.tsv", nodes) == net);
}

TEST_CASE("network load errors and node creation") {
  TempDir dir("io");
  auto nodes = std::make_shared<Nodeset>(Nodeset::with_count(3));
  write_file(dir / "u.tsv", "#layer\tL\tmode=1\n0\t9\n");
  CHECK(code_of([&] { load_network(dir / "u.tsv", nodes); }) == ErrorCode::UnknownNodeInEdge);
  auto grown = load_network(dir / "u.tsv", nodes, {.create_missing_nodes = true});
  CHECK(nodes->contains(9));
  CHECK(grown.layer("L").check_edge(0, 9));

  write_file(dir / "k.tsv", "#layer\tL\tmode=1\tcolour=t\n");
  CHECK(code_of([&] { load_network(dir / "k.tsv", nodes); }) == ErrorCode::UnknownLayerHeaderKey);
  write_file(dir / "s.tsv", "0\t1\n");
  try {
    load_network(dir / "s.tsv", nodes);
    FAIL("expected error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MalformedSection);
    CHECK(std::string(e.what()).find("line 1") != std::string::npos);
  }
  write_file(dir / "bad.bin", "WFT2garbage");
  CHECK(code_of([&] { load_network(dir / "bad.bin", nodes); }) == ErrorCode::FormatError);
}

TEST_CASE("binary header layout") {
  TempDir dir("io");
  auto ns = Nodeset::with_ids(std::vector<NodeId>{3, 1});
  save_nodeset(ns, dir / "n.bin");
  const std::string bytes = slurp(dir / "n.bin");
  REQUIRE(bytes.size() >= 7);
  CHECK(bytes.substr(0, 4) == "WFT1");
  CHECK(bytes[4] == 1);
  CHECK(bytes[5] == 0);
  CHECK(bytes[6] == 0);
  CHECK(detect_object_kind(dir / "n.bin") == ObjectKind::Nodeset);

  Network net(std::make_shared<Nodeset>(ns));
  save_network(net, dir / "w.bin.gz");
  CHECK(detect_object_kind(dir / "w.bin.gz") == ObjectKind::Network);
  save_nodeset(ns, dir / "n.tsv.gz");
  CHECK(detect_object_kind(dir / "n.tsv.gz") == ObjectKind::Nodeset);
}

TEST_CASE("compressed variants decompress to the uncompressed bytes") {
  TempDir dir("io");
  std::mt19937_64 rng(5);
  auto nodes = std::make_shared<Nodeset>(instances::random_nodeset(rng, 300));
  auto net = instances::random_network(rng, nodes);
  save_nodeset(*nodes, dir / "n.tsv");
  save_nodeset(*nodes, dir / "n.tsv.gz");
  save_network(net, dir / "w.bin");
  save_network(net, dir / "w.bin.gz");
  CHECK(gunzip(dir / "n.tsv.gz") == slurp(dir / "n.tsv"));
  CHECK(gunzip(dir / "w.bin.gz") == slurp(dir / "w.bin"));
  CHECK(slurp(dir / "w.bin.gz").substr(0, 2) == "\x1f\x8b");
}

TEST_CASE("random nodeset save/load/save is byte-identical") {
  TempDir dir("io");
  std::mt19937_64 rng(99);
  const auto ns = instances::random_nodeset(rng, 1000);
  for (const auto& ext : kExtensions) {
    save_nodeset(ns, dir / ("a" + ext));
    const auto back = load_nodeset(dir / ("a" + ext));
    CHECK(back == ns);
    save_nodeset(back, dir / ("b" + ext));
    CHECK(slurp(dir / ("a" + ext)) == slurp(dir / ("b" + ext)));
  }
}

TEST_CASE("benchmark-shaped network round-trips at desk scale") {
  TempDir dir("io");
  auto nodes = std::make_shared<Nodeset>(Nodeset::with_count(10000));
  Network net(nodes);
  net.add_layer(LayerSpec::one_mode("Random"));
  generate_er(net, "Random", 0.0002, 1);
  net.add_layer(LayerSpec::one_mode("Communication"));
  generate_ws(net, "Communication", 20, 0.1, 2);
  net.add_layer(LayerSpec::one_mode("Social"));
  generate_ba(net, "Social", 10, 3);
  net.add_layer(LayerSpec::two_mode("Workplaces"));
  generate_2mode(net, "Workplaces", 100, 20, 4);
  for (const auto& ext : kExtensions) {
    save_network(net, dir / ("net" + ext));
    CHECK(load_network(dir / ("net" + ext), nodes) == net);
  }
}

TEST_CASE("layer export and import") {
  TempDir dir("io");
  std::mt19937_64 rng(31);
  auto nodes = std::make_shared<Nodeset>(Nodeset::with_count(100));
  Network net(nodes);
  net.add_layer(LayerSpec::one_mode("v", true, true));
  net.add_layer(LayerSpec::one_mode("b"));
  net.add_layer(LayerSpec::two_mode("t"));
  for (int i = 0; i < 300; ++i) {
    const NodeId a = rng() % 100, b = rng() % 100;
    if (a == b) continue;
    net.add_edge("v", a, b, static_cast<float>(rng() % 100) / 7);
    net.add_edge("b", a, b);
  }
  generate_2mode(net, "t", 6, 1.5, 1);
  net.add_hyperedge("t", "empty", {});

  Network copy(nodes);
  copy.add_layer(LayerSpec::one_mode("v", true, true));
  copy.add_layer(LayerSpec::one_mode("b"));
  copy.add_layer(LayerSpec::two_mode("t"));
  for (const char* layer : {"v", "b", "t"}) {
    const auto file = dir / (std::string(layer) + ".tsv.gz");
    export_layer(net, layer, file);
    import_layer(copy, layer, file);
    CHECK(copy.layer(layer).empty() == net.layer(layer).empty());
  }
  CHECK(copy.one_mode("v") == net.one_mode("v"));
  CHECK(copy.one_mode("b") == net.one_mode("b"));
  CHECK(copy.two_mode("t") == net.two_mode("t"));
  for (const auto& he : net.two_mode("t").hyperedges()) {
    auto idx = copy.two_mode("t").find_hyperedge(he.name);
    REQUIRE(idx);
    CHECK(copy.two_mode("t").hyperedge(*idx).members == he.members);
  }
  CHECK(code_of([&] { import_layer(copy, "v", dir / "v.tsv.gz"); }) == ErrorCode::NonEmptyLayer);
  copy.add_layer(LayerSpec::two_mode("x"));
  CHECK(code_of([&] { import_layer(copy, "x", dir / "v.tsv.gz"); }) == ErrorCode::MalformedSection);
  CHECK(copy.layer("x").empty());
}

}  // TEST_SUITE
