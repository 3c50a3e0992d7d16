#include <doctest.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "instances.hpp"
#include "weft/cli/script.hpp"
#include "weft/cli/session.hpp"
#include "weft/error.hpp"

using namespace weft;
using namespace weft::cli;
using nlohmann::json;

namespace {

const std::filesystem::path kFixtures = WEFT_FIXTURES;

struct RunResult {
  std::string out;
  int status = -1;
};

RunResult run(const std::string& command) {
  RunResult r;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::vector<json> json_lines(const std::string& s) {
  std::vector<json> out;
  for (const auto& line : lines_of(s)) out.push_back(json::parse(line));
  return out;
}

bool is_envelope(const json& j) {
  return j.is_object() && j.size() == 4 && j.contains("status") && j.contains("command") &&
         j.contains("result") && j.contains("error");
}

// Runs statements in an in-process Json session; one parsed reply per
// non-blank statement.
std::vector<json> session_json(const std::vector<std::string>& statements, std::uint64_t seed = 1) {
  std::ostringstream out;
  Session s(out, {.mode = OutputMode::Json, .seed_base = seed});
  for (const auto& st : statements) s.execute_line(st);
  return json_lines(out.str());
}

std::string cli_binary() { return std::string("'") + WEFT_CLI_PATH + "'"; }

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parser: assignment with a named argument") {
  auto st = parse_statement("nodes = createnodeset(createnodes = 20000000)");
  REQUIRE(st);
  CHECK(st->target == "nodes");
  CHECK(st->command == "createnodeset");
  REQUIRE(st->args.size() == 1);
  CHECK(st->args[0].name == "createnodes");
  CHECK(st->args[0].value.kind == Value::Kind::Number);
  CHECK(st->args[0].value.text == "20000000");
}

TEST_CASE("parser: blank and comment lines") {
  CHECK_FALSE(parse_statement(""));
  CHECK_FALSE(parse_statement("   \t"));
  CHECK_FALSE(parse_statement("# Create nodeset with 20 million nodes"));
}

TEST_CASE("parser: list-valued arguments and value kinds") {
  auto st = parse_statement("getnodealters(net, 1000000, layernames = Workplaces;Communication)");
  REQUIRE(st);
  CHECK_FALSE(st->target);
  REQUIRE(st->args.size() == 3);
  CHECK(st->args[0].value.kind == Value::Kind::Bare);
  CHECK(st->args[0].value.text == "net");
  const auto& list = st->args[2].value;
  CHECK(list.kind == Value::Kind::List);
  REQUIRE(list.items.size() == 2);
  CHECK(list.items[0].text == "Workplaces");
  CHECK(list.items[1].text == "Communication");

  auto gen = parse_statement("generate(net, \"Workplaces\", type = 2mode, h = 1e4, a = 20, flag = true) # trailing");
  REQUIRE(gen);
  CHECK(gen->args[1].value.kind == Value::Kind::String);
  CHECK(gen->args[2].value.kind == Value::Kind::Bare);
  CHECK(gen->args[2].value.text == "2mode");
  CHECK(gen->args[3].value.kind == Value::Kind::Number);
  CHECK(gen->args[5].value.kind == Value::Kind::Bool);
  CHECK(gen->args[5].value.boolean);

  auto str = parse_statement(R"(savefile(net, file = "a \"b\" #c.tsv"))");
  REQUIRE(str);
  CHECK(str->args[1].value.text == "a \"b\" #c.tsv");
  CHECK(parse_statement("quit()")->args.empty());
}

TEST_CASE("parser: syntax errors carry a column") {
  for (const char* bad : {"checkedge(net", "= foo()", "foo(a,,b)", "foo(a) extra", "foo(\"open)", "1x = foo()"}) {
    try {
      parse_statement(bad);
      FAIL("expected a syntax error for " << bad);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::SyntaxError);
      CHECK(std::string(e.what()).find("column") != std::string::npos);
    }
  }
}

TEST_CASE("benchmark scripts parse without error") {
  for (const char* name : {"benchmark_build.txt", "benchmark_queries.txt", "benchmark_build_scaled.txt", "benchmark_queries_scaled.txt"}) {
    std::ifstream in(kFixtures / name);
    REQUIRE(in);
    int statements = 0;
    for (std::string line; std::getline(in, line);) {
      CHECK_NOTHROW(statements += parse_statement(line).has_value());
    }
    CHECK(statements > 5);
  }
}

TEST_CASE("json envelope for successes and errors") {
  const auto replies = session_json({
      "nodes = createnodeset(createnodes = 10)",
      "net = createnetwork(nodeset = nodes)",
      "addlayer(net, \"W\", mode = 2)",
      "addhyperedge(net, W, hyperedge = \"A\", nodes = 1;2;3)",
      "addhyperedge(net, W, hyperedge = \"B\", nodes = 2;3;4)",
      "checkedge(net, W, 1, 4)",
      "getedge(net, W, 2, 3)",
      "getnodealters(net, 3)",
      "frobnicate()",
      "checkedge(net, W, 1, 99)",
      "checkedge(net, W, 1)",
      "getedge(net, W, 1, 2)",
  });
  REQUIRE(replies.size() == 12);
  for (const auto& r : replies) CHECK(is_envelope(r));
  CHECK(replies[5]["status"] == "ok");
  CHECK(replies[5]["result"] == false);
  CHECK(replies[6]["result"] == 2.0);
  CHECK(replies[7]["result"] == json::array({1, 2, 4}));

  CHECK(replies[8]["status"] == "error");
  CHECK(replies[8]["command"] == "frobnicate");
  CHECK(replies[8]["result"].is_null());
  CHECK(replies[8]["error"].get<std::string>().starts_with("UnknownCommand"));
  CHECK(replies[9]["error"].get<std::string>().starts_with("UnknownNode"));
  CHECK(replies[10]["error"].get<std::string>().starts_with("ArityError"));
  // The session keeps going after errors.
  CHECK(replies[11]["status"] == "ok");
  CHECK(replies[11]["result"] == 1.0);
}

TEST_CASE("syntax errors become json errors too") {
  const auto replies = session_json({"checkedge(net"});
  REQUIRE(replies.size() == 1);
  CHECK(is_envelope(replies[0]));
  CHECK(replies[0]["status"] == "error");
  CHECK(replies[0]["error"].get<std::string>().starts_with("SyntaxError"));
}

TEST_CASE("analysis and processing commands") {
  const auto r = session_json({
      "ns = createnodeset(createnodes = 6)",
      "g = createnetwork(nodeset = ns)",
      "addlayer(g, d, mode = 1, directed = true, valued = true)",
      "addedge(g, d, 0, 1, value = 2.5)",
      "addedge(g, d, 1, 0, value = 4)",
      "addedge(g, d, 1, 2, value = 1)",
      "symmetrize(g, d, method = max)",
      "getedge(g, d, 1, 0)",
      "filteredges(g, d, min = 2)",
      "degree(g, d, 1)",
      "density(g, d)",
      "components(g)",
      "shortestpath(g, 0, 5)",
      "setattribute(ns, 3, age, 42)",
      "getattribute(ns, 3, age)",
      "getattribute(ns, 4, age)",
      "summarizeattribute(ns, age)",
      "projectedsize(g, d)",
  });
  for (const auto& j : r) CHECK(is_envelope(j));
  CHECK(r[7]["result"] == 4.0);
  CHECK(r[9]["result"] == 1);
  CHECK(r[10]["result"].get<double>() == doctest::Approx(1.0 / 15));
  CHECK(r[11]["result"]["count"] == 5);
  CHECK(r[12]["result"]["length"].is_null());
  CHECK(r[14]["result"] == 42);
  CHECK(r[15]["result"].is_null());
  CHECK(r[16]["result"]["count"] == 1);
  CHECK(r[17]["status"] == "error");
}

TEST_CASE("text mode script stops at the failing line and names it") {
  instances::TempDir dir("cli");
  std::ofstream(dir / "bad.txt") << "nodes = createnodeset(createnodes = 5)\n"
                                    "# comment\n"
                                    "net = createnetwork(nodeset = nodes\n"
                                    "info()\n";
  std::ostringstream out;
  Session s(out);
  CHECK_FALSE(s.run_script(dir / "bad.txt"));
  CHECK(out.str().find("line 3") != std::string::npos);
  CHECK(out.str().find("weft") == std::string::npos);  // info() never ran

  const auto r = run(cli_binary() + " --script '" + (dir / "bad.txt").string() + "'");
  CHECK(r.status == 1);
  CHECK(r.out.find("line 3") != std::string::npos);
}

TEST_CASE("json mode script reports every line") {
  instances::TempDir dir("cli");
  std::ofstream(dir / "bad.txt") << "nodes = createnodeset(createnodes = 5)\n"
                                    "\n"
                                    "net = createnetwork(nodeset = nodes\n"
                                    "info()\n";
  const auto r = run(cli_binary() + " --json --script '" + (dir / "bad.txt").string() + "'");
  CHECK(r.status == 0);
  const auto replies = json_lines(r.out);
  REQUIRE(replies.size() == 3);
  CHECK(replies[1]["status"] == "error");
  CHECK(replies[1]["error"].get<std::string>().find("line 3") != std::string::npos);
  CHECK(replies[2]["status"] == "ok");
}

TEST_CASE("empty script is a no-op") {
  instances::TempDir dir("cli");
  std::ofstream(dir / "empty.txt") << "";
  std::ostringstream out;
  Session s(out);
  CHECK(s.run_script(dir / "empty.txt"));
  CHECK(out.str().empty());
  const auto r = run(cli_binary() + " --json --script '" + (dir / "empty.txt").string() + "'");
  CHECK(r.status == 0);
  CHECK(r.out.empty());
}

TEST_CASE("stdin json protocol: one reply per request, in order") {
  instances::TempDir dir("cli");
  {
    std::ofstream in(dir / "in.txt");
    in << "ns = createnodeset(createnodes = 50)\n";
    in << "g = createnetwork(nodeset = ns)\n";
    in << "addlayer(g, w, mode = 2)\n";
    in << "generate(g, w, type = 2mode, h = 5, a = 2, seed = 3)\n";
    for (int i = 0; i < 1000; ++i) in << "degree(g, w, " << (i % 50) << ", projected = false)\n";
    in << "quit()\n";
    in << "info()\n";
  }
  const auto r = run(cli_binary() + " --json < '" + (dir / "in.txt").string() + "'");
  CHECK(r.status == 0);
  const auto replies = json_lines(r.out);
  REQUIRE(replies.size() == 1005);
  for (const auto& j : replies) REQUIRE(is_envelope(j));
  for (int i = 0; i < 1000; ++i) REQUIRE(replies[4 + i]["command"] == "degree");
  CHECK(replies[1004]["command"] == "quit");
}

TEST_CASE("seeded sessions generate identical networks in both modes") {
  const std::vector<std::string> script{
      "ns = createnodeset(createnodes = 500)",
      "g = createnetwork(nodeset = ns)",
      "addlayer(g, r, mode = 1)",
      "generate(g, r, type = er, p = 0.01)",
      "addlayer(g, w, mode = 2)",
      "generate(g, w, type = 2mode, h = 10, a = 2)",
  };
  std::ostringstream a_out, b_out;
  Session a(a_out, {.mode = OutputMode::Text, .seed_base = 42});
  Session b(b_out, {.mode = OutputMode::Json, .seed_base = 42});
  for (const auto& st : script) {
    a.execute_line(st);
    b.execute_line(st);
  }
  REQUIRE(a.network("g"));
  REQUIRE(b.network("g"));
  CHECK(*a.network("g") == *b.network("g"));
  const auto replies = json_lines(b_out.str());
  CHECK(replies[3]["result"]["seed"].is_number_unsigned());
}

TEST_CASE("save and load through the cli") {
  instances::TempDir dir("cli");
  const std::string f = (dir / "net.tsv").string();
  const std::string n = (dir / "nodes.bin").string();
  const auto r = session_json({
      "ns = createnodeset(createnodes = 20)",
      "g = createnetwork(nodeset = ns)",
      "addlayer(g, s, mode = 1)",
      "generate(g, s, type = ws, k = 4, beta = 0.2, seed = 8)",
      "savefile(g, file = \"" + f + "\")",
      "savefile(ns, file = \"" + n + "\")",
      "ns2 = loadfile(file = \"" + n + "\")",
      "g2 = loadfile(file = \"" + f + "\", nodeset = ns2)",
      "getnodealters(g2, 0, layernames = s)",
      "getnodealters(g, 0, layernames = s)",
      "g3 = loadfile(file = \"" + f + "\", createnodes = true)",
      "listobjects()",
  });
  for (const auto& j : r) CHECK(j["status"] == "ok");
  CHECK(r[8]["result"] == r[9]["result"]);
}

}  // TEST_SUITE
