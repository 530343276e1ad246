#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "fixtures.hpp"
#include "locgame/cli.hpp"
#include "locgame/generators.hpp"
#include "locgame/io.hpp"
#include "locgame/solver.hpp"

using namespace locgame;
using namespace locgame::testing;

namespace {

int cli(const std::vector<std::string>& args, const std::string& input, std::string* out_text,
        std::string* err_text = nullptr) {
  std::istringstream in(input);
  std::ostringstream out, err;
  int rc = run_cli(args, in, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return rc;
}

const char* kTripledFanoColumns =
    "#cols\n"
    "000000000111111222222\n"
    "111333555333444333444\n"
    "222444666555666666555\n";

}  // namespace

TEST_CASE("design files round-trip bit-exactly") {
  for (const Design& d : {fano(), sts(13), triple_system_b(), affine_plane(3).design}) {
    std::ostringstream first;
    write_design(first, d);
    std::istringstream back(first.str());
    Design again = read_design(back);
    CHECK(again.v == d.v);
    CHECK(again.blocks == d.blocks);
    std::ostringstream second;
    write_design(second, again);
    CHECK(first.str() == second.str());
  }
}

TEST_CASE("column format reads the printed digit-row layout") {
  std::istringstream in(kTripledFanoColumns);
  Design d = read_design(in);
  DesignParams p = validate_bibd(d);
  CHECK(p.str() == "BIBD(7,21,9,3,3)");
}

TEST_CASE("column format with whitespace-separated labels") {
  std::istringstream in(
      "#cols\n"
      "a a b\n"
      "b c c\n"
      "c d d\n");
  Design d = read_design(in);
  CHECK(d.v == 4);
  CHECK(d.b() == 3);
  // labels by first appearance: a=0, b=1, c=2, d=3
  CHECK(d.blocks[0] == VertexSet{0, 1, 2});
  CHECK(d.blocks[2] == VertexSet{1, 2, 3});
}

TEST_CASE("graph files round-trip") {
  Graph g = Graph::incidence(fano());
  std::ostringstream first;
  write_graph(first, g);
  std::istringstream back(first.str());
  Graph again = read_graph(back);
  CHECK(again.n() == g.n());
  for (int v = 0; v < g.n(); ++v) CHECK(again.neighbors(v) == g.neighbors(v));
}

TEST_CASE("transcripts round-trip and validate") {
  Graph g = Graph::incidence(fano());
  GameTranscript t;
  t.initial = g.all_vertices();
  auto cells = partition_with_vectors(g, t.initial, {0, 7});
  for (const auto& c : cells)
    if (c.members.size() >= 2) {
      t.rounds.push_back(Round{{0, 7}, c.vec, c.members});
      break;
    }
  CHECK(transcript_consistent(g, t));

  std::ostringstream os;
  write_transcript(os, t);
  std::istringstream is(os.str());
  GameTranscript back = read_transcript(is);
  CHECK(back.initial == t.initial);
  REQUIRE(back.rounds.size() == t.rounds.size());
  CHECK(back.rounds[0].placement == t.rounds[0].placement);
  CHECK(back.rounds[0].observed == t.rounds[0].observed);
  CHECK(back.rounds[0].cell == t.rounds[0].cell);
}

TEST_CASE("certificates round-trip") {
  Graph g = Graph::incidence(fano());
  for (int k : {2, 3}) {
    SolveResult r = can_win(g, k, {}, 1, "heawood");
    Certificate cert = extract_certificate(r);
    std::ostringstream os;
    write_certificate(os, cert);
    std::istringstream is(os.str());
    Certificate back = read_certificate(is);
    CHECK(back.k == cert.k);
    CHECK(back.graph_id == cert.graph_id);
    CHECK(back.cop_moves == cert.cop_moves);
    CHECK(back.robber_states == cert.robber_states);
    std::ostringstream os2;
    write_certificate(os2, back);
    CHECK(os.str() == os2.str());
  }
}

TEST_CASE("cli: gen families re-validate with identical parameters") {
  struct Case {
    std::vector<std::string> args;
    std::string params;
  };
  std::vector<Case> cases = {
      {{"gen", "ag", "3"}, "BIBD(9,12,4,3,1)"},
      {{"gen", "sqs", "3"}, "BIBD(8,14,7,4,3)"},
      {{"gen", "td-from-pp", "3"}, ""},
      {{"gen", "td-from-ag", "3"}, ""},
      {{"gen", "td", "4", "5"}, ""},
  };
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    int n = q * q + q + 1;
    cases.push_back({{"gen", "pp", std::to_string(q)},
                     "BIBD(" + std::to_string(n) + "," + std::to_string(n) + "," +
                         std::to_string(q + 1) + "," + std::to_string(q + 1) + ",1)"});
    cases.push_back({{"gen", "ag", std::to_string(q)},
                     "BIBD(" + std::to_string(q * q) + "," + std::to_string(q * q + q) + "," +
                         std::to_string(q + 1) + "," + std::to_string(q) + ",1)"});
  }
  for (int v : {7, 9, 13, 15, 19, 21, 25, 27})
    cases.push_back({{"gen", "sts", std::to_string(v)},
                     "BIBD(" + std::to_string(v) + "," + std::to_string(v * (v - 1) / 6) + "," +
                         std::to_string((v - 1) / 2) + ",3,1)"});

  for (const Case& c : cases) {
    std::string design_text;
    REQUIRE(cli(c.args, "", &design_text) == 0);
    if (!c.params.empty()) {
      std::string report;
      REQUIRE(cli({"validate"}, design_text, &report) == 0);
      CHECK(report.find(c.params) != std::string::npos);
    }
    // round-trip: generated text parses back to the identical file
    std::istringstream is(design_text);
    Design d = read_design(is);
    std::ostringstream os;
    write_design(os, d);
    CHECK(os.str() == design_text);
  }
}

TEST_CASE("cli: validate flags violations on stderr with exit 1") {
  Design d = fano();
  d.blocks.pop_back();
  std::ostringstream os;
  write_design(os, d);
  std::string out, err;
  CHECK(cli({"validate"}, os.str(), &out, &err) == 1);
  CHECK(err.find("PairCountViolation") != std::string::npos);
}

TEST_CASE("cli: validate accepts a column-layout file") {
  std::string out;
  REQUIRE(cli({"validate"}, kTripledFanoColumns, &out) == 0);
  CHECK(out.find("BIBD(7,21,9,3,3)") != std::string::npos);
}

TEST_CASE("cli: bounds table for sts(13) carries the half bound") {
  std::string design_text;
  REQUIRE(cli({"gen", "sts", "13"}, "", &design_text) == 0);
  std::string report;
  REQUIRE(cli({"bounds", "--id", "sts(13)"}, design_text, &report) == 0);
  CHECK(report.find("UPPER 7 Thm4.2") != std::string::npos);
  CHECK(report.find("UPPER 12 Cor2.5") != std::string::npos);
  CHECK(report.find("LOWER 2 Thm2.6") != std::string::npos);

  std::string json;
  REQUIRE(cli({"--format", "json", "bounds", "--id", "sts(13)"}, design_text, &json) == 0);
  CHECK(json.find("\"theorem\": \"Thm4.2\"") != std::string::npos);
  CHECK(json.find("\"verdict\": \"PROVEN\"") != std::string::npos);
}

TEST_CASE("cli: f-value output") {
  std::ostringstream os;
  write_design(os, triple_system_b());
  std::string out;
  REQUIRE(cli({"f-value"}, os.str(), &out) == 0);
  CHECK(out.find("f(G) 1") != std::string::npos);
}

TEST_CASE("cli: verify symmetric on pg(2,2) with 3 cops") {
  std::string design_text;
  REQUIRE(cli({"gen", "pp", "2"}, "", &design_text) == 0);
  std::string out;
  int rc = cli({"verify", "--theorem", "symmetric", "--cops", "3"}, design_text, &out);
  CHECK(rc == 0);
  CHECK(out.find("PROVEN") != std::string::npos);

  // wrong expected cop count fails
  CHECK(cli({"verify", "--theorem", "symmetric", "--cops", "2"}, design_text, &out) == 1);
}

TEST_CASE("cli: solve and replay certificates of both kinds") {
  std::string design_text;
  REQUIRE(cli({"gen", "pp", "2"}, "", &design_text) == 0);
  std::string cert_path = "/tmp/locgame_test_cert.txt";
  std::string out;
  REQUIRE(cli({"solve", "--k", "2", "--certificate", cert_path}, design_text, &out) == 0);
  CHECK(out.find("ROBBER_WINS") != std::string::npos);

  std::string replay_out;
  CHECK(cli({"replay", "--certificate", cert_path}, design_text, &replay_out) == 0);
  CHECK(replay_out.find("PASS") != std::string::npos);

  REQUIRE(cli({"solve", "--k", "3", "--certificate", cert_path}, design_text, &out) == 0);
  CHECK(out.find("COPS_WIN") != std::string::npos);
  CHECK(cli({"replay", "--certificate", cert_path}, design_text, &replay_out) == 0);
  CHECK(replay_out.find("PASS") != std::string::npos);
}

TEST_CASE("cli: export-graph emits the adjacency list") {
  std::string design_text;
  REQUIRE(cli({"gen", "pp", "2"}, "", &design_text) == 0);
  std::string out;
  REQUIRE(cli({"export-graph"}, design_text, &out) == 0);
  CHECK(out.find("graph 14") != std::string::npos);
  // point 0 tagged P, block 7 tagged B
  CHECK(out.find("0 P") != std::string::npos);
  CHECK(out.find("7 B") != std::string::npos);

  // solve accepts the exported graph directly
  std::string solve_out;
  REQUIRE(cli({"solve", "--k", "3"}, out, &solve_out) == 0);
  CHECK(solve_out.find("COPS_WIN") != std::string::npos);
}

TEST_CASE("cli: usage errors exit 2") {
  std::string out, err;
  CHECK(cli({"bogus-subcommand"}, "", &out, &err) == 2);
  CHECK(cli({}, "", &out, &err) == 2);
}

TEST_CASE("cli: solver budget exhaustion exits 3 with a note") {
  std::string design_text;
  REQUIRE(cli({"gen", "pp", "2"}, "", &design_text) == 0);
  std::string out;
  CHECK(cli({"--budget-states", "10", "solve", "--k", "2"}, design_text, &out) == 3);
  CHECK(out.find("UNKNOWN") != std::string::npos);
}

TEST_CASE("cli: bounds output is byte-identical across thread counts") {
  std::string design_text;
  REQUIRE(cli({"gen", "sts", "13"}, "", &design_text) == 0);
  std::string t1, t4;
  REQUIRE(cli({"--threads", "1", "bounds", "--id", "x"}, design_text, &t1) == 0);
  REQUIRE(cli({"--threads", "4", "bounds", "--id", "x"}, design_text, &t4) == 0);
  CHECK(t1 == t4);
}
