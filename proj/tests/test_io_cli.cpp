#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#ifdef CLI_PATH
#include <sys/wait.h>
#endif

#include "hyperavg/families.hpp"
#include "hyperavg/io.hpp"
#include "oracles.hpp"

using namespace hyperavg;

namespace {

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::parse_error;
}

std::string temp_file(const std::string& tag, const std::string& content) {
  const std::string path = std::string("io_test_") + tag;
  std::ofstream f(path, std::ios::binary);
  f << content;
  return path;
}

}  // namespace

TEST_SUITE_BEGIN("io_cli");

TEST_CASE("hypergraph round trip preserves the sorted edge multiset") {
  Xoshiro256PlusPlus rng(808);
  for (int it = 0; it < 25; ++it) {
    const std::size_t n = 2 + rng.next_below(8);
    const auto h = oracle::random_hypergraph(rng, n, 1 + rng.next_below(6), n);
    std::istringstream in(write_hypergraph(h));
    const auto back = read_hypergraph(in);
    REQUIRE(back.vertex_count() == h.vertex_count());
    auto a = h.edges(), b = back.edges();
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    CHECK(a == b);
  }
}

TEST_CASE("graph round trip") {
  Xoshiro256PlusPlus rng(809);
  for (int it = 0; it < 15; ++it) {
    const auto g = oracle::random_connected_graph(rng, 8);
    std::istringstream in(write_graph(g));
    const auto back = read_graph(in);
    CHECK(back.vertex_count() == g.vertex_count());
    CHECK(back.edge_pairs() == g.edge_pairs());
  }
}

TEST_CASE("parsers tolerate comments, blank lines and CRLF") {
  std::istringstream in(
      "# worked example\r\n"
      "\r\n"
      "4 3\r\n"
      "  0 1\r\n"
      "1 0\n"
      "# a bigger edge\n"
      "3 2 1\n");
  const auto h = read_hypergraph(in, "inline");
  CHECK(h.vertex_count() == 4);
  REQUIRE(h.edge_count() == 3);
  CHECK(h.edges()[2] == std::vector<Vertex>{1, 2, 3});
}

TEST_CASE("parse errors name the offending line") {
  const auto expect_parse_error = [](const std::string& text, const std::string& needle) {
    std::istringstream in(text);
    try {
      read_hypergraph(in, "f.hg");
      CHECK(false);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse_error);
      CHECK(std::string(e.what()).find(needle) != std::string::npos);
    }
  };
  expect_parse_error("", "missing");
  expect_parse_error("3\n0 1\n", "header");
  expect_parse_error("3 2\n0 1\n", "expected 2 edges");
  expect_parse_error("3 1\n0 x1\n", "f.hg:2");
  expect_parse_error("3 1\n0 7\n", "out of range");
  expect_parse_error("3 1\n0 1\n2\n", "after the last edge");
  expect_parse_error("99999999999999999999 1\n0 1\n", "out of range");

  std::istringstream gr("3 1\n0 1 2\n");
  CHECK_THROWS_AS(read_graph(gr, "g.gr"), Error);
  CHECK_THROWS_AS(read_hypergraph_file("does_not_exist.hg"), Error);
}

TEST_CASE("builtin instances") {
  CHECK(load_instance("knr:6:3").to_hypergraph().edge_count() == 20);
  CHECK(load_instance("petersen").to_graph().edge_count() == 15);
  CHECK(load_instance("q3").to_graph().vertex_count() == 8);
  CHECK(load_instance("fano").to_hypergraph().edge_count() == 7);
  CHECK(load_instance("cycle:7").to_graph().edge_count() == 7);
  CHECK(load_instance("complete:5").to_graph().edge_count() == 10);
  CHECK(load_instance("path:6").to_graph().edge_count() == 5);

  // star:n is the n-edge star (n+1 vertices), matching the S_n convention
  const auto s = load_instance("star:9").to_graph();
  CHECK(s.vertex_count() == 10);
  CHECK(s.edge_count() == 9);
  CHECK(s.degree(0) == 9);

  const auto hp = load_instance("hprime").to_hypergraph();
  REQUIRE(hp.edge_count() == 3);
  CHECK(hp.edges()[0] == std::vector<Vertex>{0, 1});
  CHECK(hp.edges()[1] == std::vector<Vertex>{0, 1});
  CHECK(hp.edges()[2] == std::vector<Vertex>{1, 2, 3});

  CHECK(code_of([] { load_instance("dodecahedron"); }) == Errc::unknown_builtin);
  CHECK(code_of([] { load_instance("star"); }) == Errc::unknown_builtin);
  CHECK(code_of([] { load_instance("petersen:5"); }) == Errc::unknown_builtin);
  CHECK(code_of([] { load_instance("star:abc"); }) == Errc::unknown_builtin);
  CHECK(code_of([] { load_instance("name.txt"); }) == Errc::bad_parameters);
}

TEST_CASE("instance files load by extension") {
  const auto hg = temp_file("a.hg", "4 3\n0 1\n0 1\n1 2 3\n");
  const auto inst = load_instance(hg);
  CHECK_FALSE(inst.is_graph());
  const auto h = inst.to_hypergraph();
  CHECK(codegree(h, 0, 1) == 2);
  const auto gr = temp_file("b.gr", "3 2\n0 1\n1 2\n");
  CHECK(load_instance(gr).to_graph().edge_count() == 2);
  std::remove(hg.c_str());
  std::remove(gr.c_str());
}

TEST_CASE("instance conversions") {
  const auto g = load_instance("cycle:5").to_graph();
  const auto as_h = Instance(g, "c5").to_hypergraph();
  CHECK(uniform_edge_size(as_h) == 2);
  CHECK(Instance(as_h, "c5h").to_graph().edge_pairs() == g.edge_pairs());
  // repeated 2-uniform edges cannot become a simple graph
  const Hypergraph doubled(3, {{0, 1}, {0, 1}, {1, 2}});
  CHECK_THROWS_AS(Instance(doubled, "doubled").to_graph(), Error);
  CHECK_THROWS_AS(load_instance("hprime").to_graph(), Error);
}

#ifdef CLI_PATH

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli: version and usage errors") {
  CHECK(run_cli("--version").exit_code == 0);
  CHECK(run_cli("").exit_code == 2);
  CHECK(run_cli("verify").exit_code == 2);             // missing --claim
  CHECK(run_cli("spectrum").exit_code == 2);           // missing input
  CHECK(run_cli("spectrum --builtin nope").exit_code == 2);
  CHECK(run_cli("simulate --builtin path:3 --steps 2 --mode sideways").exit_code == 2);
}

TEST_CASE("cli: spectrum output") {
  const auto r = run_cli("spectrum --builtin hprime");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("1.43844718719\n") != std::string::npos);
  CHECK(r.out.find("5.56155281281\n") != std::string::npos);
  const auto m = run_cli("spectrum --builtin hprime --matrix");
  CHECK(m.out == "2,-2,0,0\n-2,4,-1,-1\n0,-1,2,-1\n0,-1,-1,2\n");
}

TEST_CASE("cli: simulate emits the documented CSV and is replayable") {
  const std::string args =
      "simulate --builtin knr:5:3 --steps 12 --trials 16 --seed 5";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("t,mean_sq_norm2,stderr_sq_norm2,mean_delta1,stderr_delta1\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : a.out) lines += c == '\n';
  CHECK(lines == 14);  // header + t = 0..12
  const auto nb = run_cli("simulate --builtin petersen --steps 5 --mode neighborhood --weights builtin:path-endpoints");
  CHECK(nb.exit_code == 0);
}

TEST_CASE("cli: verify exit codes distinguish pass from fail") {
  const auto pass = run_cli("verify --claim prop6 --steps 6 --trials 4000 --report csv");
  CHECK(pass.exit_code == 0);
  CHECK(pass.out.rfind("claim,", 0) == 0);
  // with a near-zero SE multiplier the MC equality tolerance collapses, so the
  // verdict fails and the exit code must say so
  const auto fail = run_cli(
      "verify --claim theorem3 --builtin knr:6:3 --mc --steps 20 --trials 50 --se-mult 0.0001");
  CHECK(fail.exit_code == 1);
  const auto err = run_cli("verify --claim theorem4 --builtin path:4");  // not regular
  CHECK(err.exit_code == 2);
}

TEST_CASE("cli: weights parsing") {
  CHECK(run_cli("simulate --builtin path:3 --steps 1 --weights 1,-0.5,-0.5").exit_code == 0);
  CHECK(run_cli("simulate --builtin path:3 --steps 1 --weights 1,2").exit_code == 2);
  CHECK(run_cli("simulate --builtin path:3 --steps 1 --weights builtin:star").exit_code == 0);
  CHECK(run_cli("simulate --builtin path:3 --steps 1 --weights no_such_file").exit_code == 2);
}

#endif  // CLI_PATH

TEST_SUITE_END();
