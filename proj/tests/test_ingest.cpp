#include <doctest.h>

#include <zlib.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "mc/ingest.hpp"
#include "support.hpp"

using mc::vertex_t;

namespace {

std::set<std::pair<std::string, std::string>> labeled_edges(const mc::PreparedGraph& p) {
  std::set<std::pair<std::string, std::string>> out;
  for (vertex_t v = 0; v < p.graph.num_vertices(); ++v) {
    for (vertex_t w : p.graph.neighbors(v)) {
      auto a = p.labels[v], b = p.labels[w];
      if (b < a) std::swap(a, b);
      out.emplace(a, b);
    }
  }
  return out;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("mc_ingest_" + name);
}

}  // namespace

TEST_CASE("edge list examples") {
  SUBCASE("plain ids") {
    const auto raw = mc::parse_edge_list("0 1\n1 2\n");
    CHECK(raw.num_vertices == 3);
    CHECK(raw.edges.size() == 2);
    CHECK(raw.labels == std::vector<std::string>{"0", "1", "2"});
  }
  SUBCASE("comments and weights") {
    const auto raw = mc::parse_edge_list("# c\na b 3.5\n% other comment\n\n");
    CHECK(raw.edges.size() == 1);
    CHECK(raw.labels == std::vector<std::string>{"a", "b"});
  }
  SUBCASE("labels are assigned by first appearance") {
    const auto raw = mc::parse_edge_list("z y\ny x\r\nx\tz\n");
    CHECK(raw.labels == std::vector<std::string>{"z", "y", "x"});
    CHECK(raw.edges[2] == std::pair<vertex_t, vertex_t>{2, 0});
  }
  SUBCASE("malformed lines name the line") {
    try {
      mc::parse_edge_list("0 1\n\n5\n");
      FAIL("no error");
    } catch (const mc::input_error& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).rfind("line 3:", 0) == 0);
    }
    CHECK_THROWS_AS(mc::parse_edge_list("0 1 2 3\n"), mc::input_error);
    CHECK_THROWS_AS(mc::parse_edge_list("0 1 heavy\n"), mc::input_error);
  }
}

TEST_CASE("edge list round trip and determinism") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    auto edges = support::gnp(n, 0.3, rng);
    edges.emplace_back(0, 1);  // keep the graph non-empty
    std::ostringstream text;
    for (const auto& [u, v] : edges) text << "v" << u << " v" << v << '\n';
    const auto first = mc::preprocess(mc::parse_edge_list(text.str()));
    const auto again = mc::preprocess(mc::parse_edge_list(text.str()));
    CHECK(again.labels == first.labels);
    CHECK(labeled_edges(again) == labeled_edges(first));

    const auto written = mc::write_edge_list(first.graph, first.labels);
    const auto reread = mc::preprocess(mc::parse_edge_list(written));
    CHECK(labeled_edges(reread) == labeled_edges(first));
    CHECK(reread.graph.num_vertices() == first.graph.num_vertices());
  }
}

TEST_CASE("DIMACS") {
  SUBCASE("triangle") {
    const auto raw = mc::parse_dimacs("c tiny\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
    CHECK(raw.num_vertices == 3);
    CHECK(raw.warnings.empty());
    const auto p = mc::preprocess(raw);
    CHECK(p.graph.num_edges() == 3);
    CHECK(p.labels == std::vector<std::string>{"1", "2", "3"});
  }
  SUBCASE("duplicate edges collapse, with a count warning") {
    const auto raw = mc::parse_dimacs("p edge 2 1\ne 1 2\ne 2 1\ne 1 2\n");
    CHECK(raw.warnings.size() == 1);
    CHECK(mc::preprocess(raw).graph.num_edges() == 1);
  }
  SUBCASE("a 200-vertex instance keeps all vertices") {
    std::ostringstream text;
    text << "p edge 200 199\n";
    for (int v = 2; v <= 200; ++v) text << "e 1 " << v << '\n';
    const auto raw = mc::parse_dimacs(text.str());
    CHECK(raw.num_vertices == 200);
    CHECK(mc::preprocess(raw).graph.num_vertices() == 200);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(mc::parse_dimacs("e 1 2\n"), mc::input_error);
    CHECK_THROWS_AS(mc::parse_dimacs("c nothing\n"), mc::input_error);
    CHECK_THROWS_AS(mc::parse_dimacs("p edge 2 1\ne 1 3\n"), mc::input_error);
    CHECK_THROWS_AS(mc::parse_dimacs("p edge 2 1\ne 0 1\n"), mc::input_error);
    CHECK_THROWS_AS(mc::parse_dimacs("p edge 2 1\nq 1 2\n"), mc::input_error);
    try {
      mc::parse_dimacs("p edge 3 1\nc\ne 1 9\n");
      FAIL("no error");
    } catch (const mc::input_error& e) {
      CHECK(e.line() == 3);
    }
  }
}

TEST_CASE("temporal parsing") {
  SUBCASE("two contacts") {
    const auto net = mc::parse_temporal("a b 1\nb c 2\n");
    CHECK(net.num_vertices == 3);
    CHECK(net.edges.size() == 2);
    CHECK(net.edges[1].time == 2.0);
  }
  SUBCASE("self-loop contacts are dropped") {
    const auto net = mc::parse_temporal("a a 5\n");
    CHECK(net.edges.empty());
    CHECK(net.num_vertices == 0);
  }
  SUBCASE("real-valued and repeated timestamps are kept") {
    const auto net = mc::parse_temporal("a b 1.5\na b 1.5\nb a 2e3\n");
    CHECK(net.edges.size() == 3);
    CHECK(net.edges[2].time == 2000.0);
  }
  SUBCASE("a bad time names the line") {
    try {
      mc::parse_temporal("a b 1\nb c soon\n");
      FAIL("no error");
    } catch (const mc::input_error& e) {
      CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(mc::parse_temporal("a b\n"), mc::input_error);
  }
  SUBCASE("shuffled lines give the same network") {
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<std::string> lines;
      for (int i = 0; i < 25; ++i) {
        lines.push_back("n" + std::to_string(rng() % 8) + " n" + std::to_string(rng() % 8) + " " +
                        std::to_string(rng() % 5));
      }
      auto text = [&] {
        std::string s;
        for (const auto& l : lines) s += l + "\n";
        return s;
      };
      const auto a = mc::parse_temporal(text());
      std::shuffle(lines.begin(), lines.end(), rng);
      const auto b = mc::parse_temporal(text());
      auto canonical = [](const mc::TemporalNetwork& net) {
        std::multiset<std::tuple<double, std::string, std::string>> out;
        for (const auto& e : net.edges) out.emplace(e.time, net.labels[e.source], net.labels[e.target]);
        return out;
      };
      CHECK(canonical(a) == canonical(b));
      const auto ra = mc::reach(a), rb = mc::reach(b);
      for (vertex_t u = 0; u < a.num_vertices; ++u) {
        for (vertex_t w = 0; w < a.num_vertices; ++w) {
          const auto bu = std::find(b.labels.begin(), b.labels.end(), a.labels[u]) - b.labels.begin();
          const auto bw = std::find(b.labels.begin(), b.labels.end(), a.labels[w]) - b.labels.begin();
          CHECK(ra.reaches(u, w) == rb.reaches(static_cast<vertex_t>(bu), static_cast<vertex_t>(bw)));
        }
      }
    }
  }
}

TEST_CASE("preprocessing examples") {
  SUBCASE("directed cycle has no reciprocated pair") {
    const auto p = mc::preprocess(mc::parse_edge_list("a b\nb c\nc a\n", true));
    CHECK(p.graph.num_edges() == 0);
    CHECK(p.graph.num_vertices() == 3);
    CHECK_FALSE(p.warnings.empty());
  }
  SUBCASE("two mutual pairs make a path") {
    const auto p = mc::preprocess(mc::parse_edge_list("a b\nb a\nb c\nc b\n", true));
    CHECK(p.graph.num_vertices() == 3);
    CHECK(p.graph.num_edges() == 2);
    CHECK(labeled_edges(p) ==
          std::set<std::pair<std::string, std::string>>{{"a", "b"}, {"b", "c"}});
  }
  SUBCASE("undirected input keeps the largest component") {
    const auto p = mc::preprocess(mc::parse_edge_list("a b\nc d\nd e\ne c\nf f\n"));
    CHECK(p.labels == std::vector<std::string>{"c", "d", "e"});
    CHECK(p.graph.num_edges() == 3);
    CHECK(p.graph.original_id(0) == 2);
  }
  SUBCASE("ties go to the component with the smallest id") {
    const auto p = mc::preprocess(mc::parse_edge_list("x y\na b\n"));
    CHECK(p.labels == std::vector<std::string>{"x", "y"});
  }
  SUBCASE("empty input") {
    const auto p = mc::preprocess(mc::parse_edge_list("# nothing\n"));
    CHECK(p.graph.num_vertices() == 0);
    CHECK_FALSE(p.warnings.empty());
  }
}

TEST_CASE("directed preprocessing matches SCC and mutual pairs by definition") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    std::vector<std::pair<std::size_t, std::size_t>> arcs;
    std::ostringstream text;
    const std::size_t m = rng() % (3 * n + 1);
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t u = rng() % n, v = rng() % n;
      arcs.emplace_back(u, v);
      text << u << ' ' << v << '\n';
    }
    auto raw = mc::parse_edge_list(text.str(), true);
    // Re-index the oracle through the parser's labels.
    std::vector<std::pair<std::size_t, std::size_t>> dense;
    for (const auto& [u, v] : raw.edges) dense.emplace_back(u, v);
    const auto scc = mc::oracle::largest_scc(raw.num_vertices, dense);
    std::set<std::pair<std::string, std::string>> expect;
    const std::set<std::pair<std::size_t, std::size_t>> arc_set(dense.begin(), dense.end());
    for (std::size_t a : scc) {
      for (std::size_t b : scc) {
        if (a != b && arc_set.contains({a, b}) && arc_set.contains({b, a})) {
          auto la = raw.labels[a], lb = raw.labels[b];
          if (lb < la) std::swap(la, lb);
          expect.emplace(la, lb);
        }
      }
    }
    const auto p = mc::preprocess(raw);
    CHECK(p.graph.num_vertices() == scc.size());
    CHECK(labeled_edges(p) == expect);
    for (vertex_t v = 0; v < p.graph.num_vertices(); ++v) {
      CHECK(p.labels[v] == raw.labels[p.graph.original_id(v)]);
    }
  }
}

TEST_CASE("undirected preprocessing output is connected and loop-free") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    std::ostringstream text;
    for (const auto& [u, v] : support::gnp(n, 0.08, rng)) text << u << ' ' << v << '\n';
    text << "0 0\n";
    const auto p = mc::preprocess(mc::parse_edge_list(text.str()));
    const auto& g = p.graph;
    if (g.num_vertices() == 0) continue;
    std::vector<bool> seen(g.num_vertices(), false);
    std::vector<vertex_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const vertex_t v = stack.back();
      stack.pop_back();
      for (vertex_t w : g.neighbors(v)) {
        CHECK(w != v);
        CHECK(g.has_edge(w, v));
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool b) { return b; }));
  }
}

TEST_CASE("formats and files") {
  CHECK(mc::detect_format("g.clq") == mc::InputFormat::dimacs);
  CHECK(mc::detect_format("dir/g.dimacs.gz") == mc::InputFormat::dimacs);
  CHECK(mc::detect_format("g.col") == mc::InputFormat::dimacs);
  CHECK(mc::detect_format("t.temporal") == mc::InputFormat::temporal);
  CHECK(mc::detect_format("t.tedges.gz") == mc::InputFormat::temporal);
  CHECK(mc::detect_format("g.txt") == mc::InputFormat::edges);
  CHECK(mc::detect_format("g") == mc::InputFormat::edges);
  CHECK(mc::parse_format_name("dimacs") == mc::InputFormat::dimacs);
  CHECK(mc::parse_format_name("auto") == mc::InputFormat::automatic);
  CHECK_THROWS_AS(mc::parse_format_name("xml"), std::invalid_argument);

  const std::string body = "p edge 2 1\ne 1 2\n";
  const auto plain = temp_file("plain.clq");
  std::ofstream(plain) << body;
  CHECK(mc::read_input(plain) == body);

  const auto packed = temp_file("packed.clq.gz");
  gzFile f = gzopen(packed.c_str(), "wb");
  REQUIRE(f != nullptr);
  gzwrite(f, body.data(), static_cast<unsigned>(body.size()));
  gzclose(f);
  CHECK(mc::read_input(packed) == body);
  CHECK_THROWS_AS(mc::read_input(temp_file("missing.txt")), mc::input_error);
  std::filesystem::remove(plain);
  std::filesystem::remove(packed);
}

TEST_CASE("label ordering") {
  CHECK(mc::label_less("2", "10"));
  CHECK_FALSE(mc::label_less("10", "2"));
  CHECK(mc::label_less("-3", "1"));
  CHECK(mc::label_less("10", "a"));
  CHECK(mc::label_less("apple", "banana"));
  CHECK_FALSE(mc::label_less("7", "7"));
}
