#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "edskit/errors.hpp"
#include "edskit/fixtures.hpp"
#include "edskit/instance.hpp"
#include "edskit/io.hpp"
#include "edskit/iso.hpp"
#include "oracle.hpp"

using namespace edskit;
namespace fx = edskit::fixtures;

namespace {

int parse_error_line(const std::string& text) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
    std::vector<int> p(g.n());
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.push_back(make_edge(p[u], p[v]));
    return Graph::from_edges(g.n(), es);
}

}  // namespace

TEST_CASE("parse a path and a single vertex") {
    Graph p3 = parse_graph("p eds 3 2\ne 1 2\ne 2 3\n");
    CHECK(p3.n() == 3);
    CHECK(p3.m() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
    CHECK_FALSE(p3.adjacent(0, 2));
    Graph k1 = parse_graph("p eds 1 0\n");
    CHECK(k1.n() == 1);
    CHECK(k1.m() == 0);
}

TEST_CASE("comments, blank lines and CRLF are accepted") {
    Graph g = parse_graph("# hello\r\n\r\np eds 2 1\r\n# mid\r\ne 2 1\r\n");
    CHECK(g.m() == 1);
    CHECK(g.adjacent(0, 1));
}

TEST_CASE("parse errors carry the offending line") {
    CHECK(parse_error_line("e 1 2\n") == 1);                      // edge before header
    CHECK(parse_error_line("p eds x 1\n") == 1);                  // bad header
    CHECK(parse_error_line("p eds 3 2\ne 1 2\ne 2 1\n") == 3);    // duplicate
    CHECK(parse_error_line("p eds 3 1\n\ne 1 4\n") == 3);         // out of range
    CHECK(parse_error_line("p eds 3 1\ne 2 2\n") == 2);           // self-loop
    CHECK(parse_error_line("p eds 3 2\ne 1 2\n") == 2);           // too few edges
    CHECK(parse_error_line("p eds 3 1\ne 1 2\ne 2 3\n") == 3);    // too many edges
    CHECK(parse_error_line("p eds 3 1\ne 1 2\nq 1\n") == 3);      // unknown line
    CHECK(parse_error_line("# only a comment\n") == 1);
}

TEST_CASE("twelve-vertex example transcribes the drawing") {
    Graph f = fx::worked_example();
    CHECK(f.n() == 12);
    CHECK(f.m() == 13);
    for (const char* e : {"ab", "af", "fk", "kl", "ef", "fg", "gh", "hi", "ij", "ch", "ci", "di", "dj"})
        CHECK(f.adjacent(fx::example_id(e[0]), fx::example_id(e[1])));
}

TEST_CASE("instance round trip keeps graph, k, modulator and witness") {
    ModInstance inst;
    inst.graph = fx::path(6);
    inst.k = 2;
    inst.modulator = {0};
    std::string text = write_instance(inst, {{3, 4}, {1, 2}}, "pendant P6");
    ParsedInstance back = parse_instance(text);
    CHECK(back.instance.graph == inst.graph);
    CHECK(back.instance.k == 2);
    CHECK(back.instance.modulator == VSet{0});
    CHECK(back.witness == std::vector<Edge>{{1, 2}, {3, 4}});
    CHECK(write_graph(parse_graph(write_graph(fx::worked_example()))) == write_graph(fx::worked_example()));
}

TEST_CASE("instance files need k and x lines") {
    CHECK_THROWS_AS(parse_instance("p eds 2 1\ne 1 2\nx 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p eds 2 1\ne 1 2\nk 1\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p eds 2 1\ne 1 2\nk 1\nk 2\nx\n"), ParseError);
    CHECK_THROWS_AS(parse_instance("p eds 2 1\ne 1 2\nk 1\nx 1 1\n"), ParseError);
    CHECK(parse_instance("p eds 2 1\ne 1 2\nk 0\nx\n").instance.modulator.empty());
}

TEST_CASE("delete_vertices relabels densely") {
    auto r = delete_vertices(fx::path(3), {1});
    CHECK(r.graph.n() == 2);
    CHECK(r.graph.m() == 0);
    CHECK(r.to_old == std::vector<int>{0, 2});
    auto p = delete_vertices(fx::path(5), {2});
    auto comps = connected_components(p.graph);
    REQUIRE(comps.size() == 2);
    CHECK(is_isomorphic(comps[0].local, fx::path(2)));
    CHECK(is_isomorphic(comps[1].local, fx::path(2)));
    CHECK(is_isomorphic(delete_vertices(fx::worked_example(), {}).graph, fx::worked_example()));
    CHECK_THROWS_AS(delete_vertices(fx::path(3), {5}), InvalidInput);
}

TEST_CASE("connected components ordered by smallest id") {
    auto two = connected_components(disjoint_union({fx::path(3), fx::path(3)}));
    REQUIRE(two.size() == 2);
    CHECK(two[0].vertices == VSet{0, 1, 2});
    CHECK(two[1].vertices == VSet{3, 4, 5});
    CHECK(two[1].back == std::vector<int>{3, 4, 5});
    CHECK(connected_components(fx::worked_example()).size() == 1);
    CHECK(connected_components(Graph(0)).empty());
    auto many = connected_components(disjoint_union({fx::e_graph(), fx::e_graph(), fx::e_graph(), fx::e_graph()}));
    REQUIRE(many.size() == 4);
    for (const auto& c : many) CHECK(is_isomorphic(c.local, fx::e_graph()));
}

TEST_CASE("isomorphism on fixtures") {
    std::mt19937_64 rng(11);
    CHECK(is_isomorphic(fx::path(3), shuffled(fx::path(3), rng)));
    CHECK_FALSE(is_isomorphic(fx::path(3), fx::complete(3)));
    CHECK_FALSE(is_isomorphic(fx::path(5), fx::e_graph()));
    CHECK(is_isomorphic(fx::complete(12), fx::complete(12)));
    CHECK_THROWS_AS(is_isomorphic(fx::path(13), fx::path(13)), CapExceeded);
    CHECK(from_graph6(to_graph6(fx::worked_example())) == fx::worked_example());
}

TEST_CASE("canonical keys separate exactly the brute-force classes") {
    // Distinct brute-force classes get distinct keys; relabelings share one.
    for (int n = 1; n <= 6; ++n) {
        auto classes = oracle::all_graphs(n, false);
        std::set<std::string> keys;
        for (const auto& g : classes) keys.insert(canonical_key(g));
        CHECK(keys.size() == classes.size());
    }
    std::mt19937_64 rng(5);
    for (const auto& g : oracle::all_graphs(6, true)) {
        Graph h = shuffled(g, rng);
        CHECK(canonical_key(h) == canonical_key(g));
        CHECK(relabel(h, canonical_order(h)) == relabel(g, canonical_order(g)));
    }
}

TEST_CASE("isomorphism behaves as an equivalence on random triples") {
    std::mt19937_64 rng(21);
    std::bernoulli_distribution coin(0.4);
    for (int it = 0; it < 300; ++it) {
        int n = 5 + static_cast<int>(rng() % 6);
        GraphBuilder b(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) b.add_edge(u, v);
        Graph a = b.build(), a2 = shuffled(a, rng), a3 = shuffled(a2, rng);
        CHECK(is_isomorphic(a, a));
        CHECK(is_isomorphic(a, a2) == is_isomorphic(a2, a));
        CHECK(is_isomorphic(a, a3));
    }
}

TEST_CASE("validate_instance maps components to family members") {
    ModInstance ok{disjoint_union({fx::path(3), fx::path(3)}), 2, {}, {fx::path(3)}};
    auto fa = validate_instance(ok);
    CHECK(fa.member == std::vector<int>{0, 0});
    ModInstance pendant{fx::path(6), 2, {0}, {fx::path(5)}};
    CHECK(validate_instance(pendant).components.size() == 1);
    ModInstance bad{fx::path(4), 1, {}, {fx::path(3)}};
    CHECK_THROWS_AS(validate_instance(bad), InvalidInput);
}
