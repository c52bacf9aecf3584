#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zagreb/errors.hpp"
#include "zagreb/families.hpp"
#include "zagreb/graph_algorithms.hpp"
#include "zagreb/graph_io.hpp"
#include "zagreb/operators.hpp"
#include "zagreb/report_io.hpp"
#include "zagreb/verify.hpp"

#include "support/test_graphs.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <sstream>

#include <json.hpp>

using namespace zagreb;
using testsupport::v;

namespace {

std::set<std::pair<std::string, std::string>> token_edges(const Graph &g) {
    std::set<std::pair<std::string, std::string>> out;
    for (const auto &[a, b] : g.edges()) {
        out.insert({a.token(), b.token()});
    }
    return out;
}

std::set<std::string> token_vertices(const Graph &g) {
    std::set<std::string> out;
    for (const VertexLabel &u : g.vertices()) {
        out.insert(u.token());
    }
    return out;
}

} // namespace

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("a b\nb c");
    CHECK(p3.order() == 3);
    CHECK(p3.size() == 2);
    CHECK(p3.adjacent(v("a"), v("b")));
    CHECK(p3.adjacent(v("b"), v("c")));

    Graph with_extras = parse_edge_list("# comment\n\nx y\nz:\n");
    CHECK(with_extras.order() == 3);
    CHECK(with_extras.size() == 1);
    CHECK(with_extras.degree(v("z")) == 0);
}

TEST_CASE("edge list errors carry line numbers") {
    try {
        parse_edge_list("a a");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line() == 1);
    }
    try {
        parse_edge_list("a b\nb a");
        FAIL("expected ParseError");
    } catch (const ParseError &e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_edge_list("a b c"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("lonely"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(":"), ParseError);
}

TEST_CASE("edge list of the smallest cycle-star matches the generator") {
    Graph parsed = parse_edge_list("h a\nh b\na b\nh leaf\n");
    Graph generated = cycle_star({3, 1});
    CHECK(parsed.order() == generated.order());
    CHECK(parsed.size() == generated.size());
    CHECK(degree_sequence(parsed) == degree_sequence(generated));
}

TEST_CASE("edge list round trip is the identity on tokens and edges") {
    Graph lcs = apply_pipeline(cycle_star({4, 2}),
                               std::array{OperatorId::Subdivision, OperatorId::LineCutVertex});
    Graph reparsed = parse_edge_list(emit_edge_list(lcs));
    CHECK(token_vertices(reparsed) == token_vertices(lcs));
    CHECK(token_edges(reparsed) == token_edges(lcs));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = testsupport::random_graph(rng, 15);
        Graph back = parse_edge_list(emit_edge_list(g));
        CHECK(back == g); // Original labels survive exactly
    }
}

TEST_CASE("graph6 known encodings") {
    CHECK(emit_graph6(testsupport::make_cycle(3)) == "Bw");
    CHECK(emit_graph6(testsupport::make_path(2)) == "A_");
    CHECK(emit_graph6(Graph{}) == "?");

    Graph triangle = parse_graph6("Bw");
    CHECK(triangle.order() == 3);
    CHECK(triangle.size() == 3);

    CHECK(parse_graph6("?").order() == 0);
    CHECK(parse_graph6(">>graph6<<Bw").size() == 3);

    // Canonical integer tokens, in emit order.
    CHECK(token_vertices(triangle) == std::set<std::string>{"0", "1", "2"});
}

TEST_CASE("graph6 five-vertex corpus string round trips") {
    Graph g = parse_graph6("D?{");
    CHECK(g.order() == 5);
    CHECK(emit_graph6(g) == "D?{");
}

TEST_CASE("graph6 parse errors") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("B"), ParseError);    // truncated body
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);  // body too long
    CHECK_THROWS_AS(parse_graph6("B\x1f"), ParseError); // invalid character
    CHECK_THROWS_AS(parse_graph6("~~????"), ParseError); // unsupported 8-byte order
}

TEST_CASE("graph6 round trip preserves structure up to 50 vertices") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        Graph g = testsupport::random_graph(rng, 50);
        Graph back = parse_graph6(emit_graph6(g));
        REQUIRE(back.order() == g.order());
        CHECK(back.size() == g.size());
        CHECK(degree_sequence(back) == degree_sequence(g));

        // emit writes vertices in sorted label order, so vertex i of the
        // reparse corresponds to the i-th sorted vertex of g; adjacency
        // must agree cell by cell.
        const auto &sorted = g.vertices();
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            for (std::size_t j = i + 1; j < sorted.size(); ++j) {
                CHECK(back.adjacent(v(std::to_string(i)), v(std::to_string(j))) ==
                      g.adjacent(sorted[i], sorted[j]));
            }
        }
    }
}

TEST_CASE("dot export") {
    GraphBuilder b;
    b.add_edge(v("a"), v("b"));
    CHECK(emit_dot(b.build()) == "graph G {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");

    std::string cs = emit_dot(cycle_star({3, 1}));
    CHECK(std::count(cs.begin(), cs.end(), ';') == 4 + 4);

    Graph lcs = apply_pipeline(cycle_star({3, 1}),
                               std::array{OperatorId::Subdivision, OperatorId::LineCutVertex});
    std::string dot = emit_dot(lcs);
    CHECK(std::count(dot.begin(), dot.end(), ';') == 10 + 14);
    CHECK(dot.find(" -- ") != std::string::npos);
}

TEST_CASE("csv report layout") {
    VerificationReport report = verify_grid(3, 3, 1, 1);
    std::string csv = emit_report(report, ReportFormat::CSV);

    std::istringstream in(csv);
    std::string line;
    std::vector<std::string> lines;
    while (std::getline(in, line)) {
        lines.push_back(line);
    }
    REQUIRE(lines.size() >= 14);
    CHECK(lines[0] == "k,n,formula,formula_value,oracle_value,verdict");
    CHECK(lines[1] == "3,4,T21_M1,44,44,Match");
    CHECK(lines[4] == "3,4,T25_M2CO,58,86,Mismatch");

    // 12 scalar rows, then bucket rows flagged by the sentinel column.
    std::size_t scalar_rows = 0, partition_rows = 0;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (lines[i].ends_with(",partition")) {
            ++partition_rows;
        } else {
            ++scalar_rows;
            CHECK(partition_rows == 0); // scalar block comes first
        }
    }
    CHECK(scalar_rows == 12);
    CHECK(partition_rows > 0);
    CHECK(csv.find("3,4,LCS_EDGE_PARTITION[4-5],2,2,Match,partition") != std::string::npos);
    CHECK(csv.find("LCS_EDGE_PARTITION:literal[") != std::string::npos);
}

TEST_CASE("json report mirrors the structure") {
    VerificationReport report = verify_grid(3, 4, 1, 2);
    nlohmann::json doc = nlohmann::json::parse(emit_report(report, ReportFormat::JSON));
    CHECK(doc["grid"]["k_min"] == 3);
    CHECK(doc["grid"]["k_max"] == 4);
    CHECK(doc["records"].size() == 4 * 12);
    CHECK(doc["partition_diffs"].size() == 4 * 5);
    CHECK(doc["summary"]["formulas"].size() == 12);
    CHECK(doc["summary"]["partitions"].size() == 5);
    CHECK(doc["records"][0]["formula"] == "T21_M1");
    CHECK(doc["records"][0]["verdict"] == "Match");
}

TEST_CASE("index report json is exact") {
    Graph ls = apply_pipeline(cycle_star({3, 1}),
                              std::array{OperatorId::Subdivision, OperatorId::LineGraph});
    nlohmann::json doc = nlohmann::json::parse(emit_index_report(index_report(ls)));
    CHECK(doc["order"] == 8);
    CHECK(doc["size"] == 9);
    CHECK(doc["m1"] == 44);
    CHECK(doc["m2"] == 54);
    CHECK(doc["m1_coindex"] == 82);
    CHECK(doc["m2_coindex"] == 86);
    CHECK(doc["degree_distribution"]["2"] == 4);
    CHECK(doc["edge_partition"]["3-3"] == 3);
}
