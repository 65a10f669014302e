#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "lir/class_colorers.hpp"
#include "lir/enumerate.hpp"
#include "lir/io.hpp"

using namespace lir;

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(make_complete(3)) == "Bw");
    CHECK(to_graph6(make_path(3)) == "Bg");
    CHECK(to_graph6(make_complete(4)) == "C~");
    CHECK(to_graph6(make_complete(5)) == "D~{");
    CHECK(to_graph6(make_bowtie()) == "D{c");
    CHECK(to_graph6(SimpleGraph(0)) == "?");
    CHECK(to_graph6(SimpleGraph(1)) == "@");
    CHECK(from_graph6("Bw") == make_complete(3));
    CHECK(to_graph6(from_graph6(">>graph6<<D{c")) == "D{c");
}

TEST_CASE("graph6 round trip over random graphs, including long size fields") {
    std::mt19937_64 rng(7);
    for (int n : {2, 5, 12, 62, 63, 64, 100}) {
        SimpleGraph g = random_connected_graph(n, 0.2, rng);
        const std::string s = to_graph6(g);
        if (n >= 63) {
            CHECK(s[0] == '~');
        }
        SimpleGraph back = from_graph6(s);
        CHECK(back.vertex_count() == n);
        CHECK(to_graph6(back) == s);
        CHECK(back.edge_count() == g.edge_count());
    }
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("B"), ParseError);      // body missing
    CHECK_THROWS_AS(from_graph6("Bww"), ParseError);    // body too long
    CHECK_THROWS_AS(from_graph6("Bx"), ParseError);     // padding bits set
    CHECK_THROWS_AS(from_graph6("B w"), ParseError);    // byte out of range
    CHECK_THROWS_AS(from_graph6("~?"), ParseError);     // truncated size
}

TEST_CASE("graph6 stream reports the failing line") {
    std::istringstream in(">>graph6<<\nBw\n\nC~\nBx\n");
    try {
        (void)read_graph6_stream(in);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
        CHECK(std::string(e.what()).find("line 5") != std::string::npos);
    }
    std::istringstream ok("Bw\nBg\n");
    CHECK(read_graph6_stream(ok).size() == 2);
}

TEST_CASE("edge lists") {
    std::istringstream in("# bow tie\n0 1\n0 2\n1 2\n0 3\n0 4\n3 4  # last\n");
    SimpleGraph g = read_edge_list(in);
    CHECK(g.edge_count() == 6);
    CHECK(to_graph6(g) == to_graph6(make_bowtie()));
    CHECK(to_edge_list(make_path(3)) == "0 1\n1 2\n");
    std::istringstream dup("0 1\n1 0\n");
    try {
        (void)read_edge_list(dup);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
    std::istringstream junk("0 1\n2 x\n");
    CHECK_THROWS_AS(read_edge_list(junk), ParseError);
    std::istringstream loop("3 3\n");
    CHECK_THROWS_AS(read_edge_list(loop), ParseError);
}

TEST_CASE("JSON round trip is byte-stable") {
    for (int len = 3; len <= 12; ++len) {
        Decomposition d = color_double_cycle(len);
        const std::string js = to_json(d);
        Decomposition back = decomposition_from_json(js);
        CHECK(back == d);
        CHECK(to_json(back) == js);
    }
}

TEST_CASE("JSON layout for the doubled triangle") {
    Decomposition d = color_double_cycle(3);
    const std::string js = to_json(d);
    CHECK(js.find("\"n\": 3") != std::string::npos);
    CHECK(js.find("\"k\": 2") != std::string::npos);
    CHECK(js.find("\"mult\": 2") != std::string::npos);
    CHECK(js.back() == '\n');
}

TEST_CASE("JSON errors") {
    CHECK_THROWS_AS(decomposition_from_json("{"), ParseError);
    CHECK_THROWS_AS(decomposition_from_json("{\"k\":2}"), ParseError);
    CHECK_THROWS_AS(decomposition_from_json(R"({"k":2,"edges":[{"u":0,"v":1,"counts":[1]}]})"), ParseError);
    CHECK_THROWS_AS(decomposition_from_json(R"({"k":2,"edges":[{"u":0,"v":1,"mult":2,"counts":[1,0]}]})"),
                    GraphError);
    CHECK_THROWS_AS(decomposition_from_json(R"({"k":2,"edges":[{"u":0,"v":0,"counts":[1,1]}]})"), GraphError);
    Decomposition d = decomposition_from_json(R"({"edges":[{"u":0,"v":1,"counts":[2,0]}]})");
    CHECK(d.colors() == 2);
    CHECK(d.host().mult(0) == 2);
}

TEST_CASE("DOT emits one edge per copy") {
    Decomposition d = color_double_cycle(3);
    const std::string dot = to_dot(d);
    auto count = [&](const std::string& needle) {
        std::size_t c = 0;
        for (auto p = dot.find(needle); p != std::string::npos; p = dot.find(needle, p + 1)) {
            ++c;
        }
        return c;
    };
    CHECK(count(" -- ") == 6);
    CHECK(count("color=red") == 3);
    CHECK(count("color=blue") == 3);
    CHECK(dot.rfind("graph ", 0) == 0);
}

TEST_CASE("summary lists splits") {
    const std::string s = to_summary(color_double_cycle(3));
    CHECK(s.find("RB") != std::string::npos);
    CHECK(s.find("n=3 m=3 k=2") != std::string::npos);
}
