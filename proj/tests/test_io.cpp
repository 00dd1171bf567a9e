#include <gtest/gtest.h>

#include <random>

#include "pathcolor/generators.hpp"
#include "pathcolor/io.hpp"

using namespace pathcolor;

namespace {

ParseErrorKind kind_of(const std::string& text, int* line = nullptr) {
    try {
        parse_graph(text);
    } catch (const ParseError& e) {
        if (line) *line = e.line();
        return e.kind();
    }
    ADD_FAILURE() << "no parse error for:\n" << text;
    return ParseErrorKind::bad_document;
}

}  // namespace

TEST(GraphFile, SerializeAndParse) {
    EXPECT_EQ(serialize_graph(path_graph(2)), "p um 2 1\ne 0 1\n");
    EXPECT_EQ(parse_graph("p um 2 1\ne 0 1\n"), path_graph(2));
    EXPECT_EQ(parse_graph("# comment\n\np um 3 1\n  e 2 1\n"), Graph(3, {{1, 2}}));
}

TEST(GraphFile, DistinctErrorKindsWithLines) {
    int line = 0;
    EXPECT_EQ(kind_of("p um 2 1\ne 0 5\n", &line), ParseErrorKind::out_of_range);
    EXPECT_EQ(line, 2);
    EXPECT_EQ(kind_of("p xx 2 1\n", &line), ParseErrorKind::malformed_header);
    EXPECT_EQ(line, 1);
    EXPECT_EQ(kind_of("e 0 1\n"), ParseErrorKind::malformed_header);
    EXPECT_EQ(kind_of(""), ParseErrorKind::malformed_header);
    EXPECT_EQ(kind_of("p um 3 2\ne 0 1\ne 1 0\n", &line), ParseErrorKind::duplicate_edge);
    EXPECT_EQ(line, 3);
    EXPECT_EQ(kind_of("p um 3 1\ne 1 1\n"), ParseErrorKind::self_loop);
    EXPECT_EQ(kind_of("p um 3 2\ne 0 1\n"), ParseErrorKind::count_mismatch);
    EXPECT_EQ(kind_of("p um 3 1\ne 0\n"), ParseErrorKind::malformed_line);
    EXPECT_EQ(kind_of("p um 3 1\nx 0 1\n"), ParseErrorKind::malformed_line);
}

TEST(GraphFile, LabelsRoundTrip) {
    const Graph g = grid_graph(3).first;
    const std::string text = serialize_graph(g);
    const Graph back = parse_graph(text);
    EXPECT_EQ(back, g);
    EXPECT_EQ(serialize_graph(back), text);
    EXPECT_EQ(back.labels(5).at("x"), "2");
}

TEST(GraphFile, RandomRoundTrips) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        const Graph g = random_graph(1 + t % 12, 0.3, rng);
        const std::string text = serialize_graph(g);
        EXPECT_EQ(serialize_graph(parse_graph(text)), text);
        EXPECT_EQ(parse_graph(text), g);
    }
}

TEST(ColoringFile, RoundTripAndValidation) {
    const ColoringFile f{Coloring({1, 3, 2}), {{"family", "path"}, {"param", "3"}}};
    const std::string text = serialize_coloring(f);
    const ColoringFile back = parse_coloring(text);
    EXPECT_EQ(back.coloring, f.coloring);
    EXPECT_EQ(back.metadata, f.metadata);
    EXPECT_EQ(serialize_coloring(back), text);

    EXPECT_THROW(parse_coloring(R"({"n": 2, "colors": [1, 2, 3]})"), ParseError);
    EXPECT_THROW(parse_coloring(R"({"k": 2, "colors": [1, 3]})"), ParseError);
    EXPECT_THROW(parse_coloring(R"({"colors": [1, 0]})"), ParseError);
    EXPECT_THROW(parse_coloring("{\n\"colors\": [1,\n"), ParseError);
    EXPECT_EQ(parse_coloring(R"({"colors": [2, 1]})").coloring.k(), 2);
}
