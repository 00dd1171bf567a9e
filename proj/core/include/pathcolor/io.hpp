#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include "pathcolor/coloring_model.hpp"
#include "pathcolor/graph.hpp"

namespace pathcolor {

enum class ParseErrorKind {
    malformed_header,
    malformed_line,
    out_of_range,
    duplicate_edge,
    self_loop,
    count_mismatch,
    bad_document,
};

std::string to_string(ParseErrorKind kind);

class ParseError : public std::runtime_error {
public:
    ParseError(ParseErrorKind kind, int line, const std::string& detail);

    ParseErrorKind kind() const noexcept { return kind_; }
    int line() const noexcept { return line_; }

private:
    ParseErrorKind kind_;
    int line_;
};

/// Text format:
///   p um <n> <m>
///   e <u> <v>            (m lines, 0-based ids)
///   l <v> <key>=<value>  (optional labels)
///   # comment
/// Serialization writes edges in sorted order, then labels by vertex and key,
/// so serialize(parse(serialize(g))) == serialize(g).
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

struct ColoringFile {
    Coloring coloring;
    std::map<std::string, std::string> metadata;  // family, parameters, method, ...
};

/// JSON document {"n": .., "k": .., "colors": [..], "metadata": {..}}.
ColoringFile parse_coloring(const std::string& text);
std::string serialize_coloring(const ColoringFile& file);
std::string serialize_coloring(const Coloring& c);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& contents);

}  // namespace pathcolor
