#include "pathcolor/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "pathcolor/errors.hpp"

namespace pathcolor {

std::string to_string(ParseErrorKind kind) {
    switch (kind) {
        case ParseErrorKind::malformed_header: return "malformed header";
        case ParseErrorKind::malformed_line: return "malformed line";
        case ParseErrorKind::out_of_range: return "vertex id out of range";
        case ParseErrorKind::duplicate_edge: return "duplicate edge";
        case ParseErrorKind::self_loop: return "self-loop";
        case ParseErrorKind::count_mismatch: return "count mismatch";
        case ParseErrorKind::bad_document: return "bad document";
    }
    return "parse error";
}

ParseError::ParseError(ParseErrorKind kind, int line, const std::string& detail)
    : std::runtime_error("line " + std::to_string(line) + ": " + to_string(kind) + ": " + detail),
      kind_(kind),
      line_(line) {}

namespace {

bool read_int(std::istringstream& in, long long& out) {
    in >> out;
    return !in.fail();
}

bool at_end(std::istringstream& in) {
    in >> std::ws;
    return in.eof();
}

}  // namespace

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    int header_line = 0;
    std::vector<Edge> edges;
    std::set<Edge> seen;
    std::vector<Labels> labels;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line.substr(first));
        std::string tag;
        ls >> tag;

        if (n < 0) {
            std::string fmt;
            if (tag != "p" || !(ls >> fmt) || fmt != "um" || !read_int(ls, n) || !read_int(ls, m) || !at_end(ls) ||
                n < 0 || m < 0)
                throw ParseError(ParseErrorKind::malformed_header, lineno, "expected 'p um <n> <m>'");
            header_line = lineno;
            labels.resize(static_cast<std::size_t>(n));
            continue;
        }

        if (tag == "e") {
            long long u = 0, v = 0;
            if (!read_int(ls, u) || !read_int(ls, v) || !at_end(ls))
                throw ParseError(ParseErrorKind::malformed_line, lineno, "expected 'e <u> <v>'");
            if (u < 0 || v < 0 || u >= n || v >= n)
                throw ParseError(ParseErrorKind::out_of_range, lineno,
                                 "edge " + std::to_string(u) + " " + std::to_string(v) + " with n = " + std::to_string(n));
            if (u == v) throw ParseError(ParseErrorKind::self_loop, lineno, "vertex " + std::to_string(u));
            const Edge e(static_cast<Vertex>(u), static_cast<Vertex>(v));
            if (!seen.insert(e).second)
                throw ParseError(ParseErrorKind::duplicate_edge, lineno,
                                 std::to_string(e.u) + " " + std::to_string(e.v));
            edges.push_back(e);
        } else if (tag == "l") {
            long long v = 0;
            std::string kv;
            if (!read_int(ls, v) || !(ls >> kv))
                throw ParseError(ParseErrorKind::malformed_line, lineno, "expected 'l <v> <key>=<value>'");
            std::string rest;
            std::getline(ls, rest);
            kv += rest;
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0)
                throw ParseError(ParseErrorKind::malformed_line, lineno, "label needs key=value");
            if (v < 0 || v >= n)
                throw ParseError(ParseErrorKind::out_of_range, lineno, "label on vertex " + std::to_string(v));
            labels[static_cast<std::size_t>(v)][kv.substr(0, eq)] = kv.substr(eq + 1);
        } else if (tag == "p") {
            throw ParseError(ParseErrorKind::malformed_header, lineno, "second header line");
        } else {
            throw ParseError(ParseErrorKind::malformed_line, lineno, "unknown line type '" + tag + "'");
        }
    }

    if (n < 0) throw ParseError(ParseErrorKind::malformed_header, lineno + 1, "missing 'p um <n> <m>' header");
    if (static_cast<long long>(edges.size()) != m)
        throw ParseError(ParseErrorKind::count_mismatch, header_line,
                         "header declares " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));

    bool any_label = false;
    for (const auto& l : labels) any_label = any_label || !l.empty();
    if (!any_label) labels.clear();
    return Graph(static_cast<int>(n), edges, std::move(labels));
}

std::string serialize_graph(const Graph& g) {
    std::ostringstream out;
    out << "p um " << g.n() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
    if (g.has_labels())
        for (Vertex v = 0; v < g.n(); ++v)
            for (const auto& [key, value] : g.labels(v)) {
                if (key.empty() || key.find_first_of("= \t\n") != std::string::npos ||
                    value.find('\n') != std::string::npos)
                    throw GraphError("label '" + key + "' on vertex " + std::to_string(v) + " cannot be serialized");
                out << "l " << v << ' ' << key << '=' << value << '\n';
            }
    return out.str();
}

namespace {

int line_of(const std::string& text, std::size_t byte) {
    int line = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
    return line;
}

}  // namespace

ColoringFile parse_coloring(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(ParseErrorKind::bad_document, line_of(text, e.byte), e.what());
    }
    if (!doc.is_object() || !doc.contains("colors") || !doc["colors"].is_array())
        throw ParseError(ParseErrorKind::bad_document, 1, "expected an object with a 'colors' array");

    std::vector<int> colors;
    for (const auto& c : doc["colors"]) {
        if (!c.is_number_integer() || c.get<long long>() < 1 || c.get<long long>() > (1LL << 30))
            throw ParseError(ParseErrorKind::out_of_range, 1, "colors must be integers >= 1");
        colors.push_back(c.get<int>());
    }
    if (doc.contains("n") && (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(colors.size())))
        throw ParseError(ParseErrorKind::count_mismatch, 1, "'n' does not match the colors array");
    ColoringFile out{Coloring(std::move(colors)), {}};
    if (doc.contains("k") && (!doc["k"].is_number_integer() || doc["k"].get<long long>() != out.coloring.k()))
        throw ParseError(ParseErrorKind::count_mismatch, 1, "'k' is not the largest color");
    if (doc.contains("metadata")) {
        if (!doc["metadata"].is_object()) throw ParseError(ParseErrorKind::bad_document, 1, "'metadata' must be an object");
        for (const auto& [key, value] : doc["metadata"].items())
            out.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
    }
    return out;
}

std::string serialize_coloring(const ColoringFile& file) {
    nlohmann::ordered_json doc;
    doc["n"] = file.coloring.size();
    doc["k"] = file.coloring.k();
    doc["colors"] = file.coloring.colors();
    if (!file.metadata.empty()) doc["metadata"] = file.metadata;
    return doc.dump() + "\n";
}

std::string serialize_coloring(const Coloring& c) { return serialize_coloring(ColoringFile{c, {}}); }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << contents;
}

}  // namespace pathcolor
