#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mmg/error.hpp"
#include "mmg/mixed_graph.hpp"

// Text format "mixed-graph v1":
//   mg1 <n> <#edges> <#arcs>
//   one line per vertex:  L <e(m)> <e(b)> | P <e(x)> <e(y)> | N <id>
//   one line per edge:    E <i> <j>   with i < j
//   one line per arc:     A <i> <j>   tail i, head j
// Indices are 0-based positions in the vertex list. parse(serialize(G))
// reproduces G exactly, including edge and arc order.

namespace mmg {

inline void write_mg1(std::ostream& os, const MixedGraph& G) {
    os << "mg1 " << G.order() << ' ' << G.edge_count() << ' ' << G.arc_count() << '\n';
    for (const Vertex& v : G.vertices()) {
        switch (v.kind) {
            case Vertex::Kind::Line: os << "L " << v.a << ' ' << v.b << '\n'; break;
            case Vertex::Kind::Point: os << "P " << v.a << ' ' << v.b << '\n'; break;
            case Vertex::Kind::Node: os << "N " << v.a << '\n'; break;
        }
    }
    for (const auto& [i, j] : G.edges()) os << "E " << i << ' ' << j << '\n';
    for (const auto& [i, j] : G.arcs()) os << "A " << i << ' ' << j << '\n';
}

inline std::string to_mg1(const MixedGraph& G) {
    std::ostringstream os;
    write_mg1(os, G);
    return os.str();
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && line[i] == ' ') ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ') ++j;
        if (j > i) fields.push_back(line.substr(i, j - i));
        i = j;
    }
    return fields;
}

inline std::uint64_t parse_u64(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    const char* const last = token.data() + token.size();
    const auto [ptr, ec] = std::from_chars(token.data(), last, value);
    if (ec != std::errc{} || ptr != last)
        fail("MalformedFile", "line " + std::to_string(line_no) + ": bad integer '" +
                                  std::string(token) + "'");
    return value;
}

inline std::uint32_t parse_u32(std::string_view token, std::size_t line_no) {
    const std::uint64_t value = parse_u64(token, line_no);
    if (value > 0xFFFFFFFFull)
        fail("MalformedFile", "line " + std::to_string(line_no) + ": integer too large");
    return static_cast<std::uint32_t>(value);
}

}  // namespace detail

inline MixedGraph read_mg1(std::istream& is) {
    std::string line;
    std::size_t line_no = 0;
    const auto next_line = [&]() -> std::vector<std::string_view> {
        if (!std::getline(is, line))
            fail("MalformedFile", "unexpected end of file after line " + std::to_string(line_no));
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return detail::split_fields(line);
    };

    const auto header = next_line();
    if (header.size() != 4 || header[0] != "mg1")
        fail("MalformedFile", "missing 'mg1 <n> <#edges> <#arcs>' header");
    const std::uint64_t n = detail::parse_u64(header[1], line_no);
    const std::uint64_t n_edges = detail::parse_u64(header[2], line_no);
    const std::uint64_t n_arcs = detail::parse_u64(header[3], line_no);

    MixedGraph G;
    try {
        for (std::uint64_t k = 0; k < n; ++k) {
            const auto f = next_line();
            if (f.size() == 3 && f[0] == "L")
                G.add_vertex(Vertex::line(detail::parse_u32(f[1], line_no),
                                          detail::parse_u32(f[2], line_no)));
            else if (f.size() == 3 && f[0] == "P")
                G.add_vertex(Vertex::point(detail::parse_u32(f[1], line_no),
                                           detail::parse_u32(f[2], line_no)));
            else if (f.size() == 2 && f[0] == "N")
                G.add_vertex(Vertex::node(detail::parse_u32(f[1], line_no)));
            else
                fail("MalformedFile", "line " + std::to_string(line_no) + ": bad vertex line");
        }
        for (std::uint64_t k = 0; k < n_edges; ++k) {
            const auto f = next_line();
            if (f.size() != 3 || f[0] != "E")
                fail("MalformedFile", "line " + std::to_string(line_no) + ": bad edge line");
            const std::uint32_t i = detail::parse_u32(f[1], line_no);
            const std::uint32_t j = detail::parse_u32(f[2], line_no);
            if (i >= j)
                fail("MalformedFile",
                     "line " + std::to_string(line_no) + ": edge endpoints must satisfy i < j");
            G.add_edge(i, j);
        }
        for (std::uint64_t k = 0; k < n_arcs; ++k) {
            const auto f = next_line();
            if (f.size() != 3 || f[0] != "A")
                fail("MalformedFile", "line " + std::to_string(line_no) + ": bad arc line");
            G.add_arc(detail::parse_u32(f[1], line_no), detail::parse_u32(f[2], line_no));
        }
    } catch (const Error& e) {
        if (e.code() == "MalformedFile") throw;
        // loops, conflicts, duplicate vertices, bad indices
        fail("MalformedFile", "line " + std::to_string(line_no) + ": " + e.what());
    }
    while (std::getline(is, line)) {
        ++line_no;
        if (!detail::split_fields(line).empty())
            fail("MalformedFile", "line " + std::to_string(line_no) + ": trailing content");
    }
    return G;
}

inline MixedGraph parse_mg1(const std::string& text) {
    std::istringstream is(text);
    return read_mg1(is);
}

/// Graphviz export: edges rendered without arrowheads, arcs directed.
inline std::string to_dot(const MixedGraph& G) {
    std::string out = "digraph mg {\n";
    for (std::uint32_t i = 0; i < G.order(); ++i) {
        out += "  v" + std::to_string(i) + " [label=\"" + G.vertex(i).label() + "\"];\n";
    }
    for (const auto& [i, j] : G.edges())
        out += "  v" + std::to_string(i) + " -> v" + std::to_string(j) + " [dir=none];\n";
    for (const auto& [i, j] : G.arcs())
        out += "  v" + std::to_string(i) + " -> v" + std::to_string(j) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace mmg
