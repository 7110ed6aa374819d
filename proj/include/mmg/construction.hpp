#pragma once

#include <cstdint>

#include "mmg/error.hpp"
#include "mmg/gf.hpp"
#include "mmg/mixed_graph.hpp"

namespace mmg {

// Canonical vertex order for graphs on V(B_q): the q^2 lines sorted by
// (e(m), e(b)), then the q^2 points sorted by (e(x), e(y)).

inline std::uint32_t line_index(const gf::Field& F, gf::Elem m, gf::Elem b) {
    return m * F.q() + b;
}

inline std::uint32_t point_index(const gf::Field& F, gf::Elem x, gf::Elem y) {
    return F.q() * F.q() + x * F.q() + y;
}

/// Incidence graph of the biaffine plane over GF(q): lines [m,b] joined to
/// the q points (x, mx+b). Bipartite, q-regular, order 2q^2, no arcs.
inline MixedGraph biaffine(const gf::Field& F) {
    const std::uint32_t q = F.q();
    if (q > 46340) fail("Unsupported", "2q^2 vertices exceed 32-bit indexing for q=" + std::to_string(q));
    MixedGraph G;
    for (gf::Elem m = 0; m < q; ++m)
        for (gf::Elem b = 0; b < q; ++b) G.add_vertex(Vertex::line(m, b));
    for (gf::Elem x = 0; x < q; ++x)
        for (gf::Elem y = 0; y < q; ++y) G.add_vertex(Vertex::point(x, y));
    for (gf::Elem m = 0; m < q; ++m)
        for (gf::Elem b = 0; b < q; ++b)
            for (gf::Elem x = 0; x < q; ++x)
                G.add_edge(line_index(F, m, b), point_index(F, x, F.add(F.mul(m, x), b)));
    return G;
}

/// The mixed graph on V(B_q) built from explicit shift sets: edges of B_q,
/// extra line edges [m,b]~[m,b+i] for i in T1 and point edges for j in T2,
/// arcs [m,b]->[m,b+i] for i in S and (x,y)->(x,y+j) for j in -S.
inline MixedGraph g_qt(const gf::Field& F, const gf::ShiftSets& shifts) {
    gf::validate_shift_sets(F, shifts);
    const std::uint32_t q = F.q();
    MixedGraph G = biaffine(F);
    for (gf::Elem m = 0; m < q; ++m) {
        for (gf::Elem b = 0; b < q; ++b) {
            const std::uint32_t u = line_index(F, m, b);
            for (const gf::Elem i : shifts.T1) G.add_edge(u, line_index(F, m, F.add(b, i)));
            for (const gf::Elem i : shifts.S) G.add_arc(u, line_index(F, m, F.add(b, i)));
        }
    }
    for (gf::Elem x = 0; x < q; ++x) {
        for (gf::Elem y = 0; y < q; ++y) {
            const std::uint32_t u = point_index(F, x, y);
            for (const gf::Elem j : shifts.T2) G.add_edge(u, point_index(F, x, F.add(y, j)));
            for (const gf::Elem j : shifts.negS) G.add_arc(u, point_index(F, x, F.add(y, j)));
        }
    }
    return G;
}

/// Same with the canonical shift sets: diameter 2, order 2q^2, undirected
/// degree q+2t and directed degree (q-1)/2 - 2t for odd prime powers q >= 3.
inline MixedGraph g_qt(const gf::Field& F, std::uint32_t t) {
    return g_qt(F, gf::shift_sets(F, t));
}

/// Kautz digraph K(d,2) over the alphabet {0..d} with every digon collapsed
/// to an undirected edge: vertices are ordered pairs of distinct symbols in
/// lexicographic order, arcs (a,b)->(b,c) for c != b, and the digon between
/// (a,b) and (b,a) becomes one edge. Mixed Moore for every d >= 2.
inline MixedGraph kautz_mixed(std::uint32_t d) {
    if (d < 2) fail("DegreeTooSmall", "Kautz construction needs d >= 2, got d=" + std::to_string(d));
    if (d > 46339) fail("Unsupported", "pair ids exceed 32-bit indexing for d=" + std::to_string(d));
    const std::uint32_t k = d + 1;
    MixedGraph G;
    const auto id = [k](std::uint32_t a, std::uint32_t b) { return a * k + b; };
    std::vector<std::uint32_t> vertex_at(k * k, 0);
    for (std::uint32_t a = 0; a < k; ++a)
        for (std::uint32_t b = 0; b < k; ++b)
            if (a != b) vertex_at[id(a, b)] = G.add_vertex(Vertex::node(id(a, b)));
    for (std::uint32_t a = 0; a < k; ++a) {
        for (std::uint32_t b = 0; b < k; ++b) {
            if (a == b) continue;
            for (std::uint32_t c = 0; c < k; ++c) {
                if (c == b) continue;
                if (c == a)
                    G.add_edge(vertex_at[id(a, b)], vertex_at[id(b, a)]);
                else
                    G.add_arc(vertex_at[id(a, b)], vertex_at[id(b, c)]);
            }
        }
    }
    return G;
}

}  // namespace mmg
