#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mmg/construction.hpp"
#include "mmg/error.hpp"
#include "mmg/gf.hpp"
#include "mmg/mixed_graph.hpp"

namespace mmg {

/// A total vertex-to-vertex assignment as an index table, tagged with the
/// formula it came from ("theta", "psi(2,3)", compositions, or "explicit").
struct VertexMap {
    std::vector<std::uint32_t> image;
    std::string tag;

    std::uint32_t operator()(std::uint32_t i) const { return image[i]; }

    bool is_permutation() const {
        std::vector<char> seen(image.size(), 0);
        for (const std::uint32_t v : image) {
            if (v >= image.size() || seen[v]) return false;
            seen[v] = 1;
        }
        return true;
    }
};

inline VertexMap identity_map(std::size_t n) {
    VertexMap f;
    f.tag = "id";
    f.image.resize(n);
    for (std::size_t i = 0; i < n; ++i) f.image[i] = static_cast<std::uint32_t>(i);
    return f;
}

/// outer after inner.
inline VertexMap compose(const VertexMap& outer, const VertexMap& inner) {
    VertexMap f;
    f.tag = outer.tag + "*" + inner.tag;
    f.image.resize(inner.image.size());
    for (std::size_t i = 0; i < inner.image.size(); ++i) f.image[i] = outer.image[inner.image[i]];
    return f;
}

inline VertexMap inverse_map(const VertexMap& f) {
    VertexMap g;
    g.tag = f.tag + "^-1";
    g.image.resize(f.image.size());
    for (std::size_t i = 0; i < f.image.size(); ++i) g.image[f.image[i]] = static_cast<std::uint32_t>(i);
    return g;
}

/// The part-swapping involution on V(B_q): [m,b] -> (-m,-b), (x,y) -> [-x,-y].
inline VertexMap theta(const gf::Field& F) {
    const std::uint32_t q = F.q();
    VertexMap f;
    f.tag = "theta";
    f.image.resize(2 * q * q);
    for (gf::Elem m = 0; m < q; ++m)
        for (gf::Elem b = 0; b < q; ++b)
            f.image[line_index(F, m, b)] = point_index(F, F.neg(m), F.neg(b));
    for (gf::Elem x = 0; x < q; ++x)
        for (gf::Elem y = 0; y < q; ++y)
            f.image[point_index(F, x, y)] = line_index(F, F.neg(x), F.neg(y));
    return f;
}

/// The part-preserving map [m,b] -> [-m, b+am+s], (x,y) -> (-x+a, y+s).
/// (The translation parameter is called s here; t stays reserved for the
/// shift-set size.)
inline VertexMap psi(const gf::Field& F, gf::Elem a, gf::Elem s) {
    const std::uint32_t q = F.q();
    VertexMap f;
    f.tag = "psi(" + std::to_string(a) + "," + std::to_string(s) + ")";
    f.image.resize(2 * q * q);
    for (gf::Elem m = 0; m < q; ++m)
        for (gf::Elem b = 0; b < q; ++b)
            f.image[line_index(F, m, b)] =
                line_index(F, F.neg(m), F.add(b, F.add(F.mul(a, m), s)));
    for (gf::Elem x = 0; x < q; ++x)
        for (gf::Elem y = 0; y < q; ++y)
            f.image[point_index(F, x, y)] = point_index(F, F.sub(a, x), F.add(y, s));
    return f;
}

struct AutoCheck {
    bool ok = false;
    std::string reason;                                                 // empty when ok
    std::optional<std::pair<std::uint32_t, std::uint32_t>> violating;   // first bad pair
};

/// Verifies that f is a bijection preserving edges as edges and arcs as arcs
/// (orientation included). Preservation of non-adjacency follows by counting.
inline AutoCheck check_automorphism(const MixedGraph& G, const VertexMap& f) {
    AutoCheck result;
    if (f.image.size() != G.order() || !f.is_permutation()) {
        result.reason = "not a permutation of V";
        return result;
    }
    for (const auto& [u, v] : G.edges()) {
        if (!G.has_edge(f.image[u], f.image[v])) {
            result.reason = "edge image is not an edge";
            result.violating = std::make_pair(u, v);
            return result;
        }
    }
    for (const auto& [u, v] : G.arcs()) {
        if (!G.has_arc(f.image[u], f.image[v])) {
            result.reason = "arc image is not an arc";
            result.violating = std::make_pair(u, v);
            return result;
        }
    }
    result.ok = true;
    return result;
}

inline bool is_automorphism(const MixedGraph& G, const VertexMap& f) {
    return check_automorphism(G, f).ok;
}

struct CertifiedMap {
    std::uint32_t target = 0;
    VertexMap map;  // verified automorphism of G_q sending [0,0] to target
};

/// Vertex-transitivity certificate for G_q = g_qt(F, 0): one verified
/// automorphism per vertex moving the base line [0,0] there. Point targets
/// use psi(x,y)*theta; line targets compose two such part-swapping maps.
inline std::vector<CertifiedMap> transitivity_certificate(const gf::Field& F) {
    const MixedGraph G = g_qt(F, 0);
    const std::uint32_t base = line_index(F, 0, 0);
    const VertexMap swap_part = theta(F);

    std::vector<CertifiedMap> certificate;
    certificate.reserve(G.order());
    for (std::uint32_t target = 0; target < G.order(); ++target) {
        VertexMap f;
        if (target == base) {
            f = identity_map(G.order());
        } else if (G.vertex(target).is_point()) {
            const gf::Elem x = G.vertex(target).a, y = G.vertex(target).b;
            f = compose(psi(F, x, y), swap_part);
        } else {
            const gf::Elem m = G.vertex(target).a, b = G.vertex(target).b;
            // [0,0] -> (m,0) -> [m,b]
            f = compose(compose(psi(F, 0, b), swap_part), compose(psi(F, m, 0), swap_part));
        }
        if (f.image[base] != target)
            fail("CertificateFailure", "map " + f.tag + " does not reach vertex " +
                                           G.vertex(target).label());
        const AutoCheck check = check_automorphism(G, f);
        if (!check.ok)
            fail("CertificateFailure",
                 "map " + f.tag + " is not an automorphism: " + check.reason);
        certificate.push_back({target, std::move(f)});
    }
    return certificate;
}

namespace detail {

using Signature = std::vector<std::uint64_t>;

// A vertex's signature is its color plus the sorted multiset of
// (relation, neighbor color) pairs over edge / out-arc / in-arc.
inline std::vector<Signature> signatures(const MixedGraph& G,
                                         const std::vector<std::uint32_t>& color,
                                         std::size_t offset) {
    const auto pack = [](std::uint64_t rel, std::uint64_t c) { return (rel << 32) | c; };
    std::vector<Signature> sigs(G.order());
    for (std::uint32_t v = 0; v < G.order(); ++v) {
        Signature sig;
        sig.push_back(color[offset + v]);
        std::vector<std::uint64_t> nbrs;
        for (const std::uint32_t u : G.edge_neighbors(v)) nbrs.push_back(pack(0, color[offset + u]));
        for (const std::uint32_t u : G.out_neighbors(v)) nbrs.push_back(pack(1, color[offset + u]));
        for (const std::uint32_t u : G.in_neighbors(v)) nbrs.push_back(pack(2, color[offset + u]));
        std::sort(nbrs.begin(), nbrs.end());
        sig.insert(sig.end(), nbrs.begin(), nbrs.end());
        sigs[v] = std::move(sig);
    }
    return sigs;
}

// Renumber a concatenated signature list 0..k-1 in lexicographic order.
inline std::vector<std::uint32_t> number_signatures(const std::vector<const Signature*>& all) {
    std::map<Signature, std::uint32_t> dict;
    for (const Signature* sig : all) dict.emplace(*sig, 0);
    std::uint32_t next = 0;
    for (auto& [sig, id] : dict) id = next++;
    std::vector<std::uint32_t> out(all.size());
    for (std::size_t v = 0; v < all.size(); ++v) out[v] = dict.at(*all[v]);
    return out;
}

inline std::size_t count_colors(const std::vector<std::uint32_t>& color) {
    if (color.empty()) return 0;
    return static_cast<std::size_t>(*std::max_element(color.begin(), color.end())) + 1;
}

inline std::size_t distinct_values(std::vector<std::uint32_t> xs) {
    std::sort(xs.begin(), xs.end());
    return static_cast<std::size_t>(std::unique(xs.begin(), xs.end()) - xs.begin());
}

}  // namespace detail

/// Iterated color refinement over the three relations. The stabilized
/// partition never splits a true automorphism orbit, so a single cell is
/// consistent with (though not proof of) vertex transitivity.
inline std::vector<std::uint32_t> refine(const MixedGraph& G) {
    std::vector<std::uint32_t> color(G.order(), 0);
    std::size_t cells = G.order() == 0 ? 0 : 1;
    while (true) {
        const auto sigs = detail::signatures(G, color, 0);
        std::vector<const detail::Signature*> all;
        all.reserve(sigs.size());
        for (const auto& sig : sigs) all.push_back(&sig);
        std::vector<std::uint32_t> next = detail::number_signatures(all);
        const std::size_t next_cells = detail::count_colors(next);
        if (next_cells == cells) return color;  // splits only, so equal counts = stable
        color = std::move(next);
        cells = next_cells;
    }
}

inline std::size_t cell_count(const std::vector<std::uint32_t>& coloring) {
    return detail::count_colors(coloring);
}

struct IsoCheck {
    bool isomorphic = false;
    VertexMap witness;  // G -> H vertex map when isomorphic
};

namespace detail {

// Joint refinement of G and H with pinned vertices forced into private
// colors. Returns the stable coloring over the concatenated vertex set, or
// nullopt as soon as some color class has unequal size on the two sides.
inline std::optional<std::vector<std::uint32_t>> refine_pair(
    const MixedGraph& G, const MixedGraph& H, const std::vector<std::uint32_t>& pins_g,
    const std::vector<std::uint32_t>& pins_h) {
    const std::size_t ng = G.order(), nh = H.order();
    std::vector<std::uint32_t> color(ng + nh, 0);
    for (std::size_t k = 0; k < pins_g.size(); ++k) {
        color[pins_g[k]] = static_cast<std::uint32_t>(k + 1);
        color[ng + pins_h[k]] = static_cast<std::uint32_t>(k + 1);
    }
    std::size_t cells = distinct_values(color);
    while (true) {
        const auto g_sigs = signatures(G, color, 0);
        const auto h_sigs = signatures(H, color, ng);
        std::vector<const Signature*> all;
        all.reserve(ng + nh);
        for (const auto& sig : g_sigs) all.push_back(&sig);
        for (const auto& sig : h_sigs) all.push_back(&sig);
        std::vector<std::uint32_t> next = number_signatures(all);
        const std::size_t next_cells = count_colors(next);
        const bool stable = next_cells == cells;
        color = std::move(next);
        cells = next_cells;
        if (stable) break;
    }
    std::vector<long long> balance(cells, 0);
    for (std::size_t v = 0; v < ng; ++v) ++balance[color[v]];
    for (std::size_t v = 0; v < nh; ++v) --balance[color[ng + v]];
    for (const long long b : balance)
        if (b != 0) return std::nullopt;
    return color;
}

inline bool preserves_structure(const MixedGraph& G, const MixedGraph& H,
                                const std::vector<std::uint32_t>& image) {
    for (const auto& [u, v] : G.edges())
        if (!H.has_edge(image[u], image[v])) return false;
    for (const auto& [u, v] : G.arcs())
        if (!H.has_arc(image[u], image[v])) return false;
    return true;
}

inline bool iso_search(const MixedGraph& G, const MixedGraph& H,
                       std::vector<std::uint32_t>& pins_g, std::vector<std::uint32_t>& pins_h,
                       VertexMap& witness) {
    const auto colors = refine_pair(G, H, pins_g, pins_h);
    if (!colors) return false;
    const std::size_t ng = G.order();

    // collect cells: color -> (G members, H members)
    const std::size_t cells = count_colors(*colors);
    std::vector<std::vector<std::uint32_t>> g_cell(cells), h_cell(cells);
    for (std::size_t v = 0; v < ng; ++v) g_cell[(*colors)[v]].push_back(static_cast<std::uint32_t>(v));
    for (std::size_t v = 0; v < H.order(); ++v)
        h_cell[(*colors)[ng + v]].push_back(static_cast<std::uint32_t>(v));

    // pick the smallest non-singleton cell; discrete coloring forces the map
    std::size_t pick = cells;
    for (std::size_t c = 0; c < cells; ++c) {
        if (g_cell[c].size() < 2) continue;
        if (pick == cells || g_cell[c].size() < g_cell[pick].size()) pick = c;
    }
    if (pick == cells) {
        std::vector<std::uint32_t> image(ng);
        for (std::size_t c = 0; c < cells; ++c)
            if (!g_cell[c].empty()) image[g_cell[c][0]] = h_cell[c][0];
        if (!preserves_structure(G, H, image)) return false;
        witness.image = std::move(image);
        witness.tag = "explicit";
        return true;
    }

    const std::uint32_t g = g_cell[pick][0];  // lowest index in the chosen cell
    for (const std::uint32_t h : h_cell[pick]) {
        pins_g.push_back(g);
        pins_h.push_back(h);
        if (iso_search(G, H, pins_g, pins_h, witness)) return true;
        pins_g.pop_back();
        pins_h.pop_back();
    }
    return false;
}

}  // namespace detail

/// Individualization-refinement backtracking; exhaustive at the few-hundred
/// vertex scale. The witness is re-verified before it is returned.
inline IsoCheck is_isomorphic(const MixedGraph& G, const MixedGraph& H) {
    IsoCheck result;
    if (G.order() != H.order() || G.edge_count() != H.edge_count() ||
        G.arc_count() != H.arc_count())
        return result;
    if (G.order() == 0) {
        result.isomorphic = true;
        result.witness.tag = "explicit";
        return result;
    }
    std::vector<std::uint32_t> pins_g, pins_h;
    result.isomorphic = detail::iso_search(G, H, pins_g, pins_h, result.witness);
    return result;
}

}  // namespace mmg
