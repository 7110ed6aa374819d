#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "mmg/error.hpp"
#include "mmg/moore.hpp"

namespace mmg {

/// Vertices are lines [m,b], points (x,y) (field elements by canonical
/// encoding) or bare integer nodes. Identity is structural; the three
/// namespaces never collide.
struct Vertex {
    enum class Kind : std::uint8_t { Line = 0, Point = 1, Node = 2 };

    Kind kind = Kind::Node;
    std::uint32_t a = 0;
    std::uint32_t b = 0;

    static Vertex line(std::uint32_t m, std::uint32_t b) { return {Kind::Line, m, b}; }
    static Vertex point(std::uint32_t x, std::uint32_t y) { return {Kind::Point, x, y}; }
    static Vertex node(std::uint32_t id) { return {Kind::Node, id, 0}; }

    bool is_line() const { return kind == Kind::Line; }
    bool is_point() const { return kind == Kind::Point; }

    std::string label() const {
        switch (kind) {
            case Kind::Line: return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
            case Kind::Point: return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
            default: return std::to_string(a);
        }
    }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

struct VertexHash {
    std::size_t operator()(const Vertex& v) const noexcept {
        std::uint64_t h = (static_cast<std::uint64_t>(v.kind) << 62) ^
                          (static_cast<std::uint64_t>(v.a) << 31) ^ v.b;
        return std::hash<std::uint64_t>{}(h);
    }
};

struct DegreeTriple {
    std::uint32_t r = 0;      // edge-degree
    std::uint32_t z_out = 0;  // out-arc degree
    std::uint32_t z_in = 0;   // in-arc degree

    friend bool operator==(const DegreeTriple&, const DegreeTriple&) = default;
};

struct MooreCheck {
    std::optional<std::pair<std::uint32_t, std::uint32_t>> regular;  // (z, r)
    std::optional<int> diameter;                                     // nullopt = infinite
    std::uint64_t order = 0;
    long long bound = 0;  // (r+z)^2 + z + 1 when regular
    bool is_moore = false;
};

/// A finite mixed graph: one vertex list, a set of undirected edges and a set
/// of arcs, disjoint as vertex pairs, with no loops. Explicit digons (both
/// (u,v) and (v,u) as arcs) are allowed; an arc parallel to an edge is not.
/// Build with add_*; treat as immutable afterwards - every metric is a const
/// read and safe to run concurrently.
class MixedGraph {
public:
    std::uint32_t add_vertex(const Vertex& v) {
        if (index_.contains(v)) fail("DuplicateVertex", "vertex " + v.label() + " already present");
        const auto i = static_cast<std::uint32_t>(vertices_.size());
        vertices_.push_back(v);
        index_.emplace(v, i);
        edge_adj_.emplace_back();
        out_adj_.emplace_back();
        in_adj_.emplace_back();
        return i;
    }

    /// Set semantics: adding an existing edge is a no-op. Rejects loops and
    /// pairs already carrying an arc in either direction.
    void add_edge(std::uint32_t i, std::uint32_t j) {
        check_index(i);
        check_index(j);
        if (i == j) fail("SelfLoop", "edge {" + std::to_string(i) + "," + std::to_string(j) + "}");
        if (i > j) std::swap(i, j);
        if (edge_keys_.contains(pair_key(i, j))) return;
        if (arc_keys_.contains(pair_key(i, j)) || arc_keys_.contains(pair_key(j, i)))
            fail("EdgeArcConflict",
                 "pair {" + std::to_string(i) + "," + std::to_string(j) + "} already has an arc");
        edge_keys_.insert(pair_key(i, j));
        edges_.emplace_back(i, j);
        edge_adj_[i].push_back(j);
        edge_adj_[j].push_back(i);
    }

    void add_arc(std::uint32_t i, std::uint32_t j) {
        check_index(i);
        check_index(j);
        if (i == j) fail("SelfLoop", "arc (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (arc_keys_.contains(pair_key(i, j))) return;
        const auto e = i < j ? pair_key(i, j) : pair_key(j, i);
        if (edge_keys_.contains(e))
            fail("EdgeArcConflict",
                 "pair {" + std::to_string(i) + "," + std::to_string(j) + "} already has an edge");
        arc_keys_.insert(pair_key(i, j));
        arcs_.emplace_back(i, j);
        out_adj_[i].push_back(j);
        in_adj_[j].push_back(i);
    }

    std::size_t order() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::size_t arc_count() const { return arcs_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::uint32_t i) const {
        check_index(i);
        return vertices_[i];
    }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges() const { return edges_; }
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& arcs() const { return arcs_; }

    std::optional<std::uint32_t> find(const Vertex& v) const {
        const auto it = index_.find(v);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::uint32_t index_of(const Vertex& v) const {
        const auto i = find(v);
        if (!i) fail("VertexNotFound", "no vertex " + v.label());
        return *i;
    }

    bool has_edge(std::uint32_t i, std::uint32_t j) const {
        if (i == j) return false;
        if (i > j) std::swap(i, j);
        return edge_keys_.contains(pair_key(i, j));
    }

    bool has_arc(std::uint32_t i, std::uint32_t j) const {
        return arc_keys_.contains(pair_key(i, j));
    }

    std::span<const std::uint32_t> edge_neighbors(std::uint32_t i) const {
        check_index(i);
        return edge_adj_[i];
    }
    std::span<const std::uint32_t> out_neighbors(std::uint32_t i) const {
        check_index(i);
        return out_adj_[i];
    }
    std::span<const std::uint32_t> in_neighbors(std::uint32_t i) const {
        check_index(i);
        return in_adj_[i];
    }

    DegreeTriple degrees(std::uint32_t i) const {
        check_index(i);
        return {static_cast<std::uint32_t>(edge_adj_[i].size()),
                static_cast<std::uint32_t>(out_adj_[i].size()),
                static_cast<std::uint32_t>(in_adj_[i].size())};
    }

    DegreeTriple degrees(const Vertex& v) const { return degrees(index_of(v)); }

    /// (z, r) when every vertex has edge-degree r and z arcs both out and in.
    std::optional<std::pair<std::uint32_t, std::uint32_t>> mixed_regular() const {
        if (vertices_.empty()) return std::nullopt;
        const DegreeTriple d0 = degrees(0);
        if (d0.z_out != d0.z_in) return std::nullopt;
        for (std::uint32_t i = 1; i < vertices_.size(); ++i)
            if (degrees(i) != d0) return std::nullopt;
        return std::make_pair(d0.z_out, d0.r);
    }

    /// BFS distances under mixed reachability: edges travel both ways, arcs
    /// tail to head only. -1 marks unreachable vertices.
    std::vector<int> distances_from(std::uint32_t source) const {
        check_index(source);
        std::vector<int> dist(vertices_.size(), -1);
        std::vector<std::uint32_t> queue;
        queue.reserve(vertices_.size());
        dist[source] = 0;
        queue.push_back(source);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const std::uint32_t u = queue[head];
            const int du = dist[u];
            for (const std::uint32_t v : edge_adj_[u])
                if (dist[v] < 0) {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
            for (const std::uint32_t v : out_adj_[u])
                if (dist[v] < 0) {
                    dist[v] = du + 1;
                    queue.push_back(v);
                }
        }
        return dist;
    }

    std::optional<int> distance(std::uint32_t u, std::uint32_t v) const {
        check_index(v);
        const int d = distances_from(u)[v];
        if (d < 0) return std::nullopt;
        return d;
    }

    std::optional<int> distance(const Vertex& u, const Vertex& v) const {
        return distance(index_of(u), index_of(v));
    }

    /// Max distance over all ordered pairs; nullopt when some pair is
    /// unreachable. Sources are BFS-independent, so they can be split across
    /// threads; the result does not depend on the worker count.
    std::optional<int> diameter(unsigned threads = 1) const {
        const std::size_t n = vertices_.size();
        if (n <= 1) return 0;
        if (threads <= 1) {
            int best = 0;
            for (std::uint32_t s = 0; s < n; ++s) {
                const auto dist = distances_from(s);
                for (const int d : dist) {
                    if (d < 0) return std::nullopt;
                    best = std::max(best, d);
                }
            }
            return best;
        }
        const unsigned workers = std::min<unsigned>(threads, static_cast<unsigned>(n));
        std::vector<int> local_max(workers, 0);
        std::vector<char> local_disconnected(workers, 0);
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint32_t s = w; s < n; s += workers) {
                    const auto dist = distances_from(s);
                    for (const int d : dist) {
                        if (d < 0) {
                            local_disconnected[w] = 1;
                            return;
                        }
                        local_max[w] = std::max(local_max[w], d);
                    }
                }
            });
        }
        for (auto& th : pool) th.join();
        int best = 0;
        for (unsigned w = 0; w < workers; ++w) {
            if (local_disconnected[w]) return std::nullopt;
            best = std::max(best, local_max[w]);
        }
        return best;
    }

    /// Shortest cycle length of the edge-subgraph (arcs ignored); nullopt
    /// when it is a forest.
    std::optional<int> undirected_girth() const {
        if (edges_.empty()) return std::nullopt;
        const std::size_t n = vertices_.size();
        int best = std::numeric_limits<int>::max();
        std::vector<int> dist(n);
        std::vector<std::uint32_t> parent(n), queue;
        queue.reserve(n);
        for (std::uint32_t s = 0; s < n; ++s) {
            std::fill(dist.begin(), dist.end(), -1);
            queue.clear();
            dist[s] = 0;
            parent[s] = s;
            queue.push_back(s);
            for (std::size_t head = 0; head < queue.size(); ++head) {
                const std::uint32_t u = queue[head];
                if (2 * dist[u] >= best) break;  // no shorter cycle reachable from here
                for (const std::uint32_t v : edge_adj_[u]) {
                    if (dist[v] < 0) {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if (v != parent[u]) {
                        best = std::min(best, dist[u] + dist[v] + 1);
                    }
                }
            }
        }
        if (best == std::numeric_limits<int>::max()) return std::nullopt;
        return best;
    }

    /// Mixed-regularity, diameter and the order test against (r+z)^2 + z + 1,
    /// bundled so callers can report which part failed.
    MooreCheck moore_check() const {
        MooreCheck check;
        check.order = vertices_.size();
        check.regular = mixed_regular();
        check.diameter = diameter();
        if (check.regular) {
            const auto [z, r] = *check.regular;
            if (z + r >= 1) {
                check.bound = moore::mixed_moore_bound(z, r);
                check.is_moore = check.diameter.has_value() && *check.diameter <= 2 &&
                                 static_cast<long long>(check.order) == check.bound;
            }
        }
        return check;
    }

    bool is_mixed_moore() const { return moore_check().is_moore; }

    /// True when no unordered pair carries both an edge and an arc.
    bool edges_arcs_disjoint() const {
        for (const auto& [u, v] : edges_)
            if (arc_keys_.contains(pair_key(u, v)) || arc_keys_.contains(pair_key(v, u)))
                return false;
        return true;
    }

    /// Rebuilds the three adjacency lists from the edge and arc sets and
    /// compares with the incrementally maintained ones.
    bool adjacency_consistent() const {
        const std::size_t n = vertices_.size();
        std::vector<std::vector<std::uint32_t>> e(n), o(n), in(n);
        for (const auto& [u, v] : edges_) {
            e[u].push_back(v);
            e[v].push_back(u);
        }
        for (const auto& [u, v] : arcs_) {
            o[u].push_back(v);
            in[v].push_back(u);
        }
        const auto same = [](std::vector<std::uint32_t> a, std::vector<std::uint32_t> b) {
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            return a == b;
        };
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!same(e[i], edge_adj_[i]) || !same(o[i], out_adj_[i]) || !same(in[i], in_adj_[i]))
                return false;
        }
        return true;
    }

    friend bool operator==(const MixedGraph& a, const MixedGraph& b) {
        return a.vertices_ == b.vertices_ && a.edges_ == b.edges_ && a.arcs_ == b.arcs_;
    }

private:
    static std::uint64_t pair_key(std::uint32_t i, std::uint32_t j) {
        return (static_cast<std::uint64_t>(i) << 32) | j;
    }

    void check_index(std::uint32_t i) const {
        if (i >= vertices_.size())
            fail("VertexNotFound", "index " + std::to_string(i) + " out of range");
    }

    std::vector<Vertex> vertices_;
    std::unordered_map<Vertex, std::uint32_t, VertexHash> index_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges_;  // i < j, insertion order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> arcs_;   // (tail, head), insertion order
    std::unordered_set<std::uint64_t> edge_keys_;
    std::unordered_set<std::uint64_t> arc_keys_;
    std::vector<std::vector<std::uint32_t>> edge_adj_;
    std::vector<std::vector<std::uint32_t>> out_adj_;
    std::vector<std::vector<std::uint32_t>> in_adj_;
};

}  // namespace mmg
