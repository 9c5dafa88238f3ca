#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scycle {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

struct Edge {
    VertexId u = -1;
    VertexId v = -1;
    bool is_loop() const { return u == v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

// Vertex and edge ids are never renumbered; removed slots are recycled by add_vertex.
class RootedGraph {
public:
    VertexId add_vertex(std::string name);
    EdgeId add_edge(VertexId u, VertexId v);
    void set_root(VertexId v, bool root = true);

    std::size_t vertex_bound() const { return names_.size(); }
    std::size_t edge_bound() const { return edges_.size(); }
    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edge_count_; }

    bool has_vertex(VertexId v) const;
    bool has_edge(EdgeId e) const;
    const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
    std::span<const EdgeId> incident(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool is_root(VertexId v) const { return has_vertex(v) && root_[static_cast<std::size_t>(v)]; }
    const std::string& name(VertexId v) const { return names_[static_cast<std::size_t>(v)]; }

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edges() const;
    std::vector<VertexId> roots() const;
    std::optional<VertexId> find(std::string_view name) const;
    VertexId at(std::string_view name) const;

    // edges joining u and v (for u == v, the loops at u), ascending
    std::vector<EdgeId> edges_between(VertexId u, VertexId v) const;

    void remove_vertex(VertexId v);

private:
    void check_vertex(VertexId v) const;

    std::vector<std::string> names_;
    std::vector<char> alive_;
    std::vector<char> root_;
    std::vector<std::vector<EdgeId>> adj_;
    std::vector<Edge> edges_;
    std::vector<char> edge_alive_;
    std::vector<VertexId> free_;
    std::unordered_map<std::string, VertexId> by_name_;
    std::size_t vertex_count_ = 0;
    std::size_t edge_count_ = 0;
};

struct Path {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
    std::size_t length() const { return edges.size(); }
    bool closed() const { return vertices.size() > 1 && vertices.front() == vertices.back(); }
    Path reversed() const;
    Path slice(std::size_t from, std::size_t to) const;  // vertices[from..to]
    Path joined(const Path& tail) const;                // this.back() == tail.front()
    std::optional<std::size_t> position(VertexId v) const;
};

struct Cycle {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;  // edges[i] joins vertices[i] and vertices[i+1 mod k]

    std::size_t length() const { return edges.size(); }
    bool contains(VertexId v) const;
};

Cycle close_path(const Path& p, EdgeId closing);
Cycle closed_path_to_cycle(const Path& p);

// Vertex and edge membership masks sized to a graph's id bounds.
struct Subgraph {
    std::vector<char> vertex;
    std::vector<char> edge;

    static Subgraph empty_of(const RootedGraph& g);
    static Subgraph whole(const RootedGraph& g);
    bool has_vertex(VertexId v) const { return vertex[static_cast<std::size_t>(v)] != 0; }
    bool has_edge(EdgeId e) const { return edge[static_cast<std::size_t>(e)] != 0; }
    void add_path(const Path& p);
    void add_cycle(const Cycle& c);
    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edges() const;
};

using VertexMask = std::vector<char>;
VertexMask mask_of(const RootedGraph& g, std::span<const VertexId> vs);

// A restriction of a graph: blocked vertices and, optionally, an allowed-edge set.
struct GraphView {
    const RootedGraph& g;
    const VertexMask* blocked = nullptr;
    const std::vector<char>* allowed_edges = nullptr;

    bool vertex_ok(VertexId v) const
    {
        return g.has_vertex(v) && !(blocked && (*blocked)[static_cast<std::size_t>(v)]);
    }
    bool edge_ok(EdgeId e) const
    {
        if (allowed_edges && !(*allowed_edges)[static_cast<std::size_t>(e)])
            return false;
        const Edge& ed = g.edge(e);
        return vertex_ok(ed.u) && vertex_ok(ed.v);
    }
};

RootedGraph delete_vertices(const RootedGraph& g, std::span<const VertexId> xs);

struct Block {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    bool has_cycle() const { return edges.size() >= 2 || (edges.size() == 1 && vertices.size() == 1); }
};

std::vector<Block> blocks(const GraphView& view);
std::vector<Block> blocks(const RootedGraph& g);

std::optional<Path> shortest_path(const GraphView& view, VertexId u, VertexId v, EdgeId skip_edge = -1);
std::optional<Path> shortest_path(const RootedGraph& g, VertexId u, VertexId v,
                                  std::span<const VertexId> forbidden = {});

// component label per vertex (-1 for vertices outside the view)
std::vector<int> components(const GraphView& view);

// any cycle in the view, or none when it is a forest
std::optional<Cycle> find_cycle(const GraphView& view);

bool is_valid_path(const RootedGraph& g, const Path& p);
bool is_valid_cycle(const RootedGraph& g, const Cycle& c);

}  // namespace scycle
