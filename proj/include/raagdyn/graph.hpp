#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace raagdyn {

using VertexId = std::uint32_t;

// Sorted, duplicate-free list of vertex ids of some ambient graph.
using VertexSet = std::vector<VertexId>;

enum class InducedKind { Complete, Empty, Mixed };

// Finite simple graph. Vertices are named; ids follow declaration order
// and every deterministic iteration in the library uses that order.
// Names must be nonempty and must not contain whitespace or '^', '-', '#'
// (those characters belong to the word token grammar).
class SimplicialGraph {
public:
    SimplicialGraph(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t vertex_count() const { return names_.size(); }
    const std::vector<std::string>& vertex_names() const { return names_; }
    const std::string& vertex_name(VertexId v) const;

    std::optional<VertexId> find_vertex(std::string_view name) const;
    // Like find_vertex but throws ValidationError for unknown names.
    VertexId require_vertex(std::string_view name) const;

    bool adjacent(VertexId u, VertexId v) const {
        return u != v && adj_[std::size_t(u) * names_.size() + v] != 0;
    }

    // Edges as (min,max) pairs, lexicographically sorted.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    VertexSet all_vertices() const;

    bool operator==(const SimplicialGraph& other) const {
        return names_ == other.names_ && edges_ == other.edges_;
    }

private:
    SimplicialGraph() = default;

    std::vector<std::string> names_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::uint8_t> adj_;

    friend SimplicialGraph induced_subgraph(const SimplicialGraph&, const VertexSet&);
    friend SimplicialGraph complement_graph(const SimplicialGraph&);
};

// Finite directed graph on the vertices of some SimplicialGraph.
// Self-arcs are rejected; antiparallel arc pairs are allowed.
class DirectedGraph {
public:
    DirectedGraph(std::size_t vertex_count, std::vector<std::pair<VertexId, VertexId>> arcs);

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::pair<VertexId, VertexId>>& arcs() const { return arcs_; }
    const std::vector<VertexId>& out(VertexId v) const { return out_[v]; }
    const std::vector<VertexId>& in(VertexId v) const { return in_[v]; }

private:
    std::size_t n_ = 0;
    std::vector<std::pair<VertexId, VertexId>> arcs_; // sorted, unique
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
};

// ---- simplicial graph operations ----

// Subgraph on S keeping exactly the edges of g with both endpoints in S.
// Vertex order of the result follows g's declaration order.
SimplicialGraph induced_subgraph(const SimplicialGraph& g, const VertexSet& s);

SimplicialGraph complement_graph(const SimplicialGraph& g);

struct Neighborhood {
    VertexSet link; // {u : {u,v} in E}
    VertexSet star; // link plus v itself
};
Neighborhood neighborhood(const SimplicialGraph& g, VertexId v);

struct ComplementAnalysis {
    SimplicialGraph complement;
    bool is_join;
    // Present iff is_join: one complement component (smallest, ties broken
    // by least vertex) against the rest; every cross pair is an edge of g.
    std::optional<std::pair<VertexSet, VertexSet>> join_parts;
};
ComplementAnalysis complement_analysis(const SimplicialGraph& g);

// Complete iff every pair in s is an edge, Empty iff none is. Singletons
// classify Complete. Throws ValidationError on empty s.
InducedKind classify_induced(const SimplicialGraph& g, const VertexSet& s);

// True iff every u in s1, v in s2 satisfy u == v or {u,v} in E.
bool supports_commute(const SimplicialGraph& g, const VertexSet& s1, const VertexSet& s2);

// Connected components of the subgraph of g induced on s, in original ids.
// Components are ordered by least member; each is sorted.
std::vector<VertexSet> components_within(const SimplicialGraph& g, const VertexSet& s);

// ---- vertex set helpers ----

bool set_contains(const VertexSet& s, VertexId v);
VertexSet set_sorted_unique(VertexSet s);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_is_subset(const VertexSet& sub, const VertexSet& super);

VertexSet vertices_from_names(const SimplicialGraph& g, const std::vector<std::string>& names);
std::vector<std::string> names_of(const SimplicialGraph& g, const VertexSet& s);

} // namespace raagdyn
