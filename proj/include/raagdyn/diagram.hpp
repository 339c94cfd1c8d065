#pragma once

#include <optional>
#include <vector>

#include "raagdyn/automorphism.hpp"
#include "raagdyn/graph.hpp"

namespace raagdyn {

// Directed graph on the generators with an arc s -> t exactly when t lies
// in the support of the (reduced) image of s and t != s.
struct AutomorphismDiagram {
    DirectedGraph graph;
};

AutomorphismDiagram build_diagram(const Automorphism& phi);

// All vertices reachable from s by directed paths, including s.
VertexSet down_set(const AutomorphismDiagram& d, VertexId s);

// Repeatedly remove every vertex without an incoming arc inside the current
// induced sub-diagram. Empty result iff the sub-diagram on s is acyclic.
VertexSet trim(const AutomorphismDiagram& d, const VertexSet& s);

struct TerminalPartition {
    std::vector<VertexSet> layers; // layer 0 = vertices without outgoing arcs
    std::size_t height() const { return layers.empty() ? 0 : layers.size() - 1; }
};

// Throws CycleError when the diagram contains a directed cycle.
TerminalPartition terminal_partition(const AutomorphismDiagram& d);
// Same peeling restricted to the sub-diagram induced on s.
TerminalPartition terminal_partition_within(const AutomorphismDiagram& d, const VertexSet& s);

// Connected components of the underlying undirected graph.
std::vector<VertexSet> components(const AutomorphismDiagram& d);

// Strongly connected components of the sub-diagram induced on s that carry
// at least one internal arc, ordered by least member.
std::vector<VertexSet> cyclic_sccs_within(const AutomorphismDiagram& d, const VertexSet& s);

enum class CycleKind { Complete, Empty, Violation };

struct CycleClassification {
    struct Scc {
        VertexSet vertices;
        CycleKind kind;
        // witnesses present for Violation: one commuting and one
        // non-commuting pair inside the component
        std::optional<std::pair<VertexId, VertexId>> commuting_pair;
        std::optional<std::pair<VertexId, VertexId>> noncommuting_pair;
    };
    std::vector<Scc> sccs;

    bool has_violation() const;
};

// Classify every cycle-carrying SCC of d as a complete or empty induced
// subgraph of g. A Mixed classification certifies that the source map was
// not a pure square automorphism.
CycleClassification cycle_analysis(const SimplicialGraph& g, const AutomorphismDiagram& d);

struct ImageDecomposition {
    Word left;  // t0
    int sign;   // exponent of the single s occurrence
    Word right; // t1
    bool supports_in_lower_layers;
};

// Split phi(s) = t0 * s^e * t1 around the unique occurrence of s in the
// reduced image. Returns nullopt when the occurrence count differs from one,
// which cannot happen for pure automorphisms with acyclic diagram.
std::optional<ImageDecomposition> decompose_image(const Automorphism& phi,
                                                  const TerminalPartition& partition, VertexId s);

enum class SubgraphCase { Complete, EmptyCore, Acyclic };

struct InvariantSubgraphResult {
    VertexId starting;
    VertexSet down;    // down-set of the starting generator
    VertexSet trimmed; // stable set after source trimming
    VertexSet delta;   // chosen component of the trimmed sub-diagram
    SubgraphCase kind;
    VertexSet empty_core; // union of cycle vertices, set for EmptyCore
};

// Extract the invariant subgraph that realizes the dilatation. When
// per-generator dilatation estimates are available they steer the component
// choice; otherwise the component holding the lexicographically least vertex
// name is used. Throws ViolationError when the complete-or-empty dichotomy
// fails.
InvariantSubgraphResult invariant_subgraph(const SimplicialGraph& g, const Automorphism& phi,
                                           VertexId starting,
                                           const std::vector<double>* lambda_by_generator = nullptr);

// Components of the directed graph's underlying undirected graph restricted
// to s (shared by invariant_subgraph and the growth report).
std::vector<VertexSet> components_within(const AutomorphismDiagram& d, const VertexSet& s);

} // namespace raagdyn
