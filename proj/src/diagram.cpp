#include "raagdyn/diagram.hpp"

#include <algorithm>
#include <deque>

#include "raagdyn/errors.hpp"

namespace raagdyn {

AutomorphismDiagram build_diagram(const Automorphism& phi) {
    const auto& g = phi.graph();
    std::vector<std::pair<VertexId, VertexId>> arcs;
    for (VertexId s = 0; s < g.vertex_count(); ++s) {
        for (VertexId t : support_and_length(g, phi.image(s)).support)
            if (t != s)
                arcs.emplace_back(s, t);
    }
    return {DirectedGraph(g.vertex_count(), std::move(arcs))};
}

VertexSet down_set(const AutomorphismDiagram& d, VertexId s) {
    if (s >= d.graph.vertex_count())
        throw ValidationError("vertex id out of range in down_set");
    std::vector<std::uint8_t> seen(d.graph.vertex_count(), 0);
    std::deque<VertexId> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop_front();
        for (VertexId u : d.graph.out(v)) {
            if (!seen[u]) {
                seen[u] = 1;
                queue.push_back(u);
            }
        }
    }
    VertexSet out;
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        if (seen[v])
            out.push_back(v);
    return out;
}

VertexSet trim(const AutomorphismDiagram& d, const VertexSet& s) {
    std::vector<std::uint8_t> alive(d.graph.vertex_count(), 0);
    VertexSet current = set_sorted_unique(s);
    for (VertexId v : current) {
        if (v >= d.graph.vertex_count())
            throw ValidationError("vertex id out of range in trim");
        alive[v] = 1;
    }
    while (true) {
        VertexSet sources;
        for (VertexId v : current) {
            bool has_incoming = false;
            for (VertexId u : d.graph.in(v)) {
                if (alive[u]) {
                    has_incoming = true;
                    break;
                }
            }
            if (!has_incoming)
                sources.push_back(v);
        }
        if (sources.empty())
            return current;
        for (VertexId v : sources)
            alive[v] = 0;
        current = set_difference(current, sources);
    }
}

TerminalPartition terminal_partition_within(const AutomorphismDiagram& d, const VertexSet& s) {
    std::vector<std::uint8_t> alive(d.graph.vertex_count(), 0);
    VertexSet remaining = set_sorted_unique(s);
    for (VertexId v : remaining)
        alive[v] = 1;

    TerminalPartition partition;
    while (!remaining.empty()) {
        VertexSet layer;
        for (VertexId v : remaining) {
            bool terminal = true;
            for (VertexId u : d.graph.out(v)) {
                if (alive[u]) {
                    terminal = false;
                    break;
                }
            }
            if (terminal)
                layer.push_back(v);
        }
        if (layer.empty())
            throw CycleError("the diagram contains a directed cycle; no terminal partition exists");
        for (VertexId v : layer)
            alive[v] = 0;
        remaining = set_difference(remaining, layer);
        partition.layers.push_back(std::move(layer));
    }
    return partition;
}

TerminalPartition terminal_partition(const AutomorphismDiagram& d) {
    VertexSet all(d.graph.vertex_count());
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        all[v] = v;
    return terminal_partition_within(d, all);
}

std::vector<VertexSet> components_within(const AutomorphismDiagram& d, const VertexSet& s) {
    VertexSet set = set_sorted_unique(s);
    std::vector<std::uint8_t> in_set(d.graph.vertex_count(), 0), seen(d.graph.vertex_count(), 0);
    for (VertexId v : set)
        in_set[v] = 1;
    std::vector<VertexSet> comps;
    for (VertexId start : set) {
        if (seen[start])
            continue;
        VertexSet comp;
        std::deque<VertexId> queue{start};
        seen[start] = 1;
        while (!queue.empty()) {
            VertexId v = queue.front();
            queue.pop_front();
            comp.push_back(v);
            for (const auto& neighbors : {d.graph.out(v), d.graph.in(v)}) {
                for (VertexId u : neighbors) {
                    if (in_set[u] && !seen[u]) {
                        seen[u] = 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::vector<VertexSet> components(const AutomorphismDiagram& d) {
    VertexSet all(d.graph.vertex_count());
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        all[v] = v;
    return components_within(d, all);
}

namespace {

// Iterative Tarjan restricted to a vertex subset.
std::vector<VertexSet> sccs_within(const DirectedGraph& g, const VertexSet& s) {
    const std::size_t n = g.vertex_count();
    constexpr std::uint32_t kUnset = 0xffffffff;
    std::vector<std::uint8_t> in_set(n, 0), on_stack(n, 0);
    std::vector<std::uint32_t> index(n, kUnset), low(n, 0);
    for (VertexId v : s)
        in_set[v] = 1;

    std::vector<VertexId> stack;
    std::vector<VertexSet> sccs;
    std::uint32_t counter = 0;

    struct Frame {
        VertexId v;
        std::size_t next_edge;
    };

    for (VertexId root : s) {
        if (index[root] != kUnset)
            continue;
        std::vector<Frame> frames{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = 1;
        while (!frames.empty()) {
            Frame& frame = frames.back();
            const auto& out = g.out(frame.v);
            bool descended = false;
            while (frame.next_edge < out.size()) {
                VertexId u = out[frame.next_edge++];
                if (!in_set[u])
                    continue;
                if (index[u] == kUnset) {
                    index[u] = low[u] = counter++;
                    stack.push_back(u);
                    on_stack[u] = 1;
                    frames.push_back({u, 0});
                    descended = true;
                    break;
                }
                if (on_stack[u])
                    low[frame.v] = std::min(low[frame.v], index[u]);
            }
            if (descended)
                continue;
            if (low[frame.v] == index[frame.v]) {
                VertexSet component;
                while (true) {
                    VertexId u = stack.back();
                    stack.pop_back();
                    on_stack[u] = 0;
                    component.push_back(u);
                    if (u == frame.v)
                        break;
                }
                std::sort(component.begin(), component.end());
                sccs.push_back(std::move(component));
            }
            VertexId finished = frame.v;
            frames.pop_back();
            if (!frames.empty())
                low[frames.back().v] = std::min(low[frames.back().v], low[finished]);
        }
    }
    std::sort(sccs.begin(), sccs.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.front() < b.front(); });
    return sccs;
}

} // namespace

std::vector<VertexSet> cyclic_sccs_within(const AutomorphismDiagram& d, const VertexSet& s) {
    std::vector<VertexSet> out;
    for (auto& scc : sccs_within(d.graph, set_sorted_unique(s))) {
        // no self-arcs, so an internal arc needs at least two vertices
        if (scc.size() >= 2)
            out.push_back(std::move(scc));
    }
    return out;
}

bool CycleClassification::has_violation() const {
    return std::any_of(sccs.begin(), sccs.end(),
                       [](const Scc& s) { return s.kind == CycleKind::Violation; });
}

CycleClassification cycle_analysis(const SimplicialGraph& g, const AutomorphismDiagram& d) {
    if (g.vertex_count() != d.graph.vertex_count())
        throw ValidationError("graph and diagram vertex counts differ");
    VertexSet all(d.graph.vertex_count());
    for (VertexId v = 0; v < d.graph.vertex_count(); ++v)
        all[v] = v;

    CycleClassification result;
    for (auto& vertices : cyclic_sccs_within(d, all)) {
        CycleClassification::Scc entry;
        std::optional<std::pair<VertexId, VertexId>> commuting, noncommuting;
        for (std::size_t i = 0; i < vertices.size() && (!commuting || !noncommuting); ++i) {
            for (std::size_t j = i + 1; j < vertices.size(); ++j) {
                if (g.adjacent(vertices[i], vertices[j])) {
                    if (!commuting)
                        commuting = {vertices[i], vertices[j]};
                } else if (!noncommuting) {
                    noncommuting = {vertices[i], vertices[j]};
                }
            }
        }
        if (commuting && noncommuting) {
            entry.kind = CycleKind::Violation;
            entry.commuting_pair = commuting;
            entry.noncommuting_pair = noncommuting;
        } else if (commuting || vertices.size() == 1) {
            entry.kind = CycleKind::Complete;
        } else {
            entry.kind = CycleKind::Empty;
        }
        entry.vertices = std::move(vertices);
        result.sccs.push_back(std::move(entry));
    }
    return result;
}

std::optional<ImageDecomposition> decompose_image(const Automorphism& phi,
                                                  const TerminalPartition& partition, VertexId s) {
    const auto& g = phi.graph();
    if (s >= g.vertex_count())
        throw ValidationError("vertex id out of range in decompose_image");

    std::size_t layer = partition.layers.size();
    for (std::size_t i = 0; i < partition.layers.size(); ++i) {
        if (set_contains(partition.layers[i], s)) {
            layer = i;
            break;
        }
    }
    if (layer == partition.layers.size())
        throw ValidationError("vertex is not covered by the terminal partition");

    const Word& image = phi.image(s);
    std::size_t occurrence = image.size();
    std::size_t count = 0;
    for (std::size_t i = 0; i < image.size(); ++i) {
        if (image[i].vertex() == s) {
            occurrence = i;
            ++count;
        }
    }
    if (count != 1)
        return std::nullopt;

    ImageDecomposition out;
    out.left = mark_reduced({image.begin(), image.begin() + std::ptrdiff_t(occurrence)});
    out.sign = image[occurrence].sign();
    out.right = mark_reduced({image.begin() + std::ptrdiff_t(occurrence) + 1, image.end()});

    VertexSet lower;
    for (std::size_t i = 0; i < layer; ++i)
        lower = set_union(lower, partition.layers[i]);
    out.supports_in_lower_layers =
        set_is_subset(support_and_length(g, out.left).support, lower) &&
        set_is_subset(support_and_length(g, out.right).support, lower);
    return out;
}

InvariantSubgraphResult invariant_subgraph(const SimplicialGraph& g, const Automorphism& phi,
                                           VertexId starting,
                                           const std::vector<double>* lambda_by_generator) {
    if (!(g == phi.graph()))
        throw ValidationError("graph does not match the automorphism's ambient graph");
    if (starting >= g.vertex_count())
        throw ValidationError("vertex id out of range in invariant_subgraph");

    const AutomorphismDiagram diagram = build_diagram(phi);
    InvariantSubgraphResult result;
    result.starting = starting;
    result.down = down_set(diagram, starting);
    result.trimmed = trim(diagram, result.down);
    if (result.trimmed.empty()) {
        result.kind = SubgraphCase::Acyclic;
        return result;
    }

    const auto comps = components_within(diagram, result.trimmed);
    std::size_t pick = 0;
    if (lambda_by_generator) {
        auto score = [&](const VertexSet& comp) {
            double best = 0.0;
            for (VertexId v : comp)
                best = std::max(best, (*lambda_by_generator)[v]);
            return best;
        };
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (score(comps[i]) > score(comps[pick]))
                pick = i; // ties keep the earlier component (least member first)
    } else {
        auto least_name = [&](const VertexSet& comp) {
            const std::string* best = &g.vertex_name(comp.front());
            for (VertexId v : comp)
                if (g.vertex_name(v) < *best)
                    best = &g.vertex_name(v);
            return *best;
        };
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (least_name(comps[i]) < least_name(comps[pick]))
                pick = i;
    }
    result.delta = comps[pick];

    VertexSet core;
    for (const auto& scc : cyclic_sccs_within(diagram, result.delta))
        core = set_union(core, scc);
    const InducedKind core_kind = classify_induced(g, core);
    if (core_kind == InducedKind::Mixed)
        throw ViolationError(
            "cycle core is neither complete nor empty: the map is not a pure square automorphism");
    if (core_kind == InducedKind::Complete) {
        if (classify_induced(g, result.delta) != InducedKind::Complete)
            throw ViolationError(
                "complete cycle core sits in a non-complete component: the map is not a pure "
                "square automorphism");
        result.kind = SubgraphCase::Complete;
    } else {
        result.kind = SubgraphCase::EmptyCore;
        result.empty_core = std::move(core);
    }
    return result;
}

} // namespace raagdyn
