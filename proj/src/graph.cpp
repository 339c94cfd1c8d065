#include "raagdyn/graph.hpp"

#include <algorithm>
#include <deque>

#include "raagdyn/errors.hpp"

namespace raagdyn {

namespace {

bool valid_vertex_name(std::string_view name) {
    if (name.empty())
        return false;
    for (char c : name) {
        if (c == '^' || c == '-' || c == '#')
            return false;
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v')
            return false;
    }
    return true;
}

} // namespace

SimplicialGraph::SimplicialGraph(std::vector<std::string> vertices,
                                 const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
    for (const auto& name : names_) {
        if (!valid_vertex_name(name))
            throw ValidationError("invalid vertex name '" + name +
                                  "': names must be nonempty and free of whitespace, '^', '-', '#'");
    }
    for (std::size_t i = 0; i < names_.size(); ++i) {
        for (std::size_t j = i + 1; j < names_.size(); ++j) {
            if (names_[i] == names_[j])
                throw ValidationError("duplicate vertex '" + names_[i] + "'");
        }
    }

    const std::size_t n = names_.size();
    adj_.assign(n * n, 0);
    for (const auto& [a, b] : edges) {
        VertexId u = require_vertex(a);
        VertexId v = require_vertex(b);
        if (u == v)
            throw ValidationError("self-edge at vertex '" + a + "' is not allowed in a simple graph");
        adj_[std::size_t(u) * n + v] = 1;
        adj_[std::size_t(v) * n + u] = 1;
    }
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v)
            if (adj_[std::size_t(u) * n + v])
                edges_.emplace_back(u, v);
}

const std::string& SimplicialGraph::vertex_name(VertexId v) const {
    if (v >= names_.size())
        throw ValidationError("vertex id out of range");
    return names_[v];
}

std::optional<VertexId> SimplicialGraph::find_vertex(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return VertexId(i);
    return std::nullopt;
}

VertexId SimplicialGraph::require_vertex(std::string_view name) const {
    auto id = find_vertex(name);
    if (!id)
        throw ValidationError("unknown vertex '" + std::string(name) + "'");
    return *id;
}

VertexSet SimplicialGraph::all_vertices() const {
    VertexSet s(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i)
        s[i] = VertexId(i);
    return s;
}

DirectedGraph::DirectedGraph(std::size_t vertex_count,
                             std::vector<std::pair<VertexId, VertexId>> arcs)
    : n_(vertex_count), arcs_(std::move(arcs)) {
    for (const auto& [u, v] : arcs_) {
        if (u >= n_ || v >= n_)
            throw ValidationError("arc endpoint out of range");
        if (u == v)
            throw ValidationError("self-arcs are not allowed");
    }
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (const auto& [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
}

SimplicialGraph induced_subgraph(const SimplicialGraph& g, const VertexSet& s) {
    VertexSet keep = set_sorted_unique(s);
    for (VertexId v : keep)
        if (v >= g.vertex_count())
            throw ValidationError("vertex id out of range in induced_subgraph");

    SimplicialGraph out;
    const std::size_t m = keep.size();
    out.names_.reserve(m);
    for (VertexId v : keep)
        out.names_.push_back(g.vertex_name(v));
    out.adj_.assign(m * m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            if (g.adjacent(keep[i], keep[j])) {
                out.adj_[i * m + j] = 1;
                out.adj_[j * m + i] = 1;
                out.edges_.emplace_back(VertexId(i), VertexId(j));
            }
        }
    }
    return out;
}

SimplicialGraph complement_graph(const SimplicialGraph& g) {
    SimplicialGraph out;
    const std::size_t n = g.vertex_count();
    out.names_ = g.vertex_names();
    out.adj_.assign(n * n, 0);
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) {
            if (!g.adjacent(u, v)) {
                out.adj_[std::size_t(u) * n + v] = 1;
                out.adj_[std::size_t(v) * n + u] = 1;
                out.edges_.emplace_back(u, v);
            }
        }
    }
    return out;
}

Neighborhood neighborhood(const SimplicialGraph& g, VertexId v) {
    if (v >= g.vertex_count())
        throw ValidationError("vertex id out of range in neighborhood");
    Neighborhood nb;
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        if (g.adjacent(u, v))
            nb.link.push_back(u);
    nb.star = nb.link;
    nb.star.insert(std::lower_bound(nb.star.begin(), nb.star.end(), v), v);
    return nb;
}

ComplementAnalysis complement_analysis(const SimplicialGraph& g) {
    ComplementAnalysis result{complement_graph(g), false, std::nullopt};
    auto comps = components_within(result.complement, result.complement.all_vertices());
    if (comps.size() >= 2) {
        result.is_join = true;
        // smallest component first; components_within orders by least member,
        // which breaks ties deterministically
        std::size_t pick = 0;
        for (std::size_t i = 1; i < comps.size(); ++i)
            if (comps[i].size() < comps[pick].size())
                pick = i;
        VertexSet rest;
        for (std::size_t i = 0; i < comps.size(); ++i)
            if (i != pick)
                rest = set_union(rest, comps[i]);
        result.join_parts = std::make_pair(comps[pick], rest);
    }
    return result;
}

InducedKind classify_induced(const SimplicialGraph& g, const VertexSet& s) {
    VertexSet set = set_sorted_unique(s);
    if (set.empty())
        throw ValidationError("classify_induced requires a nonempty vertex set");
    bool all = true, none = true;
    for (std::size_t i = 0; i < set.size(); ++i) {
        for (std::size_t j = i + 1; j < set.size(); ++j) {
            if (g.adjacent(set[i], set[j]))
                none = false;
            else
                all = false;
        }
    }
    if (all)
        return InducedKind::Complete;
    if (none)
        return InducedKind::Empty;
    return InducedKind::Mixed;
}

bool supports_commute(const SimplicialGraph& g, const VertexSet& s1, const VertexSet& s2) {
    for (VertexId u : s1)
        for (VertexId v : s2)
            if (u != v && !g.adjacent(u, v))
                return false;
    return true;
}

std::vector<VertexSet> components_within(const SimplicialGraph& g, const VertexSet& s) {
    VertexSet set = set_sorted_unique(s);
    std::vector<std::uint8_t> in_set(g.vertex_count(), 0), seen(g.vertex_count(), 0);
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
            for (VertexId u = 0; u < g.vertex_count(); ++u) {
                if (in_set[u] && !seen[u] && g.adjacent(u, v)) {
                    seen[u] = 1;
                    queue.push_back(u);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_sorted_unique(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool set_is_subset(const VertexSet& sub, const VertexSet& super) {
    return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

VertexSet vertices_from_names(const SimplicialGraph& g, const std::vector<std::string>& names) {
    VertexSet s;
    s.reserve(names.size());
    for (const auto& name : names)
        s.push_back(g.require_vertex(name));
    return set_sorted_unique(s);
}

std::vector<std::string> names_of(const SimplicialGraph& g, const VertexSet& s) {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (VertexId v : s)
        out.push_back(g.vertex_name(v));
    return out;
}

} // namespace raagdyn
