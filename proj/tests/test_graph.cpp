#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "raagdyn/errors.hpp"
#include "raagdyn/graph.hpp"

using namespace raagdyn;

namespace {

VertexSet ids(const SimplicialGraph& g, const std::vector<std::string>& names) {
    return vertices_from_names(g, names);
}

SimplicialGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices) {
    std::uniform_int_distribution<std::size_t> size(1, max_vertices);
    const std::size_t n = size(rng);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (rng() & 1)
                edges.emplace_back(names[i], names[j]);
    return SimplicialGraph(std::move(names), edges);
}

} // namespace

TEST_CASE("graph construction validates input") {
    CHECK_THROWS_AS(SimplicialGraph({"a", "a"}, {}), ValidationError);
    CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{"a", "a"}}), ValidationError);
    CHECK_THROWS_AS(SimplicialGraph({"a", "b"}, {{"a", "c"}}), ValidationError);
    CHECK_THROWS_AS(SimplicialGraph({"a^2"}, {}), ValidationError);
    CHECK_THROWS_AS(SimplicialGraph({"a-b"}, {}), ValidationError);
    CHECK_THROWS_AS(SimplicialGraph({"a #"}, {}), ValidationError);
    CHECK_THROWS_AS(SimplicialGraph({""}, {}), ValidationError);
    // duplicate edges collapse
    SimplicialGraph g({"a", "b"}, {{"a", "b"}, {"b", "a"}});
    CHECK(g.edges().size() == 1);
}

TEST_CASE("induced subgraph") {
    const auto gp = fixtures::graph_p();
    const auto no_edges = induced_subgraph(gp, ids(gp, {"a", "b"}));
    CHECK(no_edges.vertex_count() == 2);
    CHECK(no_edges.edges().empty());

    const auto whole = induced_subgraph(gp, gp.all_vertices());
    CHECK(whole == gp);

    const auto one_edge = induced_subgraph(gp, ids(gp, {"a", "c"}));
    CHECK(one_edge.edges().size() == 1);
    CHECK(one_edge.adjacent(0, 1));

    CHECK_THROWS_AS(induced_subgraph(gp, VertexSet{9}), ValidationError);
}

TEST_CASE("neighborhood link and star") {
    const auto gp = fixtures::graph_p();
    const auto nb = neighborhood(gp, gp.require_vertex("c"));
    CHECK(names_of(gp, nb.link) == std::vector<std::string>{"a", "b"});
    CHECK(names_of(gp, nb.star) == std::vector<std::string>{"a", "b", "c"});

    const auto e3 = fixtures::edgeless3();
    const auto isolated = neighborhood(e3, 0);
    CHECK(isolated.link.empty());
    CHECK(names_of(e3, isolated.star) == std::vector<std::string>{"a"});

    const auto z2 = fixtures::z2();
    const auto pair = neighborhood(z2, 0);
    CHECK(names_of(z2, pair.link) == std::vector<std::string>{"b"});
    CHECK(names_of(z2, pair.star) == std::vector<std::string>{"a", "b"});

    CHECK_THROWS_AS(neighborhood(gp, 7), ValidationError);
}

TEST_CASE("complement analysis and joins") {
    const auto z2 = fixtures::z2();
    const auto join = complement_analysis(z2);
    CHECK(join.complement.edges().empty());
    CHECK(join.is_join);
    REQUIRE(join.join_parts.has_value());
    CHECK(names_of(z2, join.join_parts->first) == std::vector<std::string>{"a"});
    CHECK(names_of(z2, join.join_parts->second) == std::vector<std::string>{"b"});

    const auto f2 = fixtures::free2();
    const auto free_case = complement_analysis(f2);
    CHECK(free_case.complement.edges().size() == 1);
    CHECK_FALSE(free_case.is_join);
    CHECK_FALSE(free_case.join_parts.has_value());

    const auto gp = fixtures::graph_p();
    const auto gp_case = complement_analysis(gp);
    CHECK(gp_case.complement.edges().size() == 1);
    CHECK(gp_case.is_join);
    REQUIRE(gp_case.join_parts.has_value());
    CHECK(names_of(gp, gp_case.join_parts->first) == std::vector<std::string>{"c"});
    CHECK(names_of(gp, gp_case.join_parts->second) == std::vector<std::string>{"a", "b"});
}

TEST_CASE("classify induced subgraphs") {
    const auto gp = fixtures::graph_p();
    CHECK(classify_induced(gp, ids(gp, {"a", "b"})) == InducedKind::Empty);
    CHECK(classify_induced(gp, ids(gp, {"a", "b", "c"})) == InducedKind::Mixed);
    CHECK(classify_induced(gp, ids(gp, {"a"})) == InducedKind::Complete);

    const auto z2 = fixtures::z2();
    CHECK(classify_induced(z2, ids(z2, {"a", "b"})) == InducedKind::Complete);

    CHECK_THROWS_AS(classify_induced(gp, {}), ValidationError);
}

TEST_CASE("supports commute") {
    const auto gp = fixtures::graph_p();
    CHECK(supports_commute(gp, ids(gp, {"a", "b"}), ids(gp, {"c"})));
    CHECK(supports_commute(gp, ids(gp, {"a", "b"}), {}));
    // shared generator is fine
    CHECK(supports_commute(gp, ids(gp, {"a", "c"}), ids(gp, {"a", "c"})));

    const auto ns = fixtures::ns_graph();
    CHECK_FALSE(supports_commute(ns, ids(ns, {"a", "c"}), ids(ns, {"b", "c"})));
}

TEST_CASE("graph properties on random instances") {
    std::mt19937_64 rng(20240811);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = random_graph(rng, 7);

        // complement is an involution
        CHECK(complement_graph(complement_graph(g)) == g);

        const auto analysis = complement_analysis(g);
        const auto comps = components_within(analysis.complement, g.all_vertices());
        CHECK(analysis.is_join == (comps.size() >= 2));
        if (analysis.is_join) {
            for (VertexId u : analysis.join_parts->first)
                for (VertexId v : analysis.join_parts->second)
                    CHECK(g.adjacent(u, v));
        }

        // random subset: Complete iff the subset commutes with itself
        VertexSet subset;
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (rng() & 1)
                subset.push_back(v);
        if (!subset.empty()) {
            CHECK((classify_induced(g, subset) == InducedKind::Complete) ==
                  supports_commute(g, subset, subset));
            const auto once = induced_subgraph(g, subset);
            CHECK(induced_subgraph(once, once.all_vertices()) == once);
        }
    }
}
