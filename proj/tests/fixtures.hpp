#pragma once

#include "raagdyn/automorphism.hpp"
#include "raagdyn/word.hpp"

// Shared test inputs. Each builder returns a fresh value so tests can
// mutate freely.
namespace fixtures {

using raagdyn::Automorphism;
using raagdyn::SimplicialGraph;
using raagdyn::parse_word;

// triangle-free join: a and b both commute with c only
inline SimplicialGraph graph_p() { return SimplicialGraph({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}}); }

inline Automorphism phi_p() {
    auto g = graph_p();
    return Automorphism::from_images(
        g,
        {parse_word(g, "a b a^-1"), parse_word(g, "b a^-1"), parse_word(g, "c")},
        std::vector<raagdyn::Word>{parse_word(g, "a b^-1"), parse_word(g, "b a b^-1"),
                                   parse_word(g, "c")});
}

inline SimplicialGraph free2() { return SimplicialGraph({"a", "b"}, {}); }

// golden-mean substitution
inline Automorphism sigma() {
    auto g = free2();
    return Automorphism::from_images(
        g, {parse_word(g, "a b"), parse_word(g, "a")},
        std::vector<raagdyn::Word>{parse_word(g, "b"), parse_word(g, "b^-1 a")});
}

inline Automorphism psi() {
    auto s = sigma();
    return s.compose(s);
}

inline SimplicialGraph z2() { return SimplicialGraph({"a", "b"}, {{"a", "b"}}); }

inline Automorphism tau() {
    auto g = z2();
    return Automorphism::from_images(
        g, {parse_word(g, "a b"), parse_word(g, "a b^2")},
        std::vector<raagdyn::Word>{parse_word(g, "a^2 b^-1"), parse_word(g, "a^-1 b")});
}

inline SimplicialGraph edgeless3() { return SimplicialGraph({"a", "b", "c"}, {}); }

inline Automorphism rho() {
    auto g = edgeless3();
    return Automorphism::from_images(g, {parse_word(g, "a b"), parse_word(g, "b c"),
                                         parse_word(g, "c")});
}

inline SimplicialGraph tree3() { return SimplicialGraph({"s", "a", "b"}, {}); }

inline Automorphism chi() {
    auto g = tree3();
    return Automorphism::from_images(g, {parse_word(g, "s a"), parse_word(g, "a b a"),
                                         parse_word(g, "a b")});
}

inline SimplicialGraph ns_graph() { return SimplicialGraph({"a", "b", "c"}, {{"a", "b"}}); }

inline Automorphism pi() {
    auto g = ns_graph();
    return Automorphism::from_images(g, {parse_word(g, "c a c^-1"), parse_word(g, "c b c^-1"),
                                         parse_word(g, "c")});
}

} // namespace fixtures
