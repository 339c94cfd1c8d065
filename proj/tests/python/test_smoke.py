"""Smoke tests for the python bindings."""

import math

import pytest

import raagdyn
from raagdyn import Automorphism, SimplicialGraph


def graph_p():
    return SimplicialGraph(["a", "b", "c"], [("a", "c"), ("b", "c")])


def phi_p():
    return Automorphism.from_images(
        graph_p(), {"a": "a b a^-1", "b": "b a^-1", "c": "c"}
    )


def test_graph_basics():
    g = graph_p()
    assert g.vertices == ["a", "b", "c"]
    assert g.adjacent("a", "c")
    assert not g.adjacent("a", "b")
    link, star = g.neighborhood("c")
    assert link == ["a", "b"]
    assert star == ["a", "b", "c"]
    assert g.classify_induced(["a", "b"]) == "empty"
    analysis = g.complement_analysis()
    assert analysis["is_join"]
    assert analysis["join_parts"] == (["c"], ["a", "b"])


def test_word_operations():
    g = graph_p()
    assert raagdyn.reduce_word(g, "a c a^-1") == "c"
    assert raagdyn.reduce_word(g, "a a^-1") == "1"
    assert raagdyn.words_equal(g, "a c", "c a")
    assert not raagdyn.words_equal(g, "a b", "b a")
    core, _conjugator = raagdyn.cyclically_reduce(g, "c a b c^-1 a^-1")
    assert core == "b"
    support, length = raagdyn.support_and_length(g, "a b a^-1")
    assert support == ["a", "b"]
    assert length == 3


def test_paper_example_pipeline():
    phi = phi_p()
    assert raagdyn.is_square(phi)["square"]
    purity = raagdyn.is_pure(phi)
    assert not purity["pure"]
    assert purity["support_ok"] == {"a": True, "b": True, "c": True}
    assert purity["cyclically_reduced_ok"]["a"] is False
    assert raagdyn.diagram_arcs(phi) == [("a", "b"), ("b", "a")]
    assert raagdyn.diagram_components(phi) == [["a", "b"], ["c"]]
    cycles = raagdyn.cycle_analysis(phi)
    assert cycles == [{"vertices": ["a", "b"], "kind": "empty"}]


def test_fibonacci_orbit():
    f2 = SimplicialGraph(["a", "b"])
    sigma = Automorphism.from_images(f2, {"a": "a b", "b": "a"})
    orbit = raagdyn.iterate_lengths(sigma, k_max=10)
    assert orbit["a"]["lengths"] == [1, 2, 3, 5, 8, 13, 21, 34, 55, 89, 144]
    n, purity, cube = raagdyn.pure_power(sigma)
    assert n == 3
    assert purity["pure"]
    assert cube.images["a"] == "a b a^2 b"


def test_growth_classification():
    e3 = SimplicialGraph(["a", "b", "c"])
    rho = Automorphism.from_images(e3, {"a": "a b", "b": "b c", "c": "c"})
    report = raagdyn.classify_growth(rho, k_max=50)
    assert report["classification"] == "polynomial-by-theorem"
    assert report["degree_bound"] == 2

    f2 = SimplicialGraph(["a", "b"])
    psi = Automorphism.from_images(f2, {"a": "a b a", "b": "a b"})
    growth = raagdyn.classify_growth(psi, k_max=20)
    assert growth["classification"] == "per-generator-mixed"
    assert math.isclose(
        growth["lambda_hat"], 2 * math.log((1 + math.sqrt(5)) / 2), abs_tol=0.01
    )
    assert growth["invariant_subgraph"]["case"] == "empty-core"
    assert growth["invariant_subgraph"]["delta"] == ["a", "b"]


def test_generators():
    ns = SimplicialGraph(["a", "b", "c"], [("a", "b")])
    pi = Automorphism.from_generators(
        ns, [{"type": "partial_conjugation", "component": ["a", "b"], "w": "c"}]
    )
    assert pi.images == {"a": "c a c^-1", "b": "c b c^-1", "c": "c"}
    assert pi.verified
    assert not raagdyn.is_square(pi)["square"]

    z2 = SimplicialGraph(["a", "b"], [("a", "b")])
    tau = Automorphism.from_generators(z2, [{"type": "transvection", "v": "a", "w": "b"}])
    assert tau.images["a"] == "b a"
    assert raagdyn.words_equal(z2, tau.apply("a^2"), "b^2 a^2")


def test_apply_and_compose():
    f2 = SimplicialGraph(["a", "b"])
    sigma = Automorphism.from_images(
        f2, {"a": "a b", "b": "a"}, inverse_images={"a": "b", "b": "b^-1 a"}
    )
    psi = sigma.compose(sigma)
    assert psi.images == {"a": "a b a", "b": "a b"}
    assert sigma.apply("a b") == "a b a"
    assert sigma.apply_inverse(sigma.apply("a b^-1")) == "a b^-1"
    assert sigma.power(3).images["a"] == "a b a^2 b"


def test_spec_roundtrip_and_dot():
    text = """{
      "graph": {"vertices": ["a", "b", "c"], "edges": [["a", "c"], ["b", "c"]]},
      "automorphism": {"images": {"a": "a b a^-1", "b": "b a^-1", "c": "c"}}
    }"""
    phi = raagdyn.load_spec(text)
    assert raagdyn.is_square(phi)["square"]

    report = raagdyn.analyze_spec(text, k_max=40)
    assert report["verification"]["square"]["square"]
    assert report["growth"]["classification"] == "inconclusive"
    assert report["cycle_classification"][0]["kind"] == "empty"

    dot = raagdyn.export_dot(phi)
    assert dot.startswith("digraph")
    assert '"a" -> "b";' in dot


def test_diagram_queries():
    t3 = SimplicialGraph(["s", "a", "b"])
    chi = Automorphism.from_images(t3, {"s": "s a", "a": "a b a", "b": "a b"})
    assert raagdyn.down_set(chi, "s") == ["s", "a", "b"]
    assert raagdyn.trim(chi, ["s", "a", "b"]) == ["a", "b"]
    result = raagdyn.invariant_subgraph(chi, "s")
    assert result["delta"] == ["a", "b"]
    assert result["case"] == "empty-core"

    e3 = SimplicialGraph(["a", "b", "c"])
    rho = Automorphism.from_images(e3, {"a": "a b", "b": "b c", "c": "c"})
    assert raagdyn.terminal_partition(rho) == [["c"], ["b"], ["a"]]
    split = raagdyn.decompose_image(rho, "a")
    assert split == {
        "left": "1",
        "sign": 1,
        "right": "b",
        "supports_in_lower_layers": True,
    }


def test_errors():
    g = SimplicialGraph(["a"])
    with pytest.raises(raagdyn.ParseError):
        raagdyn.load_spec("not json")
    with pytest.raises(raagdyn.ValidationError):
        Automorphism.from_images(g, {})
    with pytest.raises(raagdyn.CycleError):
        f2 = SimplicialGraph(["a", "b"])
        psi = Automorphism.from_images(f2, {"a": "a b a", "b": "a b"})
        raagdyn.terminal_partition(psi)
