"""Normal-form models, canonicalization and BFS censuses."""

import random

import pytest

from conftest import iter_dyer_graphs
from dyergrowth import DyerGraph, INFINITY, sphere_sizes
from dyergrowth.oracle import (
    CyclicGraphProduct,
    DihedralModel,
    DirectProductModel,
    FreeProductModel,
    SignedPermutationModel,
    SymmetricGroupModel,
    Unsupported,
    bfs_census,
    build_oracle,
    canonicalize,
    cyclic_model,
    power,
)


# -- canonical forms -----------------------------------------------------------


def test_torsion_power_collapses():
    model = cyclic_model(4)
    assert canonicalize(model, [("x", 2), ("x", 2)]) == model.identity


def test_commuting_generators_sort_by_vertex_order():
    g = DyerGraph({"x": 3, "y": 5}, {("x", "y"): 2})
    model = CyclicGraphProduct(g)
    assert canonicalize(model, [("y", 1), ("x", 1)]) == ((0, 1), (1, 1))


def test_noncommuting_generators_keep_word_order():
    g = DyerGraph({"x": 3, "y": 5})
    model = CyclicGraphProduct(g)
    assert canonicalize(model, [("y", 1), ("x", 1)]) == ((1, 1), (0, 1))


def test_braid_relation_in_dihedral_model():
    model = DihedralModel(3)
    xyx = canonicalize(model, [("x", 1), ("y", 1), ("x", 1)])
    yxy = canonicalize(model, [("y", 1), ("x", 1), ("y", 1)])
    assert xyx == yxy


def test_negative_exponents_and_inverses():
    g = DyerGraph({"x": INFINITY, "y": 5})
    model = CyclicGraphProduct(g)
    w = canonicalize(model, [("x", -3), ("y", 2)])
    assert model.multiply(w, model.inverse(w)) == model.identity
    assert canonicalize(model, [("y", -1)]) == ((1, 4),)


def test_unknown_generator_rejected():
    with pytest.raises(KeyError):
        canonicalize(cyclic_model(4), [("q", 1)])


# -- censuses -------------------------------------------------------------------


def test_free_group_census():
    model = CyclicGraphProduct(DyerGraph({"x": INFINITY, "y": INFINITY}))
    assert bfs_census(model, 3).spheres == (1, 4, 12, 36)


def test_cyclic_five_census():
    report = bfs_census(cyclic_model(5), 3)
    assert report.spheres == (1, 2, 2, 0)
    assert report.order == 5
    assert report.max_length == 2


def test_symmetric_census():
    report = bfs_census(SymmetricGroupModel(2), 4)
    assert report.spheres == (1, 2, 2, 1, 0)
    assert report.order == 6
    assert report.max_length == 3


def test_census_radius_zero():
    assert bfs_census(cyclic_model(3), 0).spheres == (1,)


def test_infinite_dihedral_model_matches_free_product_of_involutions():
    infinite = DihedralModel(INFINITY)
    split = FreeProductModel([cyclic_model(2, "x"), cyclic_model(2, "y")])
    assert bfs_census(infinite, 8).spheres == bfs_census(split, 8).spheres == (1, 2, 2, 2, 2, 2, 2, 2, 2)


# -- model construction ----------------------------------------------------------


def test_build_free_product():
    g = DyerGraph({"x": 2, "y": 2, "z": 3}, {("x", "y"): 3})
    model = build_oracle(g)
    assert isinstance(model, FreeProductModel)
    assert sorted(name for name, _ in model.generators()) == ["x", "y", "z"]


def test_build_direct_product():
    g = DyerGraph({"x": 2, "y": INFINITY}, {("x", "y"): 2})
    model = build_oracle(g)
    assert isinstance(model, DirectProductModel)
    assert bfs_census(model, 4).spheres == (1, 3, 4, 4, 4)


def test_build_amalgam_is_unsupported():
    g = DyerGraph({"x": 2, "y": 2, "z": 3}, {("x", "y"): 3, ("y", "z"): 2})
    model = build_oracle(g)
    assert isinstance(model, Unsupported)
    assert "amalgam" in model.reason


def test_build_coxeter_pieces():
    b3 = DyerGraph(
        {"x": 2, "y": 2, "z": 2}, {("x", "y"): 4, ("y", "z"): 3, ("x", "z"): 2}
    )
    model = build_oracle(b3)
    assert isinstance(model, SignedPermutationModel)
    assert bfs_census(model, 10).order == 48

    h3 = DyerGraph(
        {"x": 2, "y": 2, "z": 2}, {("x", "y"): 5, ("y", "z"): 3, ("x", "z"): 2}
    )
    assert isinstance(build_oracle(h3), Unsupported)

    affine = DyerGraph(
        {"x": 2, "y": 2, "z": 2}, {("x", "y"): 3, ("y", "z"): 3, ("x", "z"): 3}
    )
    assert isinstance(build_oracle(affine), Unsupported)


def test_build_empty_graph():
    model = build_oracle(DyerGraph({}))
    assert bfs_census(model, 2).spheres == (1, 0, 0)


def test_generator_names_follow_vertices():
    g = DyerGraph({"p": 2, "q": 2, "r": 2}, {("p", "q"): 4, ("q", "r"): 3, ("p", "r"): 2})
    model = build_oracle(g)
    assert sorted(name for name, _ in model.generators()) == ["p", "q", "r"]


# -- algebraic invariants ----------------------------------------------------------


def test_direct_product_census_is_convolution():
    factors = [
        (DihedralModel(4), cyclic_model(3)),
        (SymmetricGroupModel(2), cyclic_model(2, "z")),
        (cyclic_model(INFINITY), cyclic_model(5, "w")),
    ]
    for left, right in factors:
        n = 6
        product = DirectProductModel([left, right])
        a = bfs_census(left, n).spheres
        b = bfs_census(right, n).spheres
        conv = tuple(sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n + 1))
        assert bfs_census(product, n).spheres == conv


def test_finite_models_census_totals():
    cases = [
        (SymmetricGroupModel(3), 24),
        (SignedPermutationModel("B", 2), 8),
        (SignedPermutationModel("D", 4), 192),
        (DihedralModel(7), 14),
    ]
    for model, expected in cases:
        report = bfs_census(model, 40)
        assert report.order == expected


def test_power_helper():
    model = cyclic_model(7)
    gen = dict(model.generators())["x"]
    assert power(model, gen, 7) == model.identity
    assert power(model, gen, -2) == canonicalize(model, [("x", 5)])


def _defining_relators(graph):
    """Words over (name, exponent) pairs that equal the identity."""
    relators = []
    for name in graph.vertices:
        order = graph.order(name)
        if order != INFINITY:
            relators.append([(name, order)])
    for (a, b), label in graph.edges():
        left = [((a, b)[i % 2], 1) for i in range(label)]
        right = [((b, a)[i % 2], 1) for i in range(label)]
        relators.append(left + [(v, -e) for v, e in reversed(right)])
    return relators


def test_canonicalization_respects_defining_relations():
    graphs = [
        DyerGraph({"x": 2, "y": 2}, {("x", "y"): 3}),
        DyerGraph({"x": 2, "y": 2}, {("x", "y"): 4}),
        DyerGraph({"x": 3, "y": 4, "z": INFINITY}, {("x", "y"): 2, ("y", "z"): 2}),
        DyerGraph({"x": INFINITY, "y": INFINITY, "z": 2}, {("x", "y"): 2}),
        DyerGraph({"x": 2, "y": 2, "z": 5}, {("x", "y"): 3}),
    ]
    rng = random.Random(424242)
    for graph in graphs:
        model = build_oracle(graph)
        assert not isinstance(model, Unsupported)
        relators = _defining_relators(graph)
        names = list(graph.vertices)
        for _ in range(2000):
            word = [
                (rng.choice(names), rng.choice([-2, -1, 1, 2, 3]))
                for _ in range(rng.randint(0, 6))
            ]
            cut = rng.randint(0, len(word))
            rewritten = word[:cut] + rng.choice(relators) + word[cut:]
            assert canonicalize(model, word) == canonicalize(model, rewritten)


def test_census_matches_engine_on_sampled_small_graphs():
    rng = random.Random(31337)
    all_graphs = list(iter_dyer_graphs(4, orders=(2, 3, 4, 5, INFINITY), labels=(2, 3, 4, 5)))
    small = [(o, e) for o, e in all_graphs if len(o) <= 2]
    bigger = [(o, e) for o, e in all_graphs if len(o) > 2]
    chosen = small + rng.sample(bigger, 160)
    checked = 0
    for orders, edges in chosen:
        graph = DyerGraph(orders, edges)
        model = build_oracle(graph)
        if isinstance(model, Unsupported):
            continue
        depth = 6 if len(graph) <= 2 else (5 if len(graph) == 3 else 4)
        expected = sphere_sizes(graph, depth)
        assert list(bfs_census(model, depth).spheres) == expected
        checked += 1
    assert checked >= 100
