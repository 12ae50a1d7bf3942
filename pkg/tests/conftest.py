"""Shared helpers: corpus loading and exhaustive small-graph enumeration."""

import itertools

import pytest

from dyergrowth import DyerGraph, INFINITY, corpus_files

VERTEX_NAMES = "abcdef"


def iter_dyer_graphs(max_vertices, orders=(2, 3, 4, INFINITY), labels=(2, 3, 4)):
    """Every valid Dyer graph (as (orders dict, edge list)) with up to
    max_vertices vertices, vertex orders and edge labels from the given pools.
    Labels above 2 are only offered where both endpoints have order 2."""
    for n in range(max_vertices + 1):
        names = VERTEX_NAMES[:n]
        pairs = list(itertools.combinations(range(n), 2))
        for order_choice in itertools.product(orders, repeat=n):
            options = []
            for i, j in pairs:
                opts = [None, 2]
                if order_choice[i] == 2 and order_choice[j] == 2:
                    opts.extend(l for l in labels if l != 2)
                options.append(opts)
            for combo in itertools.product(*options):
                edges = [
                    ((names[i], names[j]), label)
                    for (i, j), label in zip(pairs, combo)
                    if label is not None
                ]
                yield dict(zip(names, order_choice)), edges


def iso_signature(graph: DyerGraph):
    """Canonical key equal for isomorphic graphs (small graphs only)."""
    n = len(graph)
    orders = tuple(graph.order_at(i) for i in range(n))
    best = None
    for perm in itertools.permutations(range(n)):
        sig = (
            tuple(orders[perm[i]] for i in range(n)),
            tuple(
                graph.label_at(perm[i], perm[j]) or 0
                for i in range(n)
                for j in range(i + 1, n)
            ),
        )
        if best is None or sig < best:
            best = sig
    return n, best


@pytest.fixture(scope="session")
def corpus():
    """All bundled example graphs as {name: DyerGraph}."""
    return {path.stem: DyerGraph.from_file(path) for path in corpus_files()}
