"""Finite Coxeter group recognition and Poincaré polynomial data.

The order-2 part of a Dyer graph determines a Coxeter system.  Its diagram is
obtained by the usual convention: a label-2 edge means the generators commute
(no diagram edge), a label m >= 3 edge becomes a diagram edge labeled m, and a
missing edge means the product has infinite order (diagram edge labeled
infinity).  Recognition is purely combinatorial pattern matching against the
classification of finite types, so everything stays in exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyergraph import INFINITY, DyerGraph
from .ratfun import Polynomial

_EXCEPTIONAL_EXPONENTS = {
    ("E", 6): (1, 4, 5, 7, 8, 11),
    ("E", 7): (1, 5, 7, 9, 11, 13, 17),
    ("E", 8): (1, 7, 11, 13, 17, 19, 23, 29),
    ("F", 4): (1, 5, 7, 11),
    ("H", 3): (1, 5, 9),
    ("H", 4): (1, 11, 19, 29),
}


@dataclass(frozen=True)
class IrreducibleCoxeterType:
    """One irreducible finite type: family tag plus rank (plus m for I2)."""

    family: str
    rank: int
    m: int | None = None

    def __post_init__(self):
        fam, rank = self.family, self.rank
        ok = (
            (fam == "A" and rank >= 1)
            or (fam == "B" and rank >= 2)
            or (fam == "D" and rank >= 4)
            or (fam == "E" and rank in (6, 7, 8))
            or (fam == "F" and rank == 4)
            or (fam == "H" and rank in (3, 4))
            or (fam == "I2" and rank == 2 and self.m is not None and self.m >= 3)
        )
        if not ok:
            raise ValueError(f"invalid Coxeter type {fam}{rank} (m={self.m})")
        if fam != "I2" and self.m is not None:
            raise ValueError("m parameter is only meaningful for I2")

    @property
    def name(self) -> str:
        if self.family == "I2":
            return f"I2({self.m})"
        return f"{self.family}{self.rank}"

    @property
    def exponents(self) -> tuple[int, ...]:
        fam, n = self.family, self.rank
        if fam == "A":
            return tuple(range(1, n + 1))
        if fam == "B":
            return tuple(range(1, 2 * n, 2))
        if fam == "D":
            return tuple(sorted(list(range(1, 2 * n - 2, 2)) + [n - 1]))
        if fam == "I2":
            return (1, self.m - 1)
        return _EXCEPTIONAL_EXPONENTS[(fam, n)]

    @property
    def order(self) -> int:
        result = 1
        for e in self.exponents:
            result *= e + 1
        return result

    @property
    def longest_length(self) -> int:
        return sum(self.exponents)

    def __str__(self):
        return self.name


class CoxeterDiagram:
    """Diagram of a Coxeter system: labeled edges with labels >= 3 or infinity."""

    __slots__ = ("vertices", "_index", "_labels")

    def __init__(self, vertices, edge_labels):
        self.vertices = tuple(vertices)
        self._index = {v: i for i, v in enumerate(self.vertices)}
        labels = {}
        for (a, b), label in dict(edge_labels).items():
            i, j = sorted((self._index[a], self._index[b]))
            if i == j:
                raise ValueError(f"self-loop at {a!r}")
            if label != INFINITY and (not isinstance(label, int) or label < 3):
                raise ValueError(f"diagram label must be >= 3 or INFINITY, got {label!r}")
            labels[(i, j)] = label
        self._labels = labels

    @property
    def rank(self) -> int:
        return len(self.vertices)

    def label(self, a, b):
        i, j = sorted((self._index[a], self._index[b]))
        return self._labels.get((i, j))

    def neighbors(self, v) -> list:
        i = self._index[v]
        out = []
        for (a, b) in self._labels:
            if a == i:
                out.append(self.vertices[b])
            elif b == i:
                out.append(self.vertices[a])
        return sorted(out, key=self._index.__getitem__)

    def edges(self):
        return [
            ((self.vertices[i], self.vertices[j]), label)
            for (i, j), label in sorted(self._labels.items())
        ]

    def __repr__(self):
        body = ", ".join(f"{a}-{b}:{m}" for (a, b), m in self.edges())
        return f"CoxeterDiagram({list(self.vertices)}; {body})"


def to_diagram(graph: DyerGraph) -> CoxeterDiagram:
    """Diagram of the Coxeter system presented by an all-order-2 Dyer graph."""
    bad = [v for v in graph.vertices if graph.order(v) != 2]
    if bad:
        raise ValueError(f"vertices without order 2: {bad}")
    labels = {}
    verts = graph.vertices
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            m = graph.label_at(i, j)
            if m is None:
                labels[(verts[i], verts[j])] = INFINITY
            elif m >= 3:
                labels[(verts[i], verts[j])] = m
    return CoxeterDiagram(verts, labels)


def _components(diagram: CoxeterDiagram) -> list[list]:
    seen = set()
    comps = []
    for v in diagram.vertices:
        if v in seen:
            continue
        comp = []
        stack = [v]
        seen.add(v)
        while stack:
            u = stack.pop()
            comp.append(u)
            for w in diagram.neighbors(u):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        comps.append(sorted(comp, key=diagram.vertices.index))
    return comps


def _match_component(diagram: CoxeterDiagram, comp: list):
    """Match one connected component against the finite irreducible shapes.

    Returns (type, vertices) where the vertex tuple realizes the canonical
    generator order of the type (path order for A/B/F/H, the two short leaves
    then the branch vertex then the long arm for D), or None when the
    component presents an infinite group.
    """
    k = len(comp)
    pairs = [
        (a, b, diagram.label(a, b))
        for i, a in enumerate(comp)
        for b in comp[i + 1 :]
        if diagram.label(a, b) is not None
    ]
    if any(label == INFINITY for _, _, label in pairs):
        return None
    if k == 1:
        return IrreducibleCoxeterType("A", 1), tuple(comp)
    if k == 2:
        ((a, b, m),) = pairs
        if m == 3:
            return IrreducibleCoxeterType("A", 2), (a, b)
        return IrreducibleCoxeterType("I2", 2, m), (a, b)
    # rank >= 3: must be a tree with at most one degree-3 branch point
    if len(pairs) != k - 1:
        return None
    degree = {v: 0 for v in comp}
    adj = {v: [] for v in comp}
    for a, b, m in pairs:
        degree[a] += 1
        degree[b] += 1
        adj[a].append(b)
        adj[b].append(a)
    if max(degree.values()) > 3:
        return None
    branch = [v for v in comp if degree[v] == 3]
    if len(branch) > 1:
        return None

    if not branch:
        ends = sorted((v for v in comp if degree[v] == 1), key=diagram.vertices.index)
        path = _walk_path(adj, ends[0])
        labels = [diagram.label(path[i], path[i + 1]) for i in range(k - 1)]
        special = [(i, m) for i, m in enumerate(labels) if m != 3]
        if not special:
            return IrreducibleCoxeterType("A", k), tuple(path)
        if len(special) > 1:
            return None
        pos, m = special[0]
        if pos == k - 2:  # put the special edge first
            path.reverse()
            pos = 0
        if m == 4 and pos == 0:
            return IrreducibleCoxeterType("B", k), tuple(path)
        if m == 4 and k == 4 and pos == 1:
            return IrreducibleCoxeterType("F", 4), tuple(path)
        if m == 5 and pos == 0 and k in (3, 4):
            return IrreducibleCoxeterType("H", k), tuple(path)
        return None

    if any(m != 3 for _, _, m in pairs):
        return None
    center = branch[0]
    arms = []
    for first in sorted(adj[center], key=diagram.vertices.index):
        arm = [first]
        prev, cur = center, first
        while degree[cur] == 2:
            nxt = next(w for w in adj[cur] if w != prev)
            arm.append(nxt)
            prev, cur = cur, nxt
        arms.append(arm)
    arms.sort(key=len)
    lengths = [len(a) for a in arms]
    if lengths[0] == 1 and lengths[1] == 1:
        order = (arms[0][0], arms[1][0], center, *arms[2])
        return IrreducibleCoxeterType("D", k), order
    if lengths == [1, 2, 2]:
        return IrreducibleCoxeterType("E", 6), tuple(comp)
    if lengths == [1, 2, 3]:
        return IrreducibleCoxeterType("E", 7), tuple(comp)
    if lengths == [1, 2, 4]:
        return IrreducibleCoxeterType("E", 8), tuple(comp)
    return None


def _walk_path(adj, start):
    path = [start]
    prev = None
    cur = start
    while True:
        nxt = [w for w in adj[cur] if w != prev]
        if not nxt:
            return path
        prev, cur = cur, nxt[0]
        path.append(cur)


def matched_components(diagram: CoxeterDiagram):
    """Per-component (type, canonically ordered vertices), or None if infinite."""
    out = []
    for comp in _components(diagram):
        matched = _match_component(diagram, comp)
        if matched is None:
            return None
        out.append(matched)
    return out


def classify_finite(diagram: CoxeterDiagram):
    """Irreducible finite types of the diagram, or None when infinite."""
    matched = matched_components(diagram)
    if matched is None:
        return None
    return tuple(t for t, _ in matched)


def solomon_growth(diagram: CoxeterDiagram) -> Polynomial:
    """Growth polynomial of a finite Coxeter system as the product of the
    factors 1 + t + ... + t^e over all exponents e of all components."""
    types = classify_finite(diagram)
    if types is None:
        raise ValueError("diagram does not present a finite Coxeter group")
    return solomon_from_types(types)


def solomon_from_types(types) -> Polynomial:
    result = Polynomial([1])
    for typ in types:
        for e in typ.exponents:
            result = result * Polynomial([1] * (e + 1))
    return result


def longest_length(diagram: CoxeterDiagram) -> int:
    """Length of the longest element: the sum of all exponents."""
    types = classify_finite(diagram)
    if types is None:
        raise ValueError("infinite Coxeter group has no longest element")
    return sum(t.longest_length for t in types)


def group_order(diagram: CoxeterDiagram) -> int:
    types = classify_finite(diagram)
    if types is None:
        raise ValueError("diagram does not present a finite Coxeter group")
    result = 1
    for t in types:
        result *= t.order
    return result
