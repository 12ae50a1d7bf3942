"""Brute-force ground truth: normal-form group models and Cayley-ball censuses.

Each model represents a group with a fixed generating set matching the Dyer
graph vertices, a decidable canonical form, and exact multiplication.  Word
lengths are never computed from formulas: a breadth-first search over right
multiplication by generators and their inverses counts the sphere sizes
directly, so censuses are independent of every growth-series formula.

Supported families: graph products of cyclic groups (all edge labels 2),
permutation models of the finite Coxeter types A/B/D and the dihedral types
(finite and infinite), and free and direct products of supported models.
Graphs that only decompose as amalgamated products over larger parabolics are
reported as Unsupported.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import coxclassify
from .dyergraph import INFINITY, DyerGraph, _bit_indices


@dataclass(frozen=True)
class Unsupported:
    """Returned by build_oracle when no normal-form model covers the graph."""

    reason: str


@dataclass(frozen=True)
class CensusReport:
    """Sphere sizes a_0..a_n; order and max length known for finite groups."""

    spheres: tuple[int, ...]
    order: int | None = None
    max_length: int | None = None


def _norm_exponent(exp, order):
    """Reduce a syllable exponent modulo the generator order; 0 means trivial."""
    if order == INFINITY:
        return exp
    return exp % order


class CyclicGraphProduct:
    """Graph product of cyclic groups: one cyclic factor per vertex, two
    factors commute exactly when their vertices share a (label-2) edge.

    Elements are syllable tuples ((vertex index, exponent), ...) in shuffle
    normal form: no trivial syllables, no adjacent syllables with the same
    vertex, and adjacent commuting syllables sorted by vertex index.
    """

    def __init__(self, graph: DyerGraph):
        bad = [(e, m) for e, m in graph.edges() if m != 2]
        if bad:
            raise ValueError(f"cyclic graph product needs all labels 2, found {bad}")
        self.graph = graph
        self.orders = tuple(graph.order_at(i) for i in range(len(graph)))
        self.names = graph.vertices
        self.identity = ()

    def generators(self):
        return [(name, ((i, 1),)) for i, name in enumerate(self.names)]

    def _commutes(self, u: int, v: int) -> bool:
        return bool((self.graph._adj[u] >> v) & 1)

    def _canonical(self, syllables):
        word = [
            (v, e)
            for v, e in ((v, _norm_exponent(e, self.orders[v])) for v, e in syllables)
            if e != 0
        ]
        # reduce: merge same-vertex syllables separated only by commuting ones
        changed = True
        while changed:
            changed = False
            for i in range(len(word)):
                v = word[i][0]
                for j in range(i + 1, len(word)):
                    if word[j][0] != v:
                        continue
                    # a same-vertex syllable beyond j could never pass j itself
                    if all(self._commutes(u, v) for u, _ in word[i + 1 : j]):
                        e = _norm_exponent(word[i][1] + word[j][1], self.orders[v])
                        del word[j]
                        if e == 0:
                            del word[i]
                        else:
                            word[i] = (v, e)
                        changed = True
                    break
                if changed:
                    break
        # canonical order: repeatedly emit the smallest-vertex syllable among
        # those that commute with everything before them (lexicographically
        # least representative of the shuffle class)
        out = []
        while word:
            best = None
            for idx in range(len(word)):
                v = word[idx][0]
                if all(self._commutes(u, v) for u, _ in word[:idx]):
                    if best is None or v < word[best][0]:
                        best = idx
            out.append(word.pop(best))
        return tuple(out)

    def multiply(self, a, b):
        return self._canonical(list(a) + list(b))

    def inverse(self, a):
        return self._canonical([(v, -e) for v, e in reversed(a)])


class DihedralModel:
    """Dihedral group of order 2m (or infinite for m = INFINITY), generated by
    two reflections.  Elements are (rotation, flip) pairs."""

    def __init__(self, m, names=("x", "y")):
        if m != INFINITY and (not isinstance(m, int) or m < 2):
            raise ValueError(f"invalid dihedral parameter {m!r}")
        self.m = m
        self.names = tuple(names)
        self.identity = (0, 0)

    def _norm(self, r):
        return r if self.m == INFINITY else r % self.m

    def generators(self):
        return [(self.names[0], (0, 1)), (self.names[1], (1, 1))]

    def multiply(self, a, b):
        r1, s1 = a
        r2, s2 = b
        return (self._norm(r1 + (-r2 if s1 else r2)), s1 ^ s2)

    def inverse(self, a):
        r, s = a
        return a if s else (self._norm(-r), 0)


class SymmetricGroupModel:
    """Symmetric group on rank+1 points with the adjacent transpositions as
    generators.  Elements are image tuples."""

    def __init__(self, rank, names=None):
        if rank < 1:
            raise ValueError("rank must be >= 1")
        self.rank = rank
        self.names = tuple(names) if names else tuple(f"s{i + 1}" for i in range(rank))
        if len(self.names) != rank:
            raise ValueError("need one name per generator")
        self.identity = tuple(range(rank + 1))

    def generators(self):
        out = []
        for i in range(self.rank):
            img = list(range(self.rank + 1))
            img[i], img[i + 1] = img[i + 1], img[i]
            out.append((self.names[i], tuple(img)))
        return out

    def multiply(self, a, b):
        return tuple(a[x] for x in b)

    def inverse(self, a):
        out = [0] * len(a)
        for i, x in enumerate(a):
            out[x] = i
        return tuple(out)


class SignedPermutationModel:
    """Hyperoctahedral models: family "B" is all signed permutations with the
    sign flip of the first coordinate as extra generator; family "D" is the
    even-signed subgroup with the signed double swap instead.

    Elements are window tuples w with w[i] in {+-1, ..., +-rank}.
    """

    def __init__(self, family, rank, names=None):
        if family not in ("B", "D"):
            raise ValueError(f"unknown signed family {family!r}")
        if (family == "B" and rank < 2) or (family == "D" and rank < 4):
            raise ValueError(f"rank {rank} out of range for family {family}")
        self.family = family
        self.rank = rank
        self.names = tuple(names) if names else tuple(f"s{i}" for i in range(rank))
        if len(self.names) != rank:
            raise ValueError("need one name per generator")
        self.identity = tuple(range(1, rank + 1))

    def generators(self):
        out = []
        first = list(range(1, self.rank + 1))
        if self.family == "B":
            first[0] = -1
        else:
            first[0], first[1] = -2, -1
        out.append((self.names[0], tuple(first)))
        for i in range(1, self.rank):
            img = list(range(1, self.rank + 1))
            img[i - 1], img[i] = img[i], img[i - 1]
            out.append((self.names[i], tuple(img)))
        return out

    def multiply(self, a, b):
        out = []
        for v in b:
            w = a[abs(v) - 1]
            out.append(w if v > 0 else -w)
        return tuple(out)

    def inverse(self, a):
        out = [0] * len(a)
        for i, v in enumerate(a):
            out[abs(v) - 1] = (i + 1) if v > 0 else -(i + 1)
        return tuple(out)


class FreeProductModel:
    """Free product of models; elements are alternating factor words."""

    def __init__(self, factors):
        self.factors = list(factors)
        self.identity = ()

    def generators(self):
        out = []
        for fi, factor in enumerate(self.factors):
            for name, g in factor.generators():
                out.append((name, ((fi, g),)))
        return out

    def multiply(self, a, b):
        word = list(a)
        for fi, g in b:
            if word and word[-1][0] == fi:
                prod = self.factors[fi].multiply(word[-1][1], g)
                if prod == self.factors[fi].identity:
                    word.pop()
                else:
                    word[-1] = (fi, prod)
            else:
                word.append((fi, g))
        return tuple(word)

    def inverse(self, a):
        return tuple((fi, self.factors[fi].inverse(g)) for fi, g in reversed(a))


class DirectProductModel:
    """Direct product of models; elements are component tuples."""

    def __init__(self, factors):
        self.factors = list(factors)
        self.identity = tuple(f.identity for f in self.factors)

    def generators(self):
        out = []
        for fi, factor in enumerate(self.factors):
            for name, g in factor.generators():
                elem = list(self.identity)
                elem[fi] = g
                out.append((name, tuple(elem)))
        return out

    def multiply(self, a, b):
        return tuple(f.multiply(x, y) for f, x, y in zip(self.factors, a, b))

    def inverse(self, a):
        return tuple(f.inverse(x) for f, x in zip(self.factors, a))


def cyclic_model(order, name="x") -> CyclicGraphProduct:
    """Cyclic group of the given order as a one-vertex graph product."""
    return CyclicGraphProduct(DyerGraph({name: order}))


def power(model, element, exp: int):
    """element**exp by repeated squaring through the model's multiplication."""
    if exp < 0:
        return power(model, model.inverse(element), -exp)
    result = model.identity
    base = element
    while exp:
        if exp & 1:
            result = model.multiply(result, base)
        base = model.multiply(base, base)
        exp >>= 1
    return result


def canonicalize(model, word):
    """Canonical form of a product of generator powers.

    word: sequence of (generator name, exponent) pairs; unknown generator
    names raise KeyError.
    """
    gens = dict(model.generators())
    result = model.identity
    for name, exp in word:
        if name not in gens:
            raise KeyError(f"unknown generator {name!r}")
        result = model.multiply(result, power(model, gens[name], exp))
    return result


def bfs_census(model, n: int) -> CensusReport:
    """Sphere sizes of the Cayley ball of radius n, by breadth-first search
    from the identity with deduplication by canonical form."""
    if n < 0:
        raise ValueError("radius must be nonnegative")
    steps = []
    for _, g in model.generators():
        for h in (g, model.inverse(g)):
            if h not in steps:
                steps.append(h)
    seen = {model.identity}
    frontier = [model.identity]
    spheres = [1]
    order = max_length = None
    for depth in range(1, n + 1):
        new = set()
        for g in frontier:
            for s in steps:
                h = model.multiply(g, s)
                if h not in seen:
                    new.add(h)
        seen |= new
        spheres.append(len(new))
        frontier = list(new)
        if not new:
            order = len(seen)
            max_length = depth - 1
            spheres.extend([0] * (n - depth))
            break
    return CensusReport(tuple(spheres), order, max_length)


def _connected_components(graph: DyerGraph) -> list[int]:
    full = graph.full_mask
    comps = []
    remaining = full
    while remaining:
        start = remaining & -remaining
        comp = start
        while True:
            grown = comp
            for i in _bit_indices(comp):
                grown |= graph.adjacency_mask(i)
            grown &= full
            if grown == comp:
                break
            comp = grown
        comps.append(comp)
        remaining &= ~comp
    return comps


def _commuting_split(graph: DyerGraph) -> list[int]:
    """Components of the relation "does not commute": u ~ v unless they share
    a label-2 edge.  Several components mean a direct-product split."""
    n = len(graph)
    noncommute = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if graph.label_at(i, j) != 2:
                noncommute[i] |= 1 << j
                noncommute[j] |= 1 << i
    comps = []
    remaining = graph.full_mask
    while remaining:
        comp = remaining & -remaining
        while True:
            grown = comp
            for i in _bit_indices(comp):
                grown |= noncommute[i]
            grown &= graph.full_mask
            if grown == comp:
                break
            comp = grown
        comps.append(comp)
        remaining &= ~comp
    return comps


def build_oracle(graph: DyerGraph):
    """Build a normal-form model for the graph's group, or Unsupported.

    The graph is decomposed recursively: disjoint unions become free
    products, label-2 joins become direct products, all-label-2 pieces become
    cyclic graph products, and complete all-order-2 pieces are matched against
    the finite Coxeter types with permutation models (A/B/D/I2).
    """
    if len(graph) == 0:
        return CyclicGraphProduct(graph)

    comps = _connected_components(graph)
    if len(comps) > 1:
        factors = []
        for comp in comps:
            sub = build_oracle(graph.induced(comp))
            if isinstance(sub, Unsupported):
                return sub
            factors.append(sub)
        return FreeProductModel(factors)

    split = _commuting_split(graph)
    if len(split) > 1:
        factors = []
        for comp in split:
            sub = build_oracle(graph.induced(comp))
            if isinstance(sub, Unsupported):
                return sub
            factors.append(sub)
        return DirectProductModel(factors)

    if all(label == 2 for _, label in graph.edges()):
        return CyclicGraphProduct(graph)

    if any(graph.order_at(i) != 2 for i in range(len(graph))):
        return Unsupported(
            "mixed orders with a braid edge: the graph only decomposes as an "
            "amalgamated product"
        )
    if not graph.is_complete:
        return Unsupported(
            "non-complete order-2 piece with a braid edge: amalgamated product "
            "over a larger parabolic"
        )
    matched = coxclassify.matched_components(coxclassify.to_diagram(graph))
    if matched is None:
        return Unsupported("infinite irreducible Coxeter piece")
    [(typ, ordered)] = matched
    if typ.family == "A" and typ.rank == 2:
        return DihedralModel(3, ordered)
    if typ.family == "A":
        return SymmetricGroupModel(typ.rank, ordered)
    if typ.family == "I2":
        return DihedralModel(typ.m, ordered)
    if typ.family in ("B", "D"):
        return SignedPermutationModel(typ.family, typ.rank, ordered)
    return Unsupported(f"no permutation model for Coxeter type {typ.name}")
