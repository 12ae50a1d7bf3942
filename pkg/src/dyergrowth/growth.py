"""Growth series of Dyer groups.

Three independent computation routes are provided and cross-checkable:

* the product formula for graphs of spherical type (complete graph whose
  order-2 part generates a finite Coxeter group),
* a recursion expressing 1/G through the series of all proper standard
  parabolic subgroups,
* a recursion that splits off one vertex as an amalgamated product over its
  link, falling back to the direct-product decomposition on complete graphs.

All series are exact rational functions; parabolic results are memoized by
vertex-subset bitmask of the ambient graph, which is sound because word
length in a standard parabolic subgroup is intrinsic.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import coxclassify
from .dyergraph import INFINITY, DyerGraph, VertexSubset, _bit_indices
from .ratfun import Polynomial, RationalFunction

RF_ONE = RationalFunction(1)

#: Growth series of the infinite cyclic group, (1 + t)/(1 - t).
Z_SERIES = RationalFunction(Polynomial([1, 1]), Polynomial([1, -1]))


class CrossCheckMismatch(Exception):
    """Two computation strategies disagreed; always an implementation bug."""

    def __init__(self, results: dict):
        self.results = dict(results)
        body = "; ".join(f"{k}: {v}" for k, v in self.results.items())
        super().__init__(f"growth strategies disagree: {body}")


@dataclass(frozen=True)
class GrowthResult:
    series: RationalFunction
    method: str
    subsets_evaluated: int


def cyclic_growth(order) -> RationalFunction:
    """Growth series of a cyclic group of the given order (>= 2 or INFINITY)."""
    if order == INFINITY:
        return Z_SERIES
    if not isinstance(order, int) or order < 2:
        raise ValueError(f"invalid cyclic order {order!r}")
    r = order // 2
    if order % 2 == 0:
        coeffs = [1] + [2] * (r - 1) + [1]
    else:
        coeffs = [1] + [2] * r
    return RationalFunction(Polynomial(coeffs))


class GrowthEngine:
    """Memoized growth-series computation for one graph and one strategy.

    ``strategy`` is "subset" or "amalgam".  The memo maps subset bitmasks of
    the ambient graph to the series of the corresponding parabolic subgroup;
    it may be shared between engines because entries depend only on the
    induced subgraph and duplicate writes are idempotent.
    """

    def __init__(self, graph: DyerGraph, strategy: str = "amalgam", memo: dict | None = None):
        if strategy not in ("subset", "amalgam"):
            raise ValueError(f"unknown strategy {strategy!r}")
        self.graph = graph
        self.strategy = strategy
        self.memo: dict[int, RationalFunction] = {} if memo is None else memo
        self._v2mask, self._vpmask, self._vinfmask = graph._partition_masks()
        self._types: dict[int, tuple | None] = {}

    # -- structure helpers -------------------------------------------------

    def _classify_v2(self, v2mask: int):
        """Finite-type decomposition of the order-2 diagram, None if infinite."""
        cached = self._types.get(v2mask, "?")
        if cached != "?":
            return cached
        diagram = coxclassify.to_diagram(self.graph.induced(v2mask))
        types = coxclassify.classify_finite(diagram)
        self._types[v2mask] = types
        return types

    def _spherical_types(self, mask: int):
        """Component types of the order-2 part when the mask is of spherical
        type, else None."""
        if not self.graph.is_complete_mask(mask):
            return None
        return self._classify_v2(mask & self._v2mask)

    # -- public API ----------------------------------------------------------

    def series(self, mask: int | None = None) -> RationalFunction:
        if mask is None:
            mask = self.graph.full_mask
        result = self.memo.get(mask)
        if result is not None:
            return result
        if mask == 0:
            result = RF_ONE
        else:
            types = self._spherical_types(mask)
            if types is not None:
                result = self._product_series(mask, types)
            elif self.strategy == "subset":
                result = self._subset_formula(mask)
            else:
                result = self._amalgam_formula(mask)
        self.memo[mask] = result
        return result

    # -- strategies ------------------------------------------------------------

    def _product_series(self, mask: int, types) -> RationalFunction:
        """Series of a complete-graph parabolic: finite Coxeter part times
        cyclic factors times one (1+t)/(1-t) per infinite vertex."""
        result = RationalFunction(coxclassify.solomon_from_types(types))
        for i in _bit_indices(mask & self._vpmask):
            result = result * cyclic_growth(self.graph.order_at(i))
        l = (mask & self._vinfmask).bit_count()
        if l:
            result = result * Z_SERIES**l
        return result

    def _subset_formula(self, mask: int) -> RationalFunction:
        # (-1)^(|V|+1) / G  =  sum over proper subsets Y of (-1)^|Y| / G_Y
        total = self._alternating_parabolic_sum(mask)
        sign = 1 if mask.bit_count() % 2 else -1
        return RationalFunction(sign) / total

    def _alternating_parabolic_sum(self, mask: int) -> RationalFunction:
        """Sum of (-1)^|Y| / G_Y over the proper subsets Y of the mask."""
        if mask == 0:
            return RationalFunction(0)
        total = RF_ONE  # empty subset: series 1
        sub = (mask - 1) & mask
        while sub:
            term = self.series(sub).inverse()
            total = total + term if sub.bit_count() % 2 == 0 else total - term
            sub = (sub - 1) & mask
        return total

    def _amalgam_formula(self, mask: int) -> RationalFunction:
        graph = self.graph
        for i in _bit_indices(mask):
            star = (graph.adjacency_mask(i) & mask) | (1 << i)
            if star != mask:
                link = star & ~(1 << i)
                inv = (
                    self.series(mask & ~(1 << i)).inverse()
                    + self.series(star).inverse()
                    - self.series(link).inverse()
                )
                return inv.inverse()
        # complete graph: direct product of the order-2, torsion and free parts
        v2mask = mask & self._v2mask
        types = self._classify_v2(v2mask)
        if types is not None:
            g2 = RationalFunction(coxclassify.solomon_from_types(types))
        else:
            g2 = self.memo.get(v2mask)
            if g2 is None:
                g2 = self._subset_formula(v2mask)
                self.memo[v2mask] = g2
        result = g2
        for i in _bit_indices(mask & self._vpmask):
            result = result * cyclic_growth(self.graph.order_at(i))
        l = (mask & self._vinfmask).bit_count()
        if l:
            result = result * Z_SERIES**l
        return result


def spherical_growth(graph: DyerGraph) -> RationalFunction:
    """Product-formula series; only defined for graphs of spherical type."""
    engine = GrowthEngine(graph)
    types = engine._spherical_types(graph.full_mask)
    if types is None:
        raise ValueError("graph is not of spherical type")
    return engine._product_series(graph.full_mask, types)


def subset_recursion_growth(graph: DyerGraph, memo: dict | None = None) -> RationalFunction:
    return GrowthEngine(graph, "subset", memo).series()


def amalgam_growth(graph: DyerGraph, memo: dict | None = None) -> RationalFunction:
    return GrowthEngine(graph, "amalgam", memo).series()


def growth(graph: DyerGraph, strategy: str = "auto") -> GrowthResult:
    """Growth series of the whole group.

    auto uses the amalgam recursion (its tree only touches link and star
    subsets); cross_check runs the independent strategies, plus the clique
    formula when every edge label is 2, and raises CrossCheckMismatch if any
    two disagree.
    """
    if strategy in ("auto", "amalgam"):
        engine = GrowthEngine(graph, "amalgam")
        series = engine.series()
        method = "spherical" if graph.classify().is_spherical else "amalgam"
        return GrowthResult(series, method, len(engine.memo))
    if strategy == "subset":
        engine = GrowthEngine(graph, "subset")
        series = engine.series()
        method = "spherical" if graph.classify().is_spherical else "subset"
        return GrowthResult(series, method, len(engine.memo))
    if strategy == "cross_check":
        sub_engine = GrowthEngine(graph, "subset")
        am_engine = GrowthEngine(graph, "amalgam")
        results = {
            "subset": sub_engine.series(),
            "amalgam": am_engine.series(),
        }
        if all(label == 2 for _, label in graph.edges()):
            results["graph_product"] = graph_product_check(graph)
        if len(set(results.values())) != 1:
            raise CrossCheckMismatch(results)
        evaluated = len(sub_engine.memo) + len(am_engine.memo)
        method = "spherical" if graph.classify().is_spherical else "amalgam"
        return GrowthResult(results["amalgam"], method, evaluated)
    raise ValueError(f"unknown strategy {strategy!r}")


def graph_product_check(graph: DyerGraph) -> RationalFunction:
    """Clique-sum formula for graph products of cyclic groups.

    Only valid when every edge label is 2: then 1/G is the sum over all
    complete subgraphs (the empty one included) of the products of
    (1/G_vertex - 1) over the clique's vertices.
    """
    bad = [(e, m) for e, m in graph.edges() if m != 2]
    if bad:
        raise ValueError(f"graph product formula needs all labels 2, found {bad}")
    vertex_terms = [
        cyclic_growth(graph.order_at(i)).inverse() - 1 for i in range(len(graph))
    ]
    total = RationalFunction(0)
    for mask in range(graph.full_mask + 1):
        if not graph.is_complete_mask(mask):
            continue
        term = RF_ONE
        for i in _bit_indices(mask):
            term = term * vertex_terms[i]
        total = total + term
    return total.inverse()


def pd_series(graph: DyerGraph) -> RationalFunction:
    """Series of the elements that every generator power can shorten.

    Defined for spherical type only: t^(longest length of the order-2 part)
    times one nontrivial-powers factor per finite-order vertex of order > 2,
    times (2t/(1-t)) per infinite vertex.
    """
    engine = GrowthEngine(graph)
    types = engine._spherical_types(graph.full_mask)
    if types is None:
        raise ValueError("graph is not of spherical type")
    m = sum(t.longest_length for t in types)
    result = RationalFunction(Polynomial.monomial(m))
    for i in _bit_indices(engine._vpmask):
        order = graph.order_at(i)
        r = order // 2
        if order % 2 == 0:
            factor = Polynomial([0] + [2] * (r - 1) + [1])
        else:
            factor = Polynomial([0] + [2] * r)
        result = result * RationalFunction(factor)
    l = engine._vinfmask.bit_count()
    if l:
        result = result * RationalFunction(Polynomial([0, 2]), Polynomial([1, -1])) ** l
    return result


def bx_series(graph: DyerGraph, subset=(), engine: GrowthEngine | None = None) -> RationalFunction:
    """Series of the elements minimal in their coset of the given parabolic
    but not minimal for any strictly larger vertex set.

    Computed by inclusion-exclusion over the supersets Y of the subset:
    sum of (-1)^|Y - subset| G / G_Y.
    """
    if isinstance(subset, VertexSubset):
        if subset.graph is not graph:
            raise ValueError("subset belongs to a different graph")
        xmask = subset.mask
    else:
        xmask = graph.subset(subset).mask
    if engine is None:
        engine = GrowthEngine(graph)
    elif engine.graph is not graph:
        raise ValueError("engine belongs to a different graph")
    g_full = engine.series()
    rest = graph.full_mask & ~xmask
    total = RationalFunction(0)
    sub = rest
    while True:
        term = g_full / engine.series(xmask | sub)
        total = total + term if sub.bit_count() % 2 == 0 else total - term
        if sub == 0:
            break
        sub = (sub - 1) & rest
    return total


def sphere_sizes(graph: DyerGraph, n: int) -> list[int]:
    """Number of group elements of each word length 0..n."""
    return growth(graph).series.taylor_coefficients(n)
