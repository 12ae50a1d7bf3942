"""Rational Euler characteristic of Dyer groups, via two independent routes.

The growth route evaluates 1/G at t = 1.  The recursive route never touches
growth series except for one leaf case: it multiplies characteristics over
direct-product splits of complete graphs (1/order for the finite parts, 0 as
soon as an infinite cyclic factor appears) and applies the amalgamated-product
identity chi(D) = chi(D - v) + chi(star v) - chi(link v) on incomplete graphs.
The one exception is a complete order-2 part presenting an infinite Coxeter
group, whose value is taken from the parabolic recursion at t = 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import coxclassify
from .dyergraph import DyerGraph, _bit_indices
from .growth import GrowthEngine, growth


@dataclass(frozen=True)
class EulerResult:
    value: Fraction
    method: str


def euler_via_growth(graph: DyerGraph) -> EulerResult:
    """1 / (growth series at t = 1), exactly."""
    series = growth(graph).series
    return EulerResult(series.inverse().evaluate(1), "via_growth")


def euler_recursive(graph: DyerGraph) -> EulerResult:
    v2mask, vpmask, vinfmask = graph._partition_masks()
    memo: dict[int, Fraction] = {}

    def chi(mask: int) -> Fraction:
        cached = memo.get(mask)
        if cached is not None:
            return cached
        value = None
        for i in _bit_indices(mask):
            star = (graph.adjacency_mask(i) & mask) | (1 << i)
            if star != mask:
                link = star & ~(1 << i)
                value = chi(mask & ~(1 << i)) + chi(star) - chi(link)
                break
        if value is None:  # complete graph: product of the three parts
            if mask & vinfmask:
                value = Fraction(0)
            else:
                value = _chi_coxeter(graph, mask & v2mask)
                for i in _bit_indices(mask & vpmask):
                    value /= graph.order_at(i)
        memo[mask] = value
        return value

    return EulerResult(chi(graph.full_mask), "recursive")


def _chi_coxeter(graph: DyerGraph, v2mask: int) -> Fraction:
    """Characteristic of the Coxeter group on a complete order-2 subgraph."""
    sub = graph.induced(v2mask)
    types = coxclassify.classify_finite(coxclassify.to_diagram(sub))
    if types is not None:
        order = 1
        for t in types:
            order *= t.order
        return Fraction(1, order)
    # infinite Coxeter leaf: value of 1/G at 1 from the parabolic recursion
    series = GrowthEngine(sub, "subset").series()
    return series.inverse().evaluate(1)
