"""The Yamada polynomial of a spatial graph diagram.

Crossings are eliminated by the three-term resolution (A-smoothing,
B-smoothing, rigid vertex); the crossing-free residue is an abstract
multigraph evaluated by delete/contract down to bouquets of circles, with
R(B_n) = -(-sigma)^n and sigma = A + 1 + A^-1.  The raw polynomial is a
regular rigid-vertex isotopy invariant; (-A)^-m R with m the least exponent
is invariant under kinks as well.
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import Diagram, require_valid, resolve_crossing
from .graphs import (AbstractGraph, canonical_certificate, connected_components,
                     contract_edge, delete_edge, to_abstract_graph)
from .laurent import LaurentPoly

VAR = "A"


def sigma() -> LaurentPoly:
    """A + 1 + A^-1, the value of a single circle."""
    return LaurentPoly({-1: 1, 0: 1, 1: 1}, VAR)


def eval_crossing_free(g: AbstractGraph, memo=None) -> LaurentPoly:
    """Evaluate an abstract multigraph by the delete/contract axioms.

    Connected components multiply; a component with a nonloop edge e splits
    as eval(G - e) + eval(G / e); what remains is a bouquet B_k worth
    -(-sigma)^k.  Free loops are B_1 factors (sigma each).  Results are
    memoized on the canonical isomorphism certificate.
    """
    if memo is None:
        memo = {}
    s = sigma()
    comps, loops = connected_components(g)
    out = s ** loops if loops else LaurentPoly.constant(1, VAR)
    for comp in comps:
        out = out * _eval_component(comp, memo, s)
    return out


def _eval_component(g: AbstractGraph, memo, s) -> LaurentPoly:
    cert = canonical_certificate(g)
    hit = memo.get(cert)
    if hit is not None:
        return hit
    nonloop = next((e for e in g.edges if e[0] != e[1]), None)
    if nonloop is None:
        # a connected loops-only graph is a single vertex with k loops: B_k
        k = len(g.edges)
        val = -((-s) ** k)
    else:
        val = (eval_crossing_free(delete_edge(g, nonloop), memo)
               + eval_crossing_free(contract_edge(g, nonloop), memo))
    memo[cert] = val
    return val


def yamada_raw(d: Diagram, memo=None) -> LaurentPoly:
    """R(G): resolve crossings (least index first) down to abstract graphs."""
    require_valid(d)
    if memo is None:
        memo = {}
    return _raw(d, memo)


def _raw(d: Diagram, memo) -> LaurentPoly:
    if not d.crossings:
        return eval_crossing_free(to_abstract_graph(d), memo)
    a = LaurentPoly.monomial(1, 1, VAR)
    a_inv = LaurentPoly.monomial(1, -1, VAR)
    return (a * _raw(resolve_crossing(d, 0, "A"), memo)
            + a_inv * _raw(resolve_crossing(d, 0, "B"), memo)
            + _raw(resolve_crossing(d, 0, "V"), memo))


@dataclass(frozen=True)
class YamadaResult:
    raw: LaurentPoly
    normalized: LaurentPoly
    min_power: int | None  # None when raw = 0


def yamada_normalized(d: Diagram) -> YamadaResult:
    """R normalized by (-A)^-m, m the least exponent of the raw polynomial."""
    raw = yamada_raw(d)
    if raw.is_zero():
        return YamadaResult(raw, raw, None)
    m = raw.min_degree
    unit = LaurentPoly.monomial(-1 if m % 2 else 1, -m, VAR)
    return YamadaResult(raw, unit * raw, m)
