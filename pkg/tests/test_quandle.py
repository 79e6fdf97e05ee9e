"""Finite quandles and coloring counts: axioms, an exhaustive Fox-coloring
oracle, move invariance, and constant-coloring behavior."""

import random
from itertools import product

import pytest

from sginv import catalog
from sginv.diagram import derive_arcs
from sginv.moves import R2_VARIANTS, apply_r1, apply_r2
from sginv.quandle import (FiniteQuandle, QuandleError,
                           count_colorings, count_constant_colorings,
                           dihedral_quandle, is_p_colorable, trivial_quandle,
                           verify_quandle)

from helpers import small_corpus


def test_builtin_families_satisfy_axioms():
    for n in range(1, 8):
        assert verify_quandle(dihedral_quandle(n).op) == []
        assert verify_quandle(trivial_quandle(n).op) == []


def test_perturbed_table_fails_axioms():
    q = dihedral_quandle(5)
    op = [list(row) for row in q.op]
    op[1][3] = (op[1][3] + 1) % 5
    assert verify_quandle(tuple(tuple(r) for r in op)) != []
    # idempotence violation specifically
    op = [list(row) for row in trivial_quandle(3).op]
    op[0][0] = 1
    violations = verify_quandle(tuple(tuple(r) for r in op))
    assert any(axiom == 1 for axiom, _ in violations)


def test_inverse_operation():
    rng = random.Random(12)
    for n in (3, 4, 5):
        q = dihedral_quandle(n)
        for _ in range(30):
            x, y = rng.randrange(n), rng.randrange(n)
            assert q.apply(q.apply(x, y, 1), y, -1) == x
            assert q.apply(q.apply(x, y, -1), y, 1) == x


def test_from_op_derives_inverse():
    q = FiniteQuandle.from_op(dihedral_quandle(7).op)
    assert q.inv == dihedral_quandle(7).inv


def test_bad_orders_rejected():
    with pytest.raises(QuandleError):
        dihedral_quandle(0)
    with pytest.raises(QuandleError):
        trivial_quandle(-2)


def fox_coloring_count(d, p):
    """Exhaustive oracle: assignments to arcs with c = 2b - a (mod p) at
    every crossing, where b is the over arc and a, c the under arcs."""
    arcs = derive_arcs(d)
    count = 0
    for colors in product(range(p), repeat=len(arcs)):
        ok = True
        for c in d.crossings:
            b = colors[arcs.index_of(c.over_in)]
            a = colors[arcs.index_of(c.under_in)]
            cc = colors[arcs.index_of(c.under_out)]
            if (a + cc - 2 * b) % p:
                ok = False
                break
        if ok:
            count += 1
    return count


def test_trefoil_coloring_counts():
    tre = catalog.trefoil()
    assert count_colorings(tre, dihedral_quandle(3)) == 9
    assert count_colorings(tre, dihedral_quandle(5)) == 5
    assert fox_coloring_count(tre, 3) == 9
    assert fox_coloring_count(tre, 5) == 5


def test_counts_match_fox_oracle_on_knots():
    for d in (catalog.kinked_unknot(1), catalog.trefoil(),
              catalog.figure_eight()):
        for p in (3, 5, 7):
            assert count_colorings(d, dihedral_quandle(p)) == \
                fox_coloring_count(d, p)


def test_trivial_quandle_counts_components():
    # trivial quandle: every arc may be colored freely but crossings force
    # under arcs equal, so the count is n^(number of link components)
    tre = catalog.trefoil()
    for n in (2, 3, 4):
        assert count_colorings(tre, trivial_quandle(n)) == n


def test_count_invariance_under_moves():
    rng = random.Random(2718)
    for name, d in small_corpus().items():
        segs = sorted(d.segment_ids())
        for q in (dihedral_quandle(3), dihedral_quandle(5)):
            base = count_colorings(d, q)
            for seg in segs:
                assert count_colorings(apply_r1(d, seg, 1), q) == base
                assert count_colorings(apply_r1(d, seg, -1), q) == base
            if len(segs) >= 2:
                for _ in range(3):
                    s1, s2 = rng.sample(segs, 2)
                    d2 = apply_r2(d, s1, s2, rng.choice(R2_VARIANTS))
                    assert count_colorings(d2, q) == base, (name, s1, s2)


def test_constant_colorings():
    for name, d in small_corpus().items():
        if not derive_arcs(d).classes:
            continue  # no arcs: only the empty coloring exists
        for q in (dihedral_quandle(3), dihedral_quandle(5),
                  trivial_quandle(4)):
            constants = count_constant_colorings(d, q)
            assert constants == q.n, name
            assert count_colorings(d, q) >= constants


def test_p_colorability():
    assert is_p_colorable(catalog.trefoil(), 3)
    assert not is_p_colorable(catalog.trefoil(), 5)
    assert is_p_colorable(catalog.figure_eight(), 5)
    assert not is_p_colorable(catalog.figure_eight(), 3)
    assert not is_p_colorable(catalog.unknot(), 3)
    with pytest.raises(QuandleError):
        is_p_colorable(catalog.trefoil(), 4)
