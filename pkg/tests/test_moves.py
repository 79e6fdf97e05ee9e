"""Reidemeister move generators: structural checks, provenance tracing,
weight transport, mirror, and disjoint union."""

import random

import pytest

from sginv import catalog
from sginv.diagram import DiagramError, derive_edges, validate
from sginv.moves import (R2_VARIANTS, apply_r1, apply_r1_traced, apply_r2,
                         apply_r2_traced, disjoint_union, mirror,
                         transport_weights)

from helpers import small_corpus


def test_r1_structure():
    for name, d in small_corpus().items():
        for seg in sorted(d.segment_ids()):
            for ch in (1, -1):
                r = apply_r1(d, seg, ch)
                assert validate(r) == [], (name, seg, ch)
                assert len(r.crossings) == len(d.crossings) + 1
                assert len(r.segment_ids()) == len(d.segment_ids()) + 2
                assert len(derive_edges(r)) == len(derive_edges(d))
                signs = sorted(c.sign for c in r.crossings)
                assert signs == sorted([c.sign for c in d.crossings] + [ch])


def test_r1_rejects_bad_input():
    tre = catalog.trefoil()
    with pytest.raises(DiagramError):
        apply_r1(tre, 99, 1)
    with pytest.raises(ValueError):
        apply_r1(tre, 1, 0)


def test_r2_structure():
    rng = random.Random(2024)
    for name, d in small_corpus().items():
        segs = sorted(d.segment_ids())
        if len(segs) < 2:
            continue
        for _ in range(6):
            s1, s2 = rng.sample(segs, 2)
            variant = rng.choice(R2_VARIANTS)
            r = apply_r2(d, s1, s2, variant)
            assert validate(r) == [], (name, s1, s2, variant)
            assert len(r.crossings) == len(d.crossings) + 2
            assert len(r.segment_ids()) == len(d.segment_ids()) + 4
            signs = sorted(c.sign for c in r.crossings)
            assert signs == sorted([c.sign for c in d.crossings] + [1, -1])


def test_r2_rejects_bad_input():
    tre = catalog.trefoil()
    with pytest.raises(DiagramError):
        apply_r2(tre, 1, 1)
    with pytest.raises(ValueError):
        apply_r2(tre, 1, 2, "sideways")


def test_traced_provenance_covers_new_segments():
    tre = catalog.trefoil()
    r, prov = apply_r1_traced(tre, 1, 1)
    assert set(prov.values()) == {1}
    assert set(prov) == r.segment_ids() - tre.segment_ids()
    r, prov = apply_r2_traced(tre, 1, 3, "under-")
    assert set(prov.values()) == {1, 3}
    assert set(prov) == r.segment_ids() - tre.segment_ids()


def test_transport_weights_preserves_edge_weights():
    th = catalog.theta_trivial()
    w = {"e1": 1, "e2": 1, "e3": -2}
    rng = random.Random(5150)
    for _ in range(25):
        d, weights = th, dict(w)
        for _ in range(4):
            segs = sorted(d.segment_ids())
            if rng.random() < 0.5:
                d2, prov = apply_r1_traced(d, rng.choice(segs),
                                           rng.choice((1, -1)))
            else:
                s1, s2 = rng.sample(segs, 2)
                d2, prov = apply_r2_traced(d, s1, s2,
                                           rng.choice(R2_VARIANTS))
            weights = transport_weights(d, weights, d2, prov)
            d = d2
        assert sorted(weights.values()) == [-2, 1, 1]


def test_mirror_is_an_involution_and_flips_signs():
    for name, d in small_corpus().items():
        m = mirror(d)
        assert validate(m) == [], name
        assert mirror(m) == d
        assert [c.sign for c in m.crossings] == \
            [-c.sign for c in d.crossings]


def test_disjoint_union_structure():
    a = catalog.trefoil()
    b = catalog.theta_trivial()
    u = disjoint_union(a, b)
    assert validate(u) == []
    assert len(u.crossings) == len(a.crossings) + len(b.crossings)
    assert len(u.vertices) == len(a.vertices) + len(b.vertices)
    assert len(u.segment_ids()) == len(a.segment_ids()) + len(b.segment_ids())
    assert u.free_loops == a.free_loops + b.free_loops
