"""Shared helpers for the test suite: fixture paths, a small diagram corpus,
and random polynomial generation (seeded; every test run is deterministic).
"""

import os
import random

from sginv import catalog
from sginv.laurent import LaurentPoly

FIXTURE_DIR = os.path.join(os.path.dirname(__file__), "fixtures")


def fixture_path(name):
    return os.path.join(FIXTURE_DIR, name)


def read_fixture(name):
    with open(fixture_path(name), "r", encoding="utf-8") as fh:
        return fh.read()


def small_corpus():
    """Diagrams small enough for repeated whole-diagram skein evaluation."""
    return {
        "unknot": catalog.unknot(),
        "kink_pos": catalog.kinked_unknot(1),
        "kink_neg": catalog.kinked_unknot(-1),
        "trefoil": catalog.trefoil(),
        "figure_eight": catalog.figure_eight(),
        "theta_trivial": catalog.theta_trivial(),
    }


def knot_corpus():
    return {
        "kink_pos": catalog.kinked_unknot(1),
        "trefoil": catalog.trefoil(),
        "figure_eight": catalog.figure_eight(),
        "torus_2_5": catalog.torus_2_5(),
        "knot_5_2": catalog.knot_5_2(),
    }


def random_laurent(rng: random.Random, var="t", max_terms=5, span=6, cmax=9):
    pairs = {}
    for _ in range(rng.randrange(max_terms + 1)):
        pairs[rng.randrange(-span, span + 1)] = rng.randrange(-cmax, cmax + 1)
    return LaurentPoly(pairs, var)


def random_unit(rng: random.Random, var="t", span=4):
    return LaurentPoly.monomial(rng.choice((1, -1)),
                                rng.randrange(-span, span + 1), var)
