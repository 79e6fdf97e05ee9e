"""Spatial graph invariants: Yamada and Alexander polynomials, quandle
colorings, Wirtinger presentations, and constituent-link data."""

from .diagram import (Crossing, Diagram, DiagramError, VertexNode,
                      derive_arcs, derive_edges, parse_diagram, parse_document,
                      resolve_crossing, serialize, validate)
from .graphs import (AbstractGraph, canonical_certificate, contract_edge,
                     delete_edge, to_abstract_graph)
from .laurent import LaurentPoly, bareiss_det, laurent_gcd
from .moves import (apply_r1, apply_r1_traced, apply_r2, apply_r2_traced,
                    disjoint_union, mirror, transport_weights)
from .yamada import YamadaResult, eval_crossing_free, sigma, yamada_normalized, yamada_raw
from .alexander import (alexander_polynomial, build_alexander_matrix,
                        check_balanced, gcd_of_minors, graph_determinant,
                        uniform_weights, wirtinger_presentation)
from .quandle import (FiniteQuandle, count_colorings, dihedral_quandle,
                      is_p_colorable, trivial_quandle, verify_quandle)
from .constituents import (conway_gordon_sum, constituent_fingerprint,
                           enumerate_constituents, hamiltonian_constituents)

__version__ = "0.1.0"
