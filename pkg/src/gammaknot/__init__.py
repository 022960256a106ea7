"""Knot-diagram combinatorics: edge metric, disk cuts, tangles and the doubled figure-eight move."""

from .diagram import UNKNOT, Crossing, Diagram, DiagramError, Face, parse_pd, serialize
from .invariants import connected_sum, identify, jones, kauffman_bracket, span_t
from .metric import EdgePair, chain_split, far_pair, neighboring_pairs, rho
from .polynomial import LaurentPoly
from .rewrite import DOUBLE_FIG8, crossing_change, gamma_knot, mirror, reidemeister1, splice
from .tangle import TangleDiagram2, cut_disk, local_knot_scan, strand_stats, tangle_sum

__all__ = [
    "Crossing",
    "DOUBLE_FIG8",
    "Diagram",
    "DiagramError",
    "EdgePair",
    "Face",
    "LaurentPoly",
    "TangleDiagram2",
    "UNKNOT",
    "chain_split",
    "connected_sum",
    "crossing_change",
    "cut_disk",
    "far_pair",
    "gamma_knot",
    "identify",
    "jones",
    "kauffman_bracket",
    "local_knot_scan",
    "mirror",
    "neighboring_pairs",
    "parse_pd",
    "reidemeister1",
    "rho",
    "serialize",
    "span_t",
    "splice",
    "strand_stats",
    "tangle_sum",
]
