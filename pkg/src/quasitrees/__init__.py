"""Quasi-tree counting for ribbon graphs: brute force, determinants,
delta-matroids and the closed forms for the standard bouquet families."""

from .chords import FramedChordDiagram, chord_diagram_from_bouquet, intersection_matrix
from .deltamatroid import SetSystem, from_ribbon_graph
from .families import FAMILIES, make_family, predicted_charpoly, predicted_kappa
from .linalg import IntPolynomial, char_poly, det_exact, kappa_by_determinant
from .ribbon import (
    RibbonGraph,
    RibbonGraphError,
    boundary_components,
    contract_edge,
    delete_edge,
    parse_signed_rotation,
    partial_dual,
    partial_petrial,
    quasi_tree_count,
)

__version__ = "0.1.0"
