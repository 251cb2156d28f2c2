"""Class-counting polynomials of graphical groups.

Exact integer computation of the bivariate polynomials that count conjugacy
classes of the class-2 nilpotent groups attached to simple graphs, together
with independent oracles (finite-field rank enumeration and explicit group
construction) used to cross-check them.
"""

from .engine import compute_C, compute_F, compute_f, eta, graph_report
from .graphs import Graph, parse_graph6

__all__ = ["Graph", "parse_graph6", "compute_C", "compute_F", "compute_f", "eta", "graph_report"]
__version__ = "0.1.0"
