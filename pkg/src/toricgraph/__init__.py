"""Toric ideals of graphs: Groebner degenerations, KMY decompositions, and the
graph facts they certify (height formula, bipartiteness under deletion, and
chi(G) <= |E| + 3)."""

from .algebra import Binomial, MonomialOrder, grevlex, lex, make_y_compatible_order, parse_order
from .chromatic import ChromaticCertificate, chromatic_certificate, order_search, principal_shortcut
from .gb import BinomialIdeal, buchberger, ideal_equal, saturate_all
from .graph import Graph, parse_graph, read_graph
from .kmy import KMYDecomposition, deletion_sequence, is_degenerate_toric, kmy_decompose, kmy_decompose_toric
from .toric import graver_basis, height_toric, initial_ideal, toric_ideal

__version__ = "0.1.0"
