"""Exact determinant algebra of j-joined directed graphs."""

from .algebra import (IDENTITY, OTHER, ZERO, ClassLabel, Invertible, NClass, chain_det,
                      chain_phi, classify, decompose_join_det, equivalent, graph_det,
                      join_det_via_phi, make_identity, make_n_class, nfold_det, nfold_phi,
                      phi, phi_monoid)
from .errors import GraphIndexError, JoinDetError, ParseError, PreconditionError
from .graph import (Digraph, Handle, apply_modification, attach_handles, delete_vertices,
                    disjoint_union, j_join, join_chain, make_complete, make_edgeless,
                    make_path, random_digraph, resolve_index)
from .io import parse_graph, read_graph, serialize_graph, write_graph
from .linalg import IntMatrix, det_exact, mat_mul, mat_pow, sandwich_power, sandwich_product
from .oracle import det_cycle_covers, det_permutations
from .pairs import (ModPair, build_sign_matrix, conjugate_pair, enumerate_pairs,
                    is_allowable, pair_sign)

__version__ = "0.1.0"
