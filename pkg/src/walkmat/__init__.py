"""walkmat: exact verification of walk-matrix determinant identities for
rooted products of graphs with paths."""

from .cheb import (
    IndexSet,
    cones_matrix,
    f_poly,
    has_consecutive_ones,
    s_poly,
    s_product_indexset,
    s_sum_poly,
    u_poly,
)
from .family import (
    FamilyClosureError,
    FamilyStep,
    FMembership,
    build_family,
    f_member,
    search_f,
    verify_detA_closure,
)
from .graphs import (
    Graph,
    Graph6Error,
    RootedProductSpec,
    complement,
    delete_vertex,
    enumerate_graphs,
    graph6_decode,
    graph6_encode,
    graph_from_edges,
    parse_edge_list,
    path_graph,
    rooted_product_path,
)
from .kernels import BACKEND
from .matrix import (
    ExactMatrix,
    adjacency_det,
    adjacency_matrix,
    charpoly_berkowitz,
    det_bareiss,
    det_berkowitz,
    graph_charpoly,
    kronecker,
    walk_det,
    walk_matrix,
)
from .polys import IntPolynomial
from .reports import VerificationReport
from .resultants import (
    BivarPolynomial,
    poly_gcd_degree,
    resultant_bivar,
    resultant_int,
    sylvester,
    verify_res1,
    verify_res2,
)
from .verify import (
    numeric_eigenpairs,
    product_charpoly,
    numeric_fk_vandermonde,
    numeric_walkdet,
    verify_charpoly_factorization,
    verify_main,
    verify_simple_spectrum_iff,
    wronskian_vertex,
)

__version__ = "0.1.0"
