"""Exact computation of drum widths and width certificates for 5-dimensional drums."""
from .drum import (Drum, facet_vertex_map, has_oriented_two_cycle, incidence_pattern, make_drum,
                   pair_embedding_by_enumeration, pair_in_image_lp, trimmed_graph, width, width_trimmed)
from .errors import *  # noqa: F401,F403
from .exactcore import AffineFunctional, lp_max_margin, solve_linear
from .family import (DkDrum, FamilyParams, build_Dk, build_from_motif, build_santos, default_params,
                     validate_params)
from .polytope import VertexPolytope, enumerate_facets, face_graph, facet_ridge_graph
from .search import SearchConfig, run_search
from .symmetry import SIGMA, TAU, SignedPerm, gamma, gamma_plus
from .verify import WidthCertificate, certify_width_lower_bound, report

__version__ = "0.1.0"
