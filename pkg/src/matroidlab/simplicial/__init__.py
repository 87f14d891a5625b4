"""Kruskal–Katona shadows, extremal complexes and vertex decomposability."""
from .kk import (CascadeRep, cascade, delta, is_valid_fvector, shadow, squashed_key, squashed_less,
                 squashed_order, squashed_prefix, squashed_prefix_avoiding)
from .complex import (Complex, extremal_decomposition, extremal_shedding_vertex, is_extremal,
                      is_vertex_decomposable, maximal, verify_shedding)
