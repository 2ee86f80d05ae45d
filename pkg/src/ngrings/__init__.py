"""Gorenstein and nearly Gorenstein tests for edge rings of complete
multipartite graphs and stable set rings of perfect graphs."""

from .edge_ring import (
    MultipartiteType,
    classify_gorenstein,
    classify_nearly_gorenstein,
    oracle_verdict,
    trace_degree_one,
)
from .errors import InputError, NGError, PreconditionError, ResourceError, UnsupportedCaseError
from .graphs import Graph, connected_components, is_perfect, maximal_cliques, stable_sets
from .hibi import Poset, bipartite_poset, hibi_gorenstein, hibi_nearly_gorenstein
from .stable_set import StabMonomial, a_invariant, classify_stab, trace_oracle_stab

__version__ = "0.1.0"
