"""homlab: exact graph homomorphism counting, hom-count identities, and
homomorphism-indistinguishability closures for essentially finite classes."""

from .canon import CanonicalForm, are_isomorphic, canonical_form, canonical_graph
from .classes import (
    ClosureDecision,
    GraphClassSpec,
    HdVerdict,
    HomIndDecision,
    ProbeReport,
    SpanCertificate,
    WitnessPair,
    cancellation_admits,
    cancellation_probe,
    class_membership,
    component_basis,
    finite_generating_subclass,
    hd_closed_check,
    homind_decide,
    in_closure,
    make_class_spec,
    parse_class_spec,
    render_class_spec,
    restrict_to_colourable,
    span_membership,
    unvectorize,
    vectorize,
    witness_pair,
)
from .errors import (
    FormulaParseError,
    GraphParseError,
    HomLabError,
    ProbeSearchError,
    SizeBoundError,
)
from .expansions import (
    LinComb,
    PairLinComb,
    expand_complement,
    expand_disjoint_union,
    expand_full_complement,
    expand_lexicographic,
    expand_looped,
    group_by_isomorphism,
    inclusion_exclusion,
    verify_identity,
)
from .fo import (
    check_self_complementarity,
    complement_formula,
    evaluate,
    format_formula,
    free_variables,
    l_equivalent,
    parse_formula,
)
from .graphs import (
    Graph,
    VertexPartition,
    add_loops,
    categorical_product,
    complement,
    connected_components,
    connected_partitions,
    contraction_quotient,
    disjoint_union,
    disjoint_union_all,
    full_complement,
    lexicographic_product,
    parse_graph,
    quotient,
    render_graph,
    triangle_set,
)
from .homcount import hom, hom_vector, homomorphically_equivalent, is_colourable

__all__ = [name for name in dir() if not name.startswith("_")]
