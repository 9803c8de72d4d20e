"""Clique-width of (strongly, weakly) H-free bipartite graphs: graphs,
labellings, freeness tests, an exact clique-width engine and classifiers."""
from .classifier import (
    BOUNDED,
    UNBOUNDED,
    Verdict,
    classify,
    classify_strong,
    classify_unlabelled,
    classify_weak,
    p1p5_reduction,
    star_decomposition,
    unbounded_witness_family,
)
from .cliquewidth import (
    Create,
    CwdResult,
    Join,
    Relabel,
    Union,
    certifies,
    cliquewidth_exact,
    cliquewidth_leq,
    cliquewidth_oracle,
    evaluate,
    format_expression,
    parse_expression,
)
from .constructions import (
    bipartite_complement,
    bipartite_complementation,
    delete_vertex,
    disjoint_union,
    from_name,
    make_basic,
    make_subdivided_claw,
    make_wall,
    replicate,
    subdivide,
)
from .errors import BipfreeError, ParseError
from .freeness import (
    FreenessResult,
    in_class_s,
    is_free,
    is_strongly_free,
    is_weakly_free,
    s_decompose,
)
from .graph import (
    BWLabelling,
    Graph,
    LabelledBipartiteGraph,
    are_isomorphic,
    are_labelled_isomorphic,
    b_labelled,
    canonical_b_labelling,
    enumerate_labellings,
    is_bipartite,
    nonequivalent_labellings,
    opposite,
)
from .graphio import parse_graph, read_graph, serialize_graph, write_graph
from .suites import SuiteReport, run_suite

__version__ = "0.1.0"
