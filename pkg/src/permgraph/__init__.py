"""Recognition, construction, and counting of 3-regular inversion graphs.

The package centers on one family: connected 3-regular graphs that are
inversion graphs of permutations.  It recognizes them (with certificates
or forbidden-subgraph witnesses), builds every member by order, extends
the construction to r-regular families, and counts them three independent
ways that crosscheck() compares.
"""

from .blowups import (
    BlowupPart,
    BlowupSpec,
    apply_blowup,
    blowup_realizer,
    compose,
    format_blowup_spec,
    is_blowup_of_path,
    minimal_base,
    parse_blowup_spec,
    parse_part,
    twin_partition,
)
from .boxcars import (
    CubicClassification,
    boxcar_blowup_spec,
    boxcar_graph,
    boxcar_hamiltonian_path,
    boxcar_order,
    boxcar_realizer,
    canonicalize_sequence,
    classify_cubic,
    format_sequence,
    gadget_graph,
    gadget_terminals,
    parse_sequence,
    realizer_for_path_spec,
    regular_family,
    regular_family_realizer,
    regular_family_spec,
)
from .enumeration import (
    CountTable,
    CrosscheckReport,
    build_count_table,
    census_cubic,
    compositions_23,
    count_compositions_23,
    count_cubic,
    crosscheck,
    crosscheck_to_json,
    format_compositions_tsv,
    format_counts_tsv,
    format_crosscheck_text,
    generate_graphs,
    generate_sequences,
)
from .errors import (
    CapacityError,
    DomainError,
    MalformedInputError,
    ParseError,
    PermgraphError,
)
from .generation import connected_cubic_graphs, connected_graphs_bounded_degree
from .graphs import (
    Graph,
    are_isomorphic,
    build_graph,
    canonical_graph6,
    complement,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    contains_induced,
    cycle_graph,
    decode_graph6,
    empty_graph,
    encode_graph6,
    format_edgelist,
    hamiltonian_path_bruteforce,
    has_ladder_subgraph,
    has_large_hole,
    induced_subgraph,
    is_connected,
    is_planar,
    is_regular,
    ladder_graph,
    parse_edgelist,
    path_graph,
    to_dot,
)
from .permutations import (
    ForbiddenCatalog,
    Permutation,
    RealizerCertificate,
    certificate_realizes,
    derive_forbidden_catalog,
    find_realizer,
    format_catalog,
    format_permutation,
    graph_from_permutation,
    inversions,
    is_cubic_permutation_graph_fast,
    is_permutation_graph,
    load_forbidden_catalog,
    normalize_twins,
    parse_catalog,
    parse_permutation,
    reverse_permutation,
)
from .report import write_report

__version__ = "0.1.0"
