"""Squarefree powers of facet ideals of simplicial forests.

Library + CLI for matching invariants (nu, nu0, nu1), squarefree powers,
graded Betti numbers via lcm-lattice interval homology and complement-complex
summation, Castelnuovo-Mumford regularity, and the linearity predicates
(linear resolution, linearly related, linear quotients), with generators and
closed formulas for t-path complexes of paths, rooted trees and brooms.
"""

from .complexes import (
    Complex,
    complement_complex,
    complex_from_json,
    delete_facet_closed,
    induced_subcomplex,
    is_gap,
    make_complex,
)
from .errors import (
    BadParameters,
    BudgetExceeded,
    EmptyFacet,
    EmptyInput,
    FacetOutsideY,
    NotABroomComplex,
    NotAFacet,
    NotAMatching,
    NotAPartialOrder,
    NotCodim1Connected,
    NotEquigenerated,
    NotPure,
    SfpError,
    UniverseMismatch,
    UniverseTooLarge,
    UnknownSuite,
    UnknownVertex,
    ZeroIdeal,
)
from .matchings import (
    enumerate_matchings,
    induced_matching_number,
    is_induced_matching,
    is_matching,
    is_restricted_matching,
    matching_number,
    maximum_induced_matching,
    maximum_matching,
    maximum_restricted_matching,
    restricted_matching_number,
)
from .forests import (
    ONLY_FACET,
    good_leaf_order,
    good_leaf_peel,
    has_intersection_property,
    is_forest,
    is_good_leaf,
    is_leaf,
    leaf_branch,
    proper_chain_distance,
)
from .ideals import (
    Ideal,
    colon_by_monomial,
    facet_complex_of_ideal,
    facet_ideal,
    ideal_from_json,
    ideal_sum,
    squarefree_power,
)
from .homology import (
    GF2,
    QQ,
    Field,
    boundary_matrix,
    connected_components,
    faces_from_facets,
    order_complex,
    parse_field,
    reduced_homology_dims,
)
from .betti import (
    BettiTable,
    LcmLattice,
    betti_gpw,
    betti_hochster,
    betti_one_profile,
    betti_table,
    has_linear_quotients,
    has_linear_resolution,
    is_linearly_related,
    lcm_lattice,
    linearly_related_failure,
    quotient_regularity,
    regularity,
    syzygy_gap_graph,
    verify_linear_quotients_order,
)
from .families import (
    BroomSpec,
    RootedTree,
    broom_facet_order,
    broom_path_complex,
    broom_power_order,
    broom_tree,
    closed_invariants,
    closed_regularity,
    fuzz_equigenerated_ideal,
    fuzz_forest,
    fuzz_pure_complex,
    fuzz_rooted_tree,
    path_complex,
    rooted_tree_path_complex,
)

__version__ = "0.1.0"
