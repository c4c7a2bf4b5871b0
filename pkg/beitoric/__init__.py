"""
beitoric: toricness of binomial edge ideals.

This package builds binomial edge ideals of finite simple graphs, decides
whether they are toric (equivalently lattice, prime) by checking that every
vertex neighborhood is a clique, and verifies the decision independently with
a pure binomial Gröbner engine and an integer-lattice toric construction.
"""

__version__ = "0.1.0"

from .graph_core import (
    Cycle,
    Graph,
    NonCliqueWitness,
    complement,
    connected_components,
    edge_union,
    enumerate_even_cycles,
    incidence_matrix,
    is_locally_complete,
    parse_graph,
    remove_isolated,
)
from .poly_engine import (
    BinomialIdeal,
    MonomialOrder,
    PureBinomial,
    ideal_equal,
    ideal_membership,
    is_homogeneous,
    monomial_compare,
    normal_form,
    reduced_groebner_basis,
    saturate_all,
    saturate_variable,
)
from .lattice_core import (
    IntegerMatrix,
    Lattice,
    PartialCharacter,
    hermite_normal_form,
    integer_kernel_basis,
    is_saturated_lattice,
    lattice_ideal,
)
from .edge_ideals import (
    ToricnessReport,
    binomial_edge_ideal,
    cycle_binomial,
    decide_toric,
    equivalence_report,
    even_cycle_ideal,
    k2n_ideal,
    toric_ideal_of_graph,
    toric_sum_decomposition,
    verify_lattice,
)
from .sweep import run_sample, run_sweep

__all__ = [
    # Graphs
    'Graph',
    'Cycle',
    'NonCliqueWitness',
    'parse_graph',
    'connected_components',
    'is_locally_complete',
    'complement',
    'edge_union',
    'remove_isolated',
    'enumerate_even_cycles',
    'incidence_matrix',

    # Binomial ideals
    'BinomialIdeal',
    'MonomialOrder',
    'PureBinomial',
    'monomial_compare',
    'normal_form',
    'reduced_groebner_basis',
    'ideal_membership',
    'ideal_equal',
    'is_homogeneous',
    'saturate_variable',
    'saturate_all',

    # Lattices
    'IntegerMatrix',
    'Lattice',
    'PartialCharacter',
    'hermite_normal_form',
    'integer_kernel_basis',
    'is_saturated_lattice',
    'lattice_ideal',

    # Edge ideals and the decision
    'ToricnessReport',
    'binomial_edge_ideal',
    'k2n_ideal',
    'cycle_binomial',
    'toric_ideal_of_graph',
    'even_cycle_ideal',
    'decide_toric',
    'verify_lattice',
    'toric_sum_decomposition',
    'equivalence_report',

    # Checks over many graphs
    'run_sweep',
    'run_sample',

    # Version
    '__version__',
]
