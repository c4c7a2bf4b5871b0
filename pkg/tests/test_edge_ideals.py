"""Tests for binomial edge ideals, toric ideals of graphs and the toricness decision."""

import itertools

import pytest
import sympy
from sympy.utilities.iterables import multiset_partitions

from beitoric.edge_ideals import (
    PRIMALITY_NOTE,
    EdgeIdealAmbient,
    ToricnessReport,
    binomial_edge_ideal,
    certify_witness,
    cycle_binomial,
    decide_toric,
    equivalence_report,
    even_cycle_ideal,
    k2n_ideal,
    k2n_toric_correspondence,
    neighborhood_syzygy,
    toric_ideal_of_graph,
    toric_sum_decomposition,
    verify_lattice,
)
from beitoric.errors import (
    InternalInconsistencyError,
    NonBipartiteError,
    NotACycleError,
    NotLocallyCompleteError,
    OddCycleError,
)
from beitoric.graph_core import (
    Cycle,
    Graph,
    NonCliqueWitness,
    complement,
    complete_bipartite_graph,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    edge_union,
    empty_graph,
    path_graph,
    remove_isolated,
)
from beitoric.poly_engine import (
    BinomialIdeal,
    MonomialOrder,
    PureBinomial,
    format_ideal,
    ideal_equal,
    ideal_membership,
    reduced_groebner_basis,
    rename_variables,
    saturate_all,
    xy_variable_names,
)
from beitoric.sampling import make_rng, random_clique_union, random_graph


def all_graphs(n):
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    for mask in range(2 ** len(pairs)):
        yield Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def small_graphs(max_n=4):
    for n in range(1, max_n + 1):
        yield from all_graphs(n)


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def test_ambient_layout():
    """Test the x-block then y-block variable layout."""
    ambient = EdgeIdealAmbient(3)

    assert ambient.num_vars == 6
    assert ambient.x_index(1) == 0
    assert ambient.y_index(1) == 3
    assert ambient.variable_names() == ["x1", "x2", "x3", "y1", "y2", "y3"]
    assert ambient.f(1, 2) == PureBinomial((1, 0, 0, 0, 1, 0), (0, 1, 0, 1, 0, 0))

    with pytest.raises(ValueError, match="outside"):
        ambient.x_index(4)
    with pytest.raises(ValueError, match="distinct"):
        ambient.f(2, 2)


def test_binomial_edge_ideal_examples():
    """Test generators of small binomial edge ideals."""
    single = binomial_edge_ideal(Graph.from_edges(2, [(1, 2)]))
    p3 = binomial_edge_ideal(path_graph(3))

    assert format_ideal(single, xy_variable_names(2)) == ["x1*y2 - x2*y1"]
    assert format_ideal(p3, xy_variable_names(3)) == ["x1*y2 - x2*y1", "x2*y3 - x3*y2"]
    assert binomial_edge_ideal(empty_graph(3)).is_zero


def test_k2n_ideal():
    """Test the ideal of all f_ij and its embedding."""
    assert k2n_ideal(1).is_zero
    assert len(k2n_ideal(2).generators) == 1
    assert set(k2n_ideal(3).generators) == set(binomial_edge_ideal(complete_graph(3)).generators)

    embedded = k2n_ideal(2, {1: 4, 2: 2}, ambient_n=4)
    assert embedded.generators == (EdgeIdealAmbient(4).f(2, 4),)

    with pytest.raises(ValueError, match="at least 1"):
        k2n_ideal(0)
    with pytest.raises(ValueError, match="injective"):
        k2n_ideal(2, {1: 3, 2: 3}, ambient_n=4)
    with pytest.raises(ValueError, match="vertex range"):
        k2n_ideal(2, {1: 1, 2: 5}, ambient_n=4)


def test_cycle_binomial_examples():
    """Test T_W on small cycles with lexicographic edge variables."""
    c4 = cycle_graph(4)
    c6 = cycle_graph(6)

    # edges of C4: t1={1,2}, t2={1,4}, t3={2,3}, t4={3,4}
    assert cycle_binomial(Cycle((1, 2, 3, 4)), c4) == PureBinomial((1, 0, 0, 1), (0, 1, 1, 0))
    # edges of C6: t1={1,2}, t2={1,6}, t3={2,3}, t4={3,4}, t5={4,5}, t6={5,6}
    assert cycle_binomial(Cycle((1, 2, 3, 4, 5, 6)), c6) == PureBinomial((1, 0, 0, 1, 0, 1), (0, 1, 1, 0, 1, 0))


def test_cycle_binomial_errors():
    """Test that odd cycles and foreign cycles are rejected."""
    with pytest.raises(OddCycleError):
        cycle_binomial(Cycle((1, 2, 3)), complete_graph(3))

    with pytest.raises(NotACycleError):
        cycle_binomial(Cycle((1, 3, 2, 4)), cycle_graph(4))


def test_toric_ideal_of_graph_examples():
    """Test toric ideals of small graphs."""
    c4 = toric_ideal_of_graph(cycle_graph(4))
    assert ideal_equal(c4, BinomialIdeal(4, (PureBinomial((1, 0, 0, 1), (0, 1, 1, 0)),)))

    assert toric_ideal_of_graph(complete_graph(3)).is_zero
    assert toric_ideal_of_graph(empty_graph(3)).is_zero

    k23 = toric_ideal_of_graph(complete_bipartite_graph(2, 3))
    assert len(k23.generators) == 3
    assert all(sum(f.lead) == 2 and sum(f.trail) == 2 for f in k23.generators)


@pytest.mark.parametrize(
    "g",
    [
        cycle_graph(4),
        cycle_graph(6),
        cycle_graph(8),
        complete_bipartite_graph(2, 2),
        complete_bipartite_graph(2, 3),
        complete_bipartite_graph(3, 3),
    ],
    ids=["C4", "C6", "C8", "K22", "K23", "K33"],
)
def test_even_cycle_ideal_equals_toric_ideal(g):
    """Test that even cycles generate the toric ideal of a bipartite graph."""
    assert ideal_equal(even_cycle_ideal(g), toric_ideal_of_graph(g))


def test_even_cycle_ideal_rejects_non_bipartite():
    """Test that odd cycles make even-cycle generation unavailable."""
    with pytest.raises(NonBipartiteError):
        even_cycle_ideal(cycle_graph(5))


@pytest.mark.parametrize("n", [2, 3, 4, 5, pytest.param(6, marks=pytest.mark.slow)])
def test_complete_graph_ideal_is_toric_ideal_of_k2n(n):
    """Test J_{K_n} = I_{K_{2,n}} under x_i <-> {s1,t_i}, y_i <-> {s2,t_i}."""
    assert ideal_equal(binomial_edge_ideal(complete_graph(n)), k2n_toric_correspondence(n))


def test_edge_ideal_contained_in_complete_ideal():
    """Test that every generator of J_G is a generator of I_{K_{2,n}}."""
    for g in small_graphs(4):
        if len(connected_components(g)) != 1:
            continue
        complete = set(k2n_ideal(g.n).generators)
        toric = k2n_toric_correspondence(g.n)
        for f in binomial_edge_ideal(g).generators:
            assert f in complete
            assert ideal_membership(f, toric)


# ---------------------------------------------------------------------------
# structural properties of J_G
# ---------------------------------------------------------------------------

def test_isolated_vertices_do_not_change_the_basis():
    """Test that dropping isolated vertices and renaming back gives the same reduced basis."""
    for g in small_graphs(4):
        h, relabel = remove_isolated(g)
        if h.n == g.n:
            continue
        inverse = {new: old for old, new in relabel.items()}
        mapping = {}
        for a in range(1, h.n + 1):
            mapping[a - 1] = inverse[a] - 1
            mapping[h.n + a - 1] = g.n + inverse[a] - 1
        moved = rename_variables(
            BinomialIdeal(2 * h.n, tuple(reduced_groebner_basis(binomial_edge_ideal(h)))),
            mapping,
            2 * g.n,
        )
        assert set(reduced_groebner_basis(binomial_edge_ideal(g))) == set(moved.generators)


def test_reduced_basis_determines_the_graph():
    """Test that the 64 labeled graphs on 4 vertices have pairwise distinct reduced bases."""
    bases = {frozenset(reduced_groebner_basis(binomial_edge_ideal(g))) for g in all_graphs(4)}

    assert len(bases) == 64


def test_edge_union_adds_generators():
    """Test J_{G1 ∪ G2} = J_{G1} + J_{G2} at the generator level."""
    rng = make_rng(17)
    for _ in range(100):
        n = int(rng.integers(2, 7))
        first, second = random_graph(n, rng), random_graph(n, rng)
        union = binomial_edge_ideal(edge_union(first, second))
        assert set(union.generators) == set(binomial_edge_ideal(first).generators) | set(
            binomial_edge_ideal(second).generators
        )


def test_graph_and_complement_give_complete_ideal():
    """Test J_G + J_{complement} = J_{K_n}."""
    for g in small_graphs(4):
        total = binomial_edge_ideal(g) + binomial_edge_ideal(complement(g))
        assert ideal_equal(total, binomial_edge_ideal(complete_graph(g.n)))


def test_generators_split_by_component():
    """Test that generators partition by connected component."""
    for g in small_graphs(4):
        generators = set(binomial_edge_ideal(g).generators)
        ambient = EdgeIdealAmbient(g.n)
        parts = []
        for block in connected_components(g):
            parts.append({ambient.f(i, j) for i, j in g.sorted_edges if i in block})
        assert set().union(*parts) == generators
        assert sum(len(p) for p in parts) == len(generators)


def test_engine_invariants_over_small_graphs():
    """Test saturation and basis invariants on every graph with at most four vertices."""
    for g in small_graphs(4):
        j = binomial_edge_ideal(g)
        basis = reduced_groebner_basis(j)
        assert all(f.lead != f.trail for f in basis)
        assert reduced_groebner_basis(BinomialIdeal(j.num_vars, tuple(reversed(j.generators)))) == basis

        saturated = saturate_all(j)
        assert all(ideal_membership(f, saturated) for f in j.generators)
        assert ideal_equal(saturate_all(saturated), saturated)


def test_membership_is_order_invariant():
    """Test that f_ij ∈ J_G exactly for edges, under three different orders."""
    for g in small_graphs(4):
        j = binomial_edge_ideal(g)
        ambient = EdgeIdealAmbient(g.n)
        orders = [
            MonomialOrder.lex(j.num_vars),
            MonomialOrder.grevlex(j.num_vars),
            MonomialOrder.lex(j.num_vars, priority=list(reversed(range(j.num_vars)))),
        ]
        for i, k in itertools.combinations(g.vertices, 2):
            answers = {ideal_membership(ambient.f(i, k), j, order) for order in orders}
            assert answers == {g.has_edge(i, k)}


# ---------------------------------------------------------------------------
# the decision
# ---------------------------------------------------------------------------

def test_neighborhood_syzygy_cancels():
    """Test the neighborhood identity for every ordered triple with n <= 5."""
    for n in range(3, 6):
        for k, i, j in itertools.permutations(range(1, n + 1), 3):
            assert neighborhood_syzygy(n, k, i, j) == {}

    with pytest.raises(ValueError, match="distinct"):
        neighborhood_syzygy(3, 1, 1, 2)


def test_neighborhood_syzygy_symbolic():
    """Test the same identity with sympy."""
    x = sympy.symbols("x1:4")
    y = sympy.symbols("y1:4")
    i, j, k = 0, 1, 2
    expr = (
        y[k] * (y[i] * x[j] - y[j] * x[i])
        - y[j] * (x[k] * y[i] - x[i] * y[k])
        + y[i] * (x[k] * y[j] - x[j] * y[k])
    )

    assert sympy.expand(expr) == 0


def test_decide_toric_examples():
    """Test the criterion on small graphs."""
    p3 = decide_toric(path_graph(3))
    assert p3.is_toric is False
    assert p3.witness == NonCliqueWitness(2, 1, 3)
    assert p3.decomposition is None
    assert p3.verified is None

    union = decide_toric(disjoint_union(complete_graph(3), complete_graph(2)))
    assert union.is_toric is True
    assert union.components == ((1, 2, 3), (4, 5))
    assert len(union.decomposition) == 2

    assert decide_toric(cycle_graph(4)).is_toric is False


def test_decide_toric_with_verification():
    """Test that verification agrees with the criterion."""
    assert decide_toric(complete_graph(3), verify=True).verified is True
    assert decide_toric(path_graph(3), verify=True).verified is False
    assert decide_toric(path_graph(3), verify=True, order="lex").verified is False


def test_verify_lattice_examples():
    """Test the saturation test on its own."""
    assert verify_lattice(path_graph(3)) is False
    assert verify_lattice(complete_graph(3)) is True
    assert verify_lattice(empty_graph(3)) is True


def test_toricness_report_invariants():
    """Test that inconsistent reports cannot be built."""
    with pytest.raises(InternalInconsistencyError):
        ToricnessReport(n=1, components=((1,),), is_toric=True, verified=False, decomposition=())

    with pytest.raises(InternalInconsistencyError):
        ToricnessReport(n=3, components=((1, 2, 3),), is_toric=True, witness=NonCliqueWitness(2, 1, 3))


def test_toricness_report_to_dict():
    """Test the JSON shape of a report."""
    report = decide_toric(Graph.from_edges(4, [(1, 2), (3, 4)]))

    assert report.to_dict() == {
        "n": 4,
        "components": [[1, 2], [3, 4]],
        "is_toric": True,
        "witness": None,
        "verified": None,
        "decomposition": [
            {"component": [1, 2], "generators": ["x1*y2 - x2*y1"]},
            {"component": [3, 4], "generators": ["x3*y4 - x4*y3"]},
        ],
    }
    assert decide_toric(path_graph(3)).to_dict()["witness"] == {"k": 2, "i": 1, "j": 3}


def test_criterion_matches_saturation_on_small_graphs():
    """Test decide_toric against verify_lattice on every graph with at most four vertices."""
    for g in small_graphs(4):
        assert decide_toric(g).is_toric == verify_lattice(g)


def test_toric_counts_are_set_partition_counts():
    """Test that toric graphs on n vertices correspond to set partitions."""
    for n in range(1, 5):
        toric = sum(1 for g in all_graphs(n) if decide_toric(g).is_toric)
        assert toric == len(list(multiset_partitions(list(range(n)))))


def test_toric_sum_decomposition_examples():
    """Test the block decomposition on clique unions."""
    k4 = toric_sum_decomposition(complete_graph(4))
    assert len(k4.blocks) == 1
    assert k4.certified
    assert ideal_equal(binomial_edge_ideal(complete_graph(4)), k2n_toric_correspondence(4))

    union = toric_sum_decomposition(disjoint_union(complete_graph(3), complete_graph(2)))
    assert [b.component for b in union.blocks] == [(1, 2, 3), (4, 5)]

    edgeless = toric_sum_decomposition(empty_graph(2))
    assert [b.component for b in edgeless.blocks] == [(1,), (2,)]
    assert all(b.ideal.is_zero for b in edgeless.blocks)
    assert edgeless.total.is_zero


def test_toric_sum_decomposition_rejects_non_toric():
    """Test that a non-clique neighborhood is reported."""
    with pytest.raises(NotLocallyCompleteError, match="Vertex 2"):
        toric_sum_decomposition(path_graph(3))


def test_toric_sum_decomposition_random_clique_unions():
    """Test J_G = sum of K_{2,n_i} blocks on random clique unions."""
    rng = make_rng(42)
    for _ in range(20):
        g = random_clique_union(rng, max_total=10)
        decomposition = toric_sum_decomposition(g)
        assert ideal_equal(binomial_edge_ideal(g), decomposition.total)


def test_certify_witness():
    """Test that witnesses exhibit an element of the saturation outside J_G."""
    assert certify_witness(path_graph(3), NonCliqueWitness(2, 1, 3))
    assert certify_witness(cycle_graph(4), NonCliqueWitness(1, 2, 4))
    # f_13 is already a generator of K_3
    assert not certify_witness(complete_graph(3), NonCliqueWitness(2, 1, 3))


def test_equivalence_report_examples():
    """Test the equivalent conditions on toric and non-toric graphs."""
    k3 = equivalence_report(complete_graph(3))
    assert k3.locally_complete and k3.components_complete and k3.lattice and k3.toric_sum
    assert k3.prime is True
    assert k3.witness_certified is None

    p3 = equivalence_report(path_graph(3))
    assert not (p3.locally_complete or p3.components_complete or p3.lattice or p3.toric_sum)
    assert p3.prime is False
    assert p3.witness_certified is True

    edgeless = equivalence_report(empty_graph(3))
    assert edgeless.lattice and edgeless.toric_sum


def test_equivalence_report_to_dict():
    """Test that primality is marked as not computed."""
    payload = equivalence_report(path_graph(3)).to_dict()

    assert payload["prime"] == {"value": False, "computed": False, "note": PRIMALITY_NOTE}
    assert payload["lattice"] is False
