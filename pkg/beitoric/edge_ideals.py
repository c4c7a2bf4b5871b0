"""
Binomial edge ideals of graphs, their toric counterparts, and the decision
whether a binomial edge ideal is a lattice (equivalently toric, prime) ideal.

Layout of the edge-ideal ring for a graph on ``n`` vertices: ``x_1..x_n`` at
indices ``0..n-1`` and ``y_1..y_n`` at indices ``n..2n-1``.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Any, Dict, List, Mapping, Optional, Tuple, Union

from .errors import (
    InternalInconsistencyError,
    NonBipartiteError,
    NotACycleError,
    NotLocallyCompleteError,
    OddCycleError,
)
from .graph_core import (
    Cycle,
    Graph,
    NonCliqueWitness,
    complete_bipartite_graph,
    components_are_cliques,
    connected_components,
    enumerate_even_cycles,
    incidence_matrix,
    is_bipartite,
    is_locally_complete,
)
from .lattice_core import integer_kernel_basis, lattice_ideal
from .poly_engine import (
    BinomialIdeal,
    Monomial,
    MonomialOrder,
    OrderKind,
    PureBinomial,
    format_ideal,
    ideal_equal,
    ideal_membership,
    monomial_mul,
    rename_variables,
    saturate_all,
    signed_terms,
    sum_ideals,
    unit_monomial,
    xy_variable_names,
)
from .utils import log_stage

logger = logging.getLogger(__name__)

# even_cycle_ideal is cross-checked against the kernel construction up to here
EVEN_CYCLE_CHECK_MAX_N = 10


@dataclass(frozen=True)
class EdgeIdealAmbient:
    """The ring ``K[x_1..x_n, y_1..y_n]`` of a graph on ``n`` vertices."""

    n: int

    @property
    def num_vars(self) -> int:
        return 2 * self.n

    def x_index(self, i: int) -> int:
        self._check(i)
        return i - 1

    def y_index(self, i: int) -> int:
        self._check(i)
        return self.n + i - 1

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise ValueError(f"Vertex {i} is outside 1..{self.n}")

    def variable_names(self) -> List[str]:
        return xy_variable_names(self.n)

    def monomial(self, *factors: Tuple[str, int]) -> Monomial:
        """Product of ``("x", i)`` / ``("y", i)`` factors."""
        exps = [0] * self.num_vars
        for letter, i in factors:
            exps[self.x_index(i) if letter == "x" else self.y_index(i)] += 1
        return tuple(exps)

    def f(self, i: int, j: int) -> PureBinomial:
        """``f_ij = x_i y_j - x_j y_i``."""
        if i == j:
            raise ValueError(f"f_ij needs distinct indices, got {i} twice")
        return PureBinomial(self.monomial(("x", i), ("y", j)), self.monomial(("x", j), ("y", i)))


def binomial_edge_ideal(g: Graph) -> BinomialIdeal:
    """``J_G``: one generator ``f_ij`` (``i < j``) per edge, canonical edge order."""
    ambient = EdgeIdealAmbient(g.n)
    return BinomialIdeal(ambient.num_vars, tuple(ambient.f(i, j) for i, j in g.sorted_edges))


def k2n_ideal(n: int, embedding: Optional[Mapping[int, int]] = None, ambient_n: Optional[int] = None) -> BinomialIdeal:
    """
    The ideal generated by all ``f_ij``, ``1 <= i < j <= n``.

    With an ``embedding`` the index ``k`` stands for vertex ``embedding[k]`` of
    a graph on ``ambient_n`` vertices, so the ideal lives in that graph's ring.
    Each generator is written with the smaller label first.

    Raises:
        ValueError: If ``n < 1`` or the embedding is not injective or in range
    """
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if embedding is None:
        embedding = {k: k for k in range(1, n + 1)}
    if ambient_n is None:
        ambient_n = n
    if sorted(embedding) != list(range(1, n + 1)):
        raise ValueError(f"Embedding must be defined exactly on 1..{n}")
    labels = [embedding[k] for k in range(1, n + 1)]
    if len(set(labels)) != n:
        raise ValueError("Embedding must be injective")
    if any(not 1 <= v <= ambient_n for v in labels):
        raise ValueError(f"Embedding leaves the vertex range 1..{ambient_n}")
    ambient = EdgeIdealAmbient(ambient_n)
    gens = tuple(ambient.f(min(a, b), max(a, b)) for a, b in itertools.combinations(labels, 2))
    return BinomialIdeal(ambient.num_vars, gens)


def cycle_binomial(w: Cycle, g: Graph) -> PureBinomial:
    """
    ``T_W``: odd-position edge variables minus even-position edge variables.

    Positions run along ``w`` as given; edge variables are numbered by the
    canonical edge order of ``g``.

    Raises:
        NotACycleError: If ``w`` is not a cycle of ``g``
        OddCycleError: If ``w`` has odd length
    """
    if not w.lies_in(g):
        raise NotACycleError(f"{w.vertices} is not a cycle of the graph")
    if not w.is_even:
        raise OddCycleError(f"Cycle {w.vertices} has odd length {w.length}")
    index = g.edge_index()
    odd = [0] * g.num_edges
    even = [0] * g.num_edges
    for position, edge in enumerate(w.traversal_edges(), start=1):
        (odd if position % 2 else even)[index[edge]] += 1
    return PureBinomial(tuple(odd), tuple(even))


def toric_ideal_of_graph(g: Graph) -> BinomialIdeal:
    """``I_G`` in the edge variables ``t_1..t_q``, via the incidence kernel."""
    return lattice_ideal(integer_kernel_basis(incidence_matrix(g)))


def even_cycle_ideal(g: Graph) -> BinomialIdeal:
    """
    The ideal generated by ``T_W`` over the even cycles of a bipartite graph.

    For graphs with at most ``EVEN_CYCLE_CHECK_MAX_N`` vertices the result is
    checked against :func:`toric_ideal_of_graph`.

    Raises:
        NonBipartiteError: If ``g`` is not bipartite
        InternalInconsistencyError: If the two constructions disagree
    """
    if not is_bipartite(g):
        raise NonBipartiteError("Even-cycle generation needs a bipartite graph")
    cycles = enumerate_even_cycles(g, max_len=max(4, g.n))
    ideal = BinomialIdeal(g.num_edges, tuple(cycle_binomial(w, g) for w in cycles))
    if g.n <= EVEN_CYCLE_CHECK_MAX_N and not ideal_equal(ideal, toric_ideal_of_graph(g)):
        raise InternalInconsistencyError("Even-cycle ideal differs from the toric ideal of the graph")
    return ideal


def k2n_toric_correspondence(n: int) -> BinomialIdeal:
    """
    The toric ideal of ``K_{2,n}`` moved into the edge-ideal ring of ``n`` vertices.

    With ``s_1 = 1``, ``s_2 = 2`` and ``t_i = i + 2`` the edge ``{s_1, t_i}``
    becomes ``x_i`` and ``{s_2, t_i}`` becomes ``y_i``.
    """
    g = complete_bipartite_graph(2, n)
    ambient = EdgeIdealAmbient(n)
    mapping = {}
    for k, (s, t) in enumerate(g.sorted_edges):
        i = t - 2
        mapping[k] = ambient.x_index(i) if s == 1 else ambient.y_index(i)
    return rename_variables(toric_ideal_of_graph(g), mapping, ambient.num_vars)


# ---------------------------------------------------------------------------
# the decision
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class DecompositionBlock:
    component: Tuple[int, ...]
    ideal: BinomialIdeal


@dataclass(frozen=True)
class ToricnessReport:
    """Outcome of the toricness decision for one graph."""

    n: int
    components: Tuple[Tuple[int, ...], ...]
    is_toric: bool
    witness: Optional[NonCliqueWitness] = None
    verified: Optional[bool] = None
    decomposition: Optional[Tuple[DecompositionBlock, ...]] = None

    def __post_init__(self) -> None:
        if self.is_toric != (self.witness is None) or self.is_toric != (self.decomposition is not None):
            raise InternalInconsistencyError("is_toric, witness and decomposition are inconsistent")
        if self.verified is not None and self.verified != self.is_toric:
            raise InternalInconsistencyError(
                f"Criterion says is_toric={self.is_toric} but saturation says {self.verified}"
            )

    def to_dict(self) -> Dict[str, Any]:
        names = xy_variable_names(self.n)
        return {
            "n": self.n,
            "components": [list(c) for c in self.components],
            "is_toric": self.is_toric,
            "witness": self.witness.to_dict() if self.witness is not None else None,
            "verified": self.verified,
            "decomposition": None
            if self.decomposition is None
            else [{"component": list(b.component), "generators": format_ideal(b.ideal, names)} for b in self.decomposition],
        }


def _component_blocks(g: Graph, components: List[Tuple[int, ...]]) -> Tuple[DecompositionBlock, ...]:
    return tuple(
        DecompositionBlock(c, k2n_ideal(len(c), {k: v for k, v in enumerate(c, start=1)}, g.n))
        for c in components
    )


def _order(kind: Union[OrderKind, str], num_vars: int) -> MonomialOrder:
    return MonomialOrder.of(kind, num_vars)


def verify_lattice(g: Graph, order: Union[OrderKind, str] = OrderKind.GREVLEX) -> bool:
    """
    True iff ``(J_G : <X, Y>^∞) = J_G``.

    Independent of the graph criterion; ``order`` is used for the final
    equality test.
    """
    j = binomial_edge_ideal(g)
    saturated = saturate_all(j)
    result = ideal_equal(saturated, j, _order(order, j.num_vars))
    log_stage("verify_lattice", n=g.n, edges=g.num_edges, lattice=result)
    return result


def decide_toric(g: Graph, verify: bool = False, order: Union[OrderKind, str] = OrderKind.GREVLEX) -> ToricnessReport:
    """
    Decide whether ``J_G`` is toric by checking every neighborhood is a clique.

    Args:
        g: The graph
        verify: Also run :func:`verify_lattice`; a disagreement raises
        order: Monomial order for the verification's equality test

    Returns:
        The report; toric graphs carry one ``K_{2,|C|}`` block per component C,
        the others a non-clique witness

    Raises:
        InternalInconsistencyError: If verification disagrees with the criterion
    """
    components = connected_components(g)
    outcome = is_locally_complete(g)
    is_toric = outcome is True
    report = ToricnessReport(
        n=g.n,
        components=tuple(components),
        is_toric=is_toric,
        witness=None if is_toric else outcome,
        verified=verify_lattice(g, order) if verify else None,
        decomposition=_component_blocks(g, components) if is_toric else None,
    )
    log_stage("decide_toric", n=g.n, edges=g.num_edges, is_toric=is_toric, verified=report.verified)
    return report


@dataclass(frozen=True)
class ToricDecomposition:
    blocks: Tuple[DecompositionBlock, ...]
    total: BinomialIdeal
    certified: bool


def toric_sum_decomposition(g: Graph) -> ToricDecomposition:
    """
    Write ``J_G`` as the sum of ``K_{2,n_i}`` toric ideals over the components.

    Raises:
        NotLocallyCompleteError: If some neighborhood is not a clique
        InternalInconsistencyError: If ``J_G`` differs from the sum
    """
    outcome = is_locally_complete(g)
    if outcome is not True:
        raise NotLocallyCompleteError(
            f"Vertex {outcome.k} has non-adjacent neighbors {outcome.i} and {outcome.j}"
        )
    blocks = _component_blocks(g, connected_components(g))
    ambient = EdgeIdealAmbient(g.n)
    total = sum_ideals((b.ideal for b in blocks), ambient.num_vars)
    if not ideal_equal(binomial_edge_ideal(g), total):
        raise InternalInconsistencyError("J_G differs from the sum of its component blocks")
    return ToricDecomposition(blocks, total, certified=True)


def neighborhood_syzygy(n: int, k: int, i: int, j: int) -> Dict[Monomial, int]:
    """
    Expand ``y_k·(y_i x_j - y_j x_i) - y_j·f_ki + y_i·f_kj`` term by term.

    ``f_ki = x_k y_i - x_i y_k``. The identity behind the criterion says the
    expansion cancels, so the returned residue is empty.
    """
    if len({i, j, k}) != 3:
        raise ValueError(f"Indices must be distinct, got {(i, j, k)}")
    ambient = EdgeIdealAmbient(n)
    y = lambda v: unit_monomial(ambient.num_vars, ambient.y_index(v))  # noqa: E731
    lhs = PureBinomial(ambient.monomial(("y", i), ("x", j)), ambient.monomial(("y", j), ("x", i)))
    return signed_terms(
        (1, y(k), lhs),
        (-1, y(j), ambient.f(k, i)),
        (1, y(i), ambient.f(k, j)),
    )


def certify_witness(g: Graph, witness: NonCliqueWitness) -> bool:
    """
    True iff ``y_k·f_ij ∈ J_G`` while ``f_ij ∉ J_G``.

    Such an ``f_ij`` lies in the saturation of ``J_G`` but not in ``J_G``, so a
    certified witness rules out the lattice property.
    """
    ambient = EdgeIdealAmbient(g.n)
    j_g = binomial_edge_ideal(g)
    f_ij = ambient.f(witness.i, witness.j)
    y_k = ambient.monomial(("y", witness.k))
    shifted = PureBinomial(monomial_mul(y_k, f_ij.lead), monomial_mul(y_k, f_ij.trail))
    return ideal_membership(shifted, j_g) and not ideal_membership(f_ij, j_g)


# ---------------------------------------------------------------------------
# equivalence report
# ---------------------------------------------------------------------------

PRIMALITY_NOTE = "inferred from the lattice criterion; not computed"


@dataclass(frozen=True)
class EquivalenceReport:
    """
    The equivalent conditions on a graph, each evaluated separately.

    ``prime`` is never computed: it is copied from the other conditions and
    marked as inferred.
    """

    locally_complete: bool
    components_complete: bool
    prime: bool
    lattice: bool
    toric_sum: bool
    witness_certified: Optional[bool] = None
    prime_note: str = PRIMALITY_NOTE

    def to_dict(self) -> Dict[str, Any]:
        return {
            "locally_complete": self.locally_complete,
            "components_complete": self.components_complete,
            "prime": {"value": self.prime, "computed": False, "note": self.prime_note},
            "lattice": self.lattice,
            "toric_sum": self.toric_sum,
            "witness_certified": self.witness_certified,
        }


def equivalence_report(g: Graph) -> EquivalenceReport:
    """
    Evaluate the equivalent characterizations of toric binomial edge ideals.

    Raises:
        InternalInconsistencyError: If the computed conditions disagree
    """
    outcome = is_locally_complete(g)
    locally_complete = outcome is True
    components_complete = components_are_cliques(g)
    lattice = verify_lattice(g)
    try:
        toric_sum_decomposition(g)
        toric_sum = True
    except NotLocallyCompleteError:
        toric_sum = False
    computed = {locally_complete, components_complete, lattice, toric_sum}
    if len(computed) != 1:
        raise InternalInconsistencyError(
            f"Equivalent conditions disagree: locally_complete={locally_complete}, "
            f"components_complete={components_complete}, lattice={lattice}, toric_sum={toric_sum}"
        )
    witness_certified = None if locally_complete else certify_witness(g, outcome)
    if witness_certified is False:
        raise InternalInconsistencyError(f"Witness {outcome} does not exhibit a saturation element")
    return EquivalenceReport(
        locally_complete=locally_complete,
        components_complete=components_complete,
        prime=locally_complete,
        lattice=lattice,
        toric_sum=toric_sum,
        witness_certified=witness_certified,
    )

