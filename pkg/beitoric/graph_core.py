"""
Labeled simple graphs on the vertex set 1..n and the combinatorial primitives
the toricness criterion quantifies over.
"""

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Literal, Optional, Sequence, Tuple, Union

import networkx as nx

from .errors import (
    DuplicateEdgeError,
    InternalInconsistencyError,
    MalformedEdgeError,
    MalformedHeaderError,
    NotACycleError,
    SelfLoopError,
    VertexCountMismatchError,
    VertexOutOfRangeError,
)
from .lattice_core import IntegerMatrix
from .utils import validate_vertex_count

logger = logging.getLogger(__name__)

Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """
    A simple graph on the vertices ``1..n``.

    Edges are stored as sorted pairs ``(u, v)`` with ``u < v``; their
    lexicographic order is the canonical edge order used to index edge
    variables everywhere.
    """

    n: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self) -> None:
        validate_vertex_count(self.n)
        edges = frozenset(tuple(e) for e in self.edges)
        for u, v in edges:
            if not u < v:
                raise ValueError(f"Edge {(u, v)} must be a sorted pair of distinct vertices")
            if u < 1 or v > self.n:
                raise ValueError(f"Edge {(u, v)} has an endpoint outside 1..{self.n}")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "Graph":
        """
        Build a graph from unordered pairs.

        Raises:
            ValueError: On self-loops, endpoints outside ``1..n`` or repeated
                edges (in either orientation)
        """
        seen = set()
        for pair in edges:
            u, v = pair
            if u == v:
                raise ValueError(f"Self-loop at vertex {u}")
            edge = (u, v) if u < v else (v, u)
            if edge in seen:
                raise ValueError(f"Duplicate edge {edge}")
            seen.add(edge)
        return cls(n, frozenset(seen))

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def edge_index(self) -> Dict[Edge, int]:
        """Position of every edge in the canonical edge order (0-based)."""
        return {e: k for k, e in enumerate(self.sorted_edges)}

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges)
        return graph


@dataclass(frozen=True)
class Cycle:
    """
    A closed walk ``v_0, v_1, ..., v_r = v_0`` on distinct vertices.

    Only ``v_0..v_{r-1}`` are stored; ``length`` is ``r``.
    """

    vertices: Tuple[int, ...]

    def __post_init__(self) -> None:
        vertices = tuple(self.vertices)
        if len(vertices) < 3:
            raise NotACycleError(f"A cycle needs at least 3 vertices, got {vertices}")
        if len(set(vertices)) != len(vertices):
            raise NotACycleError(f"Cycle vertices must be distinct, got {vertices}")
        object.__setattr__(self, "vertices", vertices)

    @property
    def length(self) -> int:
        return len(self.vertices)

    @property
    def is_even(self) -> bool:
        return self.length % 2 == 0

    def traversal_edges(self) -> List[Edge]:
        """The edges ``{v_{k-1}, v_k}`` for ``k = 1..r`` as sorted pairs."""
        walk = self.vertices + self.vertices[:1]
        return [(min(a, b), max(a, b)) for a, b in zip(walk, walk[1:])]

    def canonical(self) -> "Cycle":
        """Least vertex first, then towards its smaller neighbor on the cycle."""
        start = self.vertices.index(min(self.vertices))
        rotated = self.vertices[start:] + self.vertices[:start]
        if rotated[-1] < rotated[1]:
            rotated = rotated[:1] + tuple(reversed(rotated[1:]))
        return Cycle(rotated)

    def lies_in(self, g: Graph) -> bool:
        return all(1 <= v <= g.n for v in self.vertices) and all(
            e in g.edges for e in self.traversal_edges()
        )


@dataclass(frozen=True)
class NonCliqueWitness:
    """Vertex ``k`` with neighbors ``i < j`` that are not adjacent."""

    k: int
    i: int
    j: int

    def to_dict(self) -> Dict[str, int]:
        return {"k": self.k, "i": self.i, "j": self.j}


# ---------------------------------------------------------------------------
# constructors
# ---------------------------------------------------------------------------

def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def path_graph(n: int) -> Graph:
    return Graph(n, frozenset((v, v + 1) for v in range(1, n)))


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"A cycle graph needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(v, v % n + 1) for v in range(1, n + 1)])


def complete_bipartite_graph(m: int, k: int) -> Graph:
    """``K_{m,k}`` with parts ``{1..m}`` and ``{m+1..m+k}``."""
    return Graph(m + k, frozenset((a, b) for a in range(1, m + 1) for b in range(m + 1, m + k + 1)))


def disjoint_union(*graphs: Graph) -> Graph:
    """Place the graphs side by side, shifting labels in order."""
    offset = 0
    edges = set()
    for g in graphs:
        edges.update((u + offset, v + offset) for u, v in g.edges)
        offset += g.n
    return Graph(offset, frozenset(edges))


# ---------------------------------------------------------------------------
# edge-list format
# ---------------------------------------------------------------------------

def _parse_vertex(token: str, n: int, line: int, column: int) -> int:
    try:
        value = int(token)
    except ValueError:
        raise MalformedEdgeError(f"expected a vertex label, got {token!r}", line, column) from None
    if not 1 <= value <= n:
        raise VertexOutOfRangeError(f"vertex {value} is outside 1..{n}", line, column)
    return value


def parse_graph(text: str) -> Graph:
    """
    Parse the edge-list format.

    The first content line is ``graph <n>``; every further content line is
    ``<u> <v>``. Lines starting with ``#`` and blank lines are ignored.
    Mistakes are rejected, never repaired.

    Raises:
        GraphFormatError: With the line and column of the offending token
    """
    n: Optional[int] = None
    seen: Dict[Edge, int] = {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        column = len(raw) - len(raw.lstrip()) + 1
        tokens = stripped.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "graph":
                raise MalformedHeaderError("expected 'graph <n>'", line_no, column)
            try:
                n = int(tokens[1])
            except ValueError:
                raise MalformedHeaderError(f"vertex count {tokens[1]!r} is not an integer", line_no, column) from None
            if n < 1:
                raise MalformedHeaderError(f"vertex count must be positive, got {n}", line_no, column)
            continue
        if len(tokens) != 2:
            raise MalformedEdgeError(f"expected '<u> <v>', got {stripped!r}", line_no, column)
        second_column = raw.index(tokens[1], column - 1 + len(tokens[0])) + 1
        u = _parse_vertex(tokens[0], n, line_no, column)
        v = _parse_vertex(tokens[1], n, line_no, second_column)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}", line_no, column)
        edge = (min(u, v), max(u, v))
        if edge in seen:
            raise DuplicateEdgeError(f"edge {edge} already given at line {seen[edge]}", line_no, column)
        seen[edge] = line_no
    if n is None:
        raise MalformedHeaderError("missing 'graph <n>' header", 1, 1)
    return Graph(n, frozenset(seen))


def render_graph(g: Graph) -> str:
    """Write ``g`` in the edge-list format, edges in canonical order."""
    lines = [f"graph {g.n}"] + [f"{u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# combinatorics
# ---------------------------------------------------------------------------

def neighbors(g: Graph, v: int) -> FrozenSet[int]:
    return frozenset(b if a == v else a for a, b in g.edges if v in (a, b))


def connected_components(g: Graph) -> List[Tuple[int, ...]]:
    """Maximal connected vertex sets, each sorted, blocks sorted by least element."""
    blocks = [tuple(sorted(c)) for c in nx.connected_components(g.to_networkx())]
    return sorted(blocks)


def components_are_cliques(g: Graph) -> bool:
    return all(
        g.has_edge(u, v)
        for block in connected_components(g)
        for u, v in itertools.combinations(block, 2)
    )


def find_non_clique_witness(g: Graph) -> Optional[NonCliqueWitness]:
    """Smallest ``k``, then smallest ``(i, j)``, with ``i, j ∈ N(k)`` non-adjacent."""
    for k in g.vertices:
        for i, j in itertools.combinations(sorted(neighbors(g, k)), 2):
            if not g.has_edge(i, j):
                return NonCliqueWitness(k, i, j)
    return None


def is_locally_complete(g: Graph) -> Union[Literal[True], NonCliqueWitness]:
    """
    True iff every neighborhood induces a complete subgraph, otherwise a witness.

    The equivalent criterion that every connected component is a clique is
    evaluated as well and must agree.

    Raises:
        InternalInconsistencyError: If the two criteria disagree
    """
    witness = find_non_clique_witness(g)
    if (witness is None) != components_are_cliques(g):
        raise InternalInconsistencyError(
            f"Neighborhood and component criteria disagree on graph with edges {g.sorted_edges}"
        )
    return True if witness is None else witness


def complement(g: Graph) -> Graph:
    """The complement of ``g`` inside ``K_n``."""
    return Graph(g.n, frozenset(itertools.combinations(g.vertices, 2)) - g.edges)


def edge_union(first: Graph, second: Graph) -> Graph:
    """
    Union of the edge sets on the shared vertex set.

    Raises:
        VertexCountMismatchError: If the vertex counts differ
    """
    if first.n != second.n:
        raise VertexCountMismatchError(f"Cannot unite graphs on {first.n} and {second.n} vertices")
    return Graph(first.n, first.edges | second.edges)


def remove_isolated(g: Graph) -> Tuple[Graph, Dict[int, int]]:
    """Restrict to non-isolated vertices, relabeling them ``1..m`` in order."""
    used = sorted({v for e in g.edges for v in e})
    relabel = {old: new for new, old in enumerate(used, start=1)}
    return Graph(len(used), frozenset((relabel[u], relabel[v]) for u, v in g.edges)), relabel


def is_bipartite(g: Graph) -> bool:
    return nx.is_bipartite(g.to_networkx())


def enumerate_even_cycles(g: Graph, max_len: int) -> List[Cycle]:
    """
    All simple cycles of even length at most ``max_len``.

    Each cycle is reported once in canonical form and the list is sorted by
    length, then vertex sequence.
    """
    if max_len < 4:
        raise ValueError(f"max_len must be at least 4, got {max_len}")
    found = set()
    for walk in nx.simple_cycles(g.to_networkx(), length_bound=max_len):
        if len(walk) % 2 == 0:
            found.add(Cycle(tuple(walk)).canonical())
    cycles = sorted(found, key=lambda c: (c.length, c.vertices))
    logger.debug(f"Found {len(cycles)} even cycles of length <= {max_len}")
    return cycles


def incidence_matrix(g: Graph) -> IntegerMatrix:
    """
    Vertex-edge incidence matrix, ``n`` rows and one column per edge.

    Columns follow the canonical edge order; every column has exactly two 1s.
    """
    columns = g.sorted_edges
    rows = tuple(tuple(int(v in e) for e in columns) for v in g.vertices)
    return IntegerMatrix(g.n, len(columns), rows)
