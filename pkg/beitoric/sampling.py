"""Seeded random graphs and matrices for reproducible checks."""

import itertools
from typing import List

import numpy as np

from .graph_core import Graph
from .lattice_core import IntegerMatrix
from .utils import logger


def validate_seed(seed: int) -> None:
    """
    Validate that the seed is a non-negative integer within the valid range.

    Args:
        seed: The seed value to validate

    Raises:
        TypeError: If seed is not an integer
        ValueError: If seed is negative or out of valid range
    """
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise TypeError(f"Seed must be an integer, got {type(seed).__name__}")

    if seed < 0:
        raise ValueError(f"Seed must be non-negative, got {seed}")

    # Maximum seed value for most systems (2^32 - 1)
    max_seed = 2**32 - 1
    if seed > max_seed:
        raise ValueError(f"Seed must be <= {max_seed}, got {seed}")


def make_rng(seed: int) -> np.random.Generator:
    """
    Create a numpy Generator with PCG64 for the given seed.

    Args:
        seed: The seed value (non-negative integer)

    Returns:
        A numpy.random.Generator instance
    """
    validate_seed(seed)
    logger.debug(f"Created PCG64 generator with seed={seed}")
    return np.random.Generator(np.random.PCG64(seed))


def random_graph(n: int, rng: np.random.Generator, edge_probability: float = 0.5) -> Graph:
    """Each of the ``n(n-1)/2`` possible edges is present independently."""
    if not 0.0 <= edge_probability <= 1.0:
        raise ValueError(f"edge_probability must lie in [0, 1], got {edge_probability}")
    pairs = list(itertools.combinations(range(1, n + 1), 2))
    keep = rng.random(len(pairs)) < edge_probability
    return Graph(n, frozenset(p for p, k in zip(pairs, keep) if k))


def random_set_partition(n: int, rng: np.random.Generator) -> List[List[int]]:
    """A random partition of ``1..n`` into blocks."""
    labels = rng.integers(0, n, size=n) if n else []
    blocks = {}
    for vertex, label in zip(range(1, n + 1), labels):
        blocks.setdefault(int(label), []).append(vertex)
    return sorted(blocks.values())


def random_clique_union(rng: np.random.Generator, max_total: int = 10) -> Graph:
    """
    A disjoint union of cliques on a random number of vertices.

    Vertex labels are shuffled, so components are generally not intervals.
    """
    if max_total < 1:
        raise ValueError(f"max_total must be positive, got {max_total}")
    n = int(rng.integers(1, max_total + 1))
    edges = set()
    for block in random_set_partition(n, rng):
        edges.update(itertools.combinations(block, 2))
    shuffled = [int(v) for v in rng.permutation(np.arange(1, n + 1))]
    relabel = {old: new for old, new in zip(range(1, n + 1), shuffled)}
    return Graph.from_edges(n, [(relabel[u], relabel[v]) for u, v in edges])


def random_integer_matrix(
    rng: np.random.Generator,
    max_rows: int = 6,
    max_cols: int = 6,
    low: int = -9,
    high: int = 9,
) -> IntegerMatrix:
    """A matrix of random shape up to ``max_rows x max_cols``, entries in ``[low, high]``."""
    rows = int(rng.integers(1, max_rows + 1))
    cols = int(rng.integers(1, max_cols + 1))
    values = rng.integers(low, high + 1, size=(rows, cols))
    return IntegerMatrix.from_rows([[int(x) for x in row] for row in values], cols)
