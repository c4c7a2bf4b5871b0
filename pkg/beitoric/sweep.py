"""
Exhaustive and sampled agreement checks between the graph criterion and the
saturation test.

Work is split across graphs only; each graph's pipeline runs sequentially in
one worker. Results are sorted by ``(n, mask)`` before aggregation so the
summary does not depend on scheduling.
"""

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, Iterator, List, Tuple

from sympy import bell

from .edge_ideals import decide_toric, verify_lattice
from .graph_core import Graph
from .sampling import make_rng, random_graph
from .utils import env_int, log_stage, logger, validate_vertex_count

SWEEP_HARD_CAP = 5
SAMPLE_MAX_N = 7
MAX_N_ENV = "BEITORIC_MAX_N"


def resolve_sweep_cap() -> int:
    """
    The largest ``max_n`` a sweep may use.

    ``BEITORIC_MAX_N`` can lower the hard cap but never raise it.
    """
    requested = env_int(MAX_N_ENV)
    if requested is None:
        return SWEEP_HARD_CAP
    if requested > SWEEP_HARD_CAP:
        logger.warning(f"{MAX_N_ENV}={requested} is above the hard cap; using {SWEEP_HARD_CAP}")
        return SWEEP_HARD_CAP
    return requested


def _pairs(n: int) -> List[Tuple[int, int]]:
    return list(itertools.combinations(range(1, n + 1), 2))


def graph_from_bitmask(n: int, mask: int) -> Graph:
    """Bit ``b`` of ``mask`` selects the ``b``-th pair of ``K_n`` in lexicographic order."""
    pairs = _pairs(n)
    if not 0 <= mask < 2 ** len(pairs):
        raise ValueError(f"Mask {mask} out of range for {n} vertices")
    return Graph(n, frozenset(p for b, p in enumerate(pairs) if mask >> b & 1))


def graph_to_bitmask(g: Graph) -> int:
    return sum(1 << b for b, p in enumerate(_pairs(g.n)) if p in g.edges)


def enumerate_labeled_graphs(n: int) -> Iterator[Tuple[int, Graph]]:
    """All ``2^(n(n-1)/2)`` labeled graphs on ``n`` vertices, by increasing mask."""
    for mask in range(2 ** (n * (n - 1) // 2)):
        yield mask, graph_from_bitmask(n, mask)


@dataclass(frozen=True)
class GraphCheck:
    n: int
    mask: int
    is_toric: bool
    verified: bool

    @property
    def agrees(self) -> bool:
        return self.is_toric == self.verified

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.n, "mask": self.mask, "is_toric": self.is_toric, "verified": self.verified}


def check_graph(task: Tuple[int, int]) -> GraphCheck:
    """Run both tests on one graph; module level so process pools can pickle it."""
    n, mask = task
    g = graph_from_bitmask(n, mask)
    return GraphCheck(n, mask, decide_toric(g).is_toric, verify_lattice(g))


def _run(tasks: List[Tuple[int, int]], jobs: int) -> List[GraphCheck]:
    if jobs < 1:
        raise ValueError(f"jobs must be at least 1, got {jobs}")
    if jobs == 1 or len(tasks) < 2:
        results = [check_graph(t) for t in tasks]
    else:
        chunksize = max(1, len(tasks) // (jobs * 8))
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(check_graph, tasks, chunksize=chunksize))
    return sorted(results, key=lambda r: (r.n, r.mask))


@dataclass(frozen=True)
class LevelSummary:
    n: int
    graphs_checked: int
    toric_count: int
    expected_toric_count: int

    def to_dict(self) -> Dict[str, Any]:
        return {
            "n": self.n,
            "graphs_checked": self.graphs_checked,
            "toric_count": self.toric_count,
            "expected_toric_count": self.expected_toric_count,
        }


@dataclass(frozen=True)
class SweepSummary:
    """Per-level counts; ``wall_time`` is kept out of :meth:`to_dict` by default."""

    max_n: int
    levels: Tuple[LevelSummary, ...]
    mismatches: Tuple[GraphCheck, ...]
    wall_time: float = field(default=0.0, compare=False)

    @property
    def graphs_checked(self) -> int:
        return sum(level.graphs_checked for level in self.levels)

    @property
    def ok(self) -> bool:
        return not self.mismatches and all(
            level.toric_count == level.expected_toric_count for level in self.levels
        )

    def toric_count(self, n: int) -> int:
        return next(level.toric_count for level in self.levels if level.n == n)

    def to_dict(self, include_wall_time: bool = False) -> Dict[str, Any]:
        body: Dict[str, Any] = {
            "max_n": self.max_n,
            "graphs_checked": self.graphs_checked,
            "levels": [level.to_dict() for level in self.levels],
            "mismatches": [m.to_dict() for m in self.mismatches],
        }
        if include_wall_time:
            body["wall_time"] = round(self.wall_time, 3)
        return body


def _level_summaries(results: Iterable[GraphCheck], levels: Iterable[int]) -> Tuple[LevelSummary, ...]:
    results = list(results)
    return tuple(
        LevelSummary(
            n=n,
            graphs_checked=sum(1 for r in results if r.n == n),
            toric_count=sum(1 for r in results if r.n == n and r.is_toric),
            # clique unions correspond to set partitions
            expected_toric_count=int(bell(n)),
        )
        for n in levels
    )


def run_sweep(max_n: int, jobs: int = 1) -> SweepSummary:
    """
    Compare the criterion with the saturation test on every labeled graph
    with ``1..max_n`` vertices.

    Raises:
        ValueError: If ``max_n`` is outside ``1..resolve_sweep_cap()``
    """
    cap = resolve_sweep_cap()
    validate_vertex_count(max_n, cap)
    if max_n < 1:
        raise ValueError(f"max_n must be at least 1, got {max_n}")
    start = time.perf_counter()
    tasks = [(n, mask) for n in range(1, max_n + 1) for mask, _ in enumerate_labeled_graphs(n)]
    results = _run(tasks, jobs)
    summary = SweepSummary(
        max_n=max_n,
        levels=_level_summaries(results, range(1, max_n + 1)),
        mismatches=tuple(r for r in results if not r.agrees),
        wall_time=time.perf_counter() - start,
    )
    log_stage("sweep", max_n=max_n, graphs=summary.graphs_checked, mismatches=len(summary.mismatches))
    return summary


@dataclass(frozen=True)
class SampleSummary:
    n: int
    seed: int
    graphs_checked: int
    toric_count: int
    mismatches: Tuple[GraphCheck, ...]
    wall_time: float = field(default=0.0, compare=False)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self, include_wall_time: bool = False) -> Dict[str, Any]:
        body: Dict[str, Any] = {
            "n": self.n,
            "seed": self.seed,
            "graphs_checked": self.graphs_checked,
            "toric_count": self.toric_count,
            "mismatches": [m.to_dict() for m in self.mismatches],
        }
        if include_wall_time:
            body["wall_time"] = round(self.wall_time, 3)
        return body


def run_sample(n: int, count: int, seed: int = 42, jobs: int = 1) -> SampleSummary:
    """
    Run the agreement check on ``count`` random graphs with ``n`` vertices.

    Duplicated draws are checked once. Graphs are drawn with edge probability
    1/2 from a PCG64 generator seeded with ``seed``.
    """
    validate_vertex_count(n, SAMPLE_MAX_N)
    if n < 1:
        raise ValueError(f"n must be at least 1, got {n}")
    if count < 0:
        raise ValueError(f"count must be non-negative, got {count}")
    start = time.perf_counter()
    rng = make_rng(seed)
    masks = sorted({graph_to_bitmask(random_graph(n, rng)) for _ in range(count)})
    results = _run([(n, mask) for mask in masks], jobs)
    summary = SampleSummary(
        n=n,
        seed=seed,
        graphs_checked=len(results),
        toric_count=sum(1 for r in results if r.is_toric),
        mismatches=tuple(r for r in results if not r.agrees),
        wall_time=time.perf_counter() - start,
    )
    log_stage("sample", n=n, seed=seed, graphs=summary.graphs_checked, mismatches=len(summary.mismatches))
    return summary
