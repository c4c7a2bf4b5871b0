"""
Exact integer linear algebra: Hermite normal form, integer kernels and lattice
saturation, plus the lattice ideal of a sublattice with the trivial character.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

from sympy import Matrix, ZZ
from sympy.matrices.normalforms import invariant_factors

from .errors import ExactOverflowError, InternalInconsistencyError, NonHomogeneousError
from .poly_engine import BinomialIdeal, PureBinomial, ideal_equal, saturate_all

logger = logging.getLogger(__name__)

# Entries behave like signed 64-bit integers.
ENTRY_LIMIT = 2**63 - 1

Vector = Tuple[int, ...]


def _checked(value: int) -> int:
    if value > ENTRY_LIMIT or value < -ENTRY_LIMIT:
        raise ExactOverflowError(f"Integer entry {value} exceeds the 64-bit range")
    return value


@dataclass(frozen=True)
class IntegerMatrix:
    """A rectangular matrix of exact integers."""

    rows: int
    cols: int
    entries: Tuple[Tuple[int, ...], ...]

    def __post_init__(self) -> None:
        entries = tuple(tuple(row) for row in self.entries)
        if len(entries) != self.rows:
            raise ValueError(f"Expected {self.rows} rows, got {len(entries)}")
        for row in entries:
            if len(row) != self.cols:
                raise ValueError(f"Expected rows of length {self.cols}, got {len(row)}")
            for x in row:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise TypeError(f"Matrix entries must be integers, got {type(x).__name__}")
                _checked(x)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        rows = [tuple(int(x) for x in row) for row in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        return cls(len(rows), cols, tuple(rows))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls(n, n, tuple(tuple(int(i == j) for j in range(n)) for i in range(n)))

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows, tuple(self.column(j) for j in range(self.cols)))

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError(f"Cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
        columns = [other.column(j) for j in range(other.cols)]
        return IntegerMatrix(
            self.rows,
            other.cols,
            tuple(tuple(_checked(sum(a * b for a, b in zip(row, col))) for col in columns) for row in self.entries),
        )

    def apply(self, vector: Sequence[int]) -> Vector:
        """Return ``M · v``."""
        if len(vector) != self.cols:
            raise ValueError(f"Vector of length {len(vector)} for a matrix with {self.cols} columns")
        return tuple(_checked(sum(a * b for a, b in zip(row, vector))) for row in self.entries)

    def rank(self) -> int:
        """Rank over the rationals."""
        h, _ = hermite_normal_form(self)
        return sum(1 for row in h.entries if any(row))

    def render(self) -> str:
        return "\n".join(" ".join(str(x) for x in row) for row in self.entries)


def _hnf_rows(rows: List[List[int]], cols: int) -> Tuple[List[List[int]], List[List[int]]]:
    m = len(rows)
    h = [list(row) for row in rows]
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def subtract(target: int, source: int, q: int) -> None:
        h[target] = [_checked(a - q * b) for a, b in zip(h[target], h[source])]
        u[target] = [_checked(a - q * b) for a, b in zip(u[target], u[source])]

    pivot_row = 0
    for col in range(cols):
        if pivot_row == m:
            break
        while True:
            candidates = [r for r in range(pivot_row, m) if h[r][col] != 0]
            if not candidates:
                break
            # smallest absolute entry as pivot keeps entries small
            best = min(candidates, key=lambda r: (abs(h[r][col]), r))
            h[pivot_row], h[best] = h[best], h[pivot_row]
            u[pivot_row], u[best] = u[best], u[pivot_row]
            done = True
            for r in range(pivot_row + 1, m):
                if h[r][col] != 0:
                    subtract(r, pivot_row, h[r][col] // h[pivot_row][col])
                    if h[r][col] != 0:
                        done = False
            if done:
                break
        if h[pivot_row][col] == 0:
            continue
        if h[pivot_row][col] < 0:
            h[pivot_row] = [-x for x in h[pivot_row]]
            u[pivot_row] = [-x for x in u[pivot_row]]
        pivot = h[pivot_row][col]
        for r in range(pivot_row):
            q = h[r][col] // pivot
            if q:
                subtract(r, pivot_row, q)
        pivot_row += 1
    return h, u


def hermite_normal_form(matrix: IntegerMatrix) -> Tuple[IntegerMatrix, IntegerMatrix]:
    """
    Row-style Hermite normal form.

    Returns ``(H, U)`` with ``U`` unimodular and ``U · M = H``. Pivots of ``H``
    are positive, entries above a pivot lie in ``[0, pivot)`` and zero rows
    come last.

    Raises:
        ExactOverflowError: If an intermediate entry leaves the 64-bit range
    """
    h, u = _hnf_rows([list(row) for row in matrix.entries], matrix.cols)
    return (
        IntegerMatrix(matrix.rows, matrix.cols, tuple(tuple(row) for row in h)),
        IntegerMatrix(matrix.rows, matrix.rows, tuple(tuple(row) for row in u)),
    )


@dataclass(frozen=True)
class Lattice:
    """A sublattice of ``Z^ambient_dim`` given by a rationally independent basis."""

    ambient_dim: int
    basis: Tuple[Vector, ...] = ()

    def __post_init__(self) -> None:
        basis = tuple(tuple(int(x) for x in v) for v in self.basis)
        for v in basis:
            if len(v) != self.ambient_dim:
                raise ValueError(f"Basis vector {v} is not in Z^{self.ambient_dim}")
        object.__setattr__(self, "basis", basis)
        if basis and IntegerMatrix.from_rows(basis, self.ambient_dim).rank() != len(basis):
            raise ValueError("Lattice basis vectors must be linearly independent")

    @property
    def rank(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> IntegerMatrix:
        return IntegerMatrix.from_rows(self.basis, self.ambient_dim)

    def contains(self, vector: Sequence[int]) -> bool:
        """True iff ``vector`` is an integer combination of the basis."""
        if len(vector) != self.ambient_dim:
            raise ValueError(f"Vector of length {len(vector)} is not in Z^{self.ambient_dim}")
        residue = list(vector)
        h, _ = hermite_normal_form(self.basis_matrix())
        for row in h.entries:
            pivot_col = next((j for j, x in enumerate(row) if x), None)
            if pivot_col is None:
                break
            q, r = divmod(residue[pivot_col], row[pivot_col])
            if r:
                return False
            residue = [a - q * b for a, b in zip(residue, row)]
        return not any(residue)


@dataclass(frozen=True)
class PartialCharacter:
    """
    A character on a lattice with values in the nonzero field elements.

    Only the trivial character is supported: every lattice vector maps to 1.
    """

    lattice: Lattice
    trivial: bool = True

    def __post_init__(self) -> None:
        if not self.trivial:
            raise ValueError("Only the trivial character is supported")

    def __call__(self, vector: Sequence[int]) -> int:
        if not self.lattice.contains(vector):
            raise ValueError(f"{tuple(vector)} is not in the character's lattice")
        return 1


def is_saturated_lattice(lattice: Lattice) -> bool:
    """
    True iff ``Z^q / L`` is torsion-free.

    All nonzero elementary divisors of the basis matrix must equal 1. The zero
    lattice is saturated.
    """
    if not lattice.basis:
        return True
    factors = invariant_factors(Matrix(lattice.basis), domain=ZZ)
    nonzero = [abs(int(d)) for d in factors if d != 0]
    return len(nonzero) == lattice.rank and all(d == 1 for d in nonzero)


def integer_kernel_basis(matrix: IntegerMatrix) -> Lattice:
    """
    Basis of ``{α ∈ Z^q : M α = 0}``.

    The rows of the unimodular transform that the Hermite form of ``Mᵀ`` sends
    to zero span the kernel; being part of a unimodular matrix they span a
    saturated lattice, which is asserted through the Smith form.

    Raises:
        InternalInconsistencyError: If a kernel vector fails ``M α = 0`` or the
            kernel is not saturated
    """
    q = matrix.cols
    transposed = [list(matrix.column(j)) for j in range(q)]
    h, u = _hnf_rows(transposed, matrix.rows)
    kernel = tuple(tuple(u[r]) for r in range(q) if not any(h[r]))
    for alpha in kernel:
        if any(matrix.apply(alpha)):
            raise InternalInconsistencyError(f"Kernel vector {alpha} is not annihilated by the matrix")
    lattice = Lattice(q, kernel)
    if not is_saturated_lattice(lattice):
        raise InternalInconsistencyError("Integer kernel is not a saturated lattice")
    logger.debug(f"Integer kernel of a {matrix.rows}x{q} matrix has rank {lattice.rank}")
    return lattice


def positive_part(vector: Iterable[int]) -> Vector:
    return tuple(x if x > 0 else 0 for x in vector)


def negative_part(vector: Iterable[int]) -> Vector:
    return tuple(-x if x < 0 else 0 for x in vector)


def lattice_ideal(lattice: Lattice) -> BinomialIdeal:
    """
    The ideal generated by ``x^{m+} - x^{m-}`` over all ``m`` in the lattice.

    Built from the basis generators and then saturated by all variables; the
    result is checked to be its own saturation.

    Raises:
        NonHomogeneousError: If a basis vector does not sum to zero
        InternalInconsistencyError: If the saturated ideal is not a fixpoint
    """
    generators = []
    for m in lattice.basis:
        if sum(m) != 0:
            raise NonHomogeneousError(f"Lattice vector {m} gives an inhomogeneous binomial")
        generators.append(PureBinomial(positive_part(m), negative_part(m)))
    ideal = BinomialIdeal(lattice.ambient_dim, tuple(generators))
    result = saturate_all(ideal)
    if not ideal_equal(saturate_all(result), result):
        raise InternalInconsistencyError("Lattice ideal is not equal to its own saturation")
    return result
