"""
Exact engine for unital pure-difference binomial ideals.

A pure binomial ``x^a - x^b`` is stored as a pair of exponent tuples. No
coefficient is ever stored: every ideal handled here is generated by binomials
with coefficients +1 and -1, so all results are independent of the field.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, NamedTuple, Optional, Sequence, Set, Tuple, Union

from .errors import ExactOverflowError, NonHomogeneousError

logger = logging.getLogger(__name__)

# Exponents behave like signed 32-bit integers; anything larger is reported.
EXPONENT_LIMIT = 2**31 - 1

Monomial = Tuple[int, ...]


# ---------------------------------------------------------------------------
# monomials
# ---------------------------------------------------------------------------

def _checked(m: Monomial) -> Monomial:
    for e in m:
        if e > EXPONENT_LIMIT:
            raise ExactOverflowError(f"Exponent {e} exceeds {EXPONENT_LIMIT}")
    return m


def make_monomial(exponents: Iterable[int]) -> Monomial:
    """Build a monomial from non-negative integer exponents."""
    m = tuple(exponents)
    for e in m:
        if isinstance(e, bool) or not isinstance(e, int):
            raise TypeError(f"Exponents must be integers, got {type(e).__name__}")
        if e < 0:
            raise ValueError(f"Exponents must be non-negative, got {e}")
    return _checked(m)


def unit_monomial(num_vars: int, index: int, power: int = 1) -> Monomial:
    """The monomial ``x_index^power`` in ``num_vars`` variables."""
    exps = [0] * num_vars
    exps[index] = power
    return _checked(tuple(exps))


def degree(m: Monomial) -> int:
    return sum(m)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return _checked(tuple(x + y for x, y in zip(a, b)))


def monomial_div(a: Monomial, b: Monomial) -> Monomial:
    """Return ``a / b``; the caller guarantees that ``b`` divides ``a``."""
    return tuple(x - y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomial_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x < y else y for x, y in zip(a, b))


def divides(a: Monomial, b: Monomial) -> bool:
    """True iff ``a`` divides ``b``."""
    return all(x <= y for x, y in zip(a, b))


def coprime(a: Monomial, b: Monomial) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


# ---------------------------------------------------------------------------
# monomial orders
# ---------------------------------------------------------------------------

class OrderKind(str, Enum):
    LEX = "lex"
    GREVLEX = "grevlex"


class Comparison(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


@dataclass(frozen=True)
class MonomialOrder:
    """
    A lex or grevlex order with an explicit variable priority.

    ``priority`` lists variable indices from highest to lowest. The order is
    realized through :meth:`key`: ``a > b`` iff ``key(a) > key(b)``.
    """

    kind: OrderKind
    priority: Tuple[int, ...]
    _reversed: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "kind", OrderKind(self.kind))
        priority = tuple(self.priority)
        if sorted(priority) != list(range(len(priority))):
            raise ValueError(f"Priority must be a permutation of 0..{len(priority) - 1}, got {priority}")
        object.__setattr__(self, "priority", priority)
        object.__setattr__(self, "_reversed", tuple(reversed(priority)))

    @property
    def num_vars(self) -> int:
        return len(self.priority)

    @classmethod
    def of(cls, kind: Union[OrderKind, str], num_vars: int, priority: Optional[Sequence[int]] = None) -> "MonomialOrder":
        """Build an order; the default priority is ``x_0 > x_1 > ...``."""
        if priority is None:
            priority = range(num_vars)
        return cls(OrderKind(kind), tuple(priority))

    @classmethod
    def lex(cls, num_vars: int, priority: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls.of(OrderKind.LEX, num_vars, priority)

    @classmethod
    def grevlex(cls, num_vars: int, priority: Optional[Sequence[int]] = None) -> "MonomialOrder":
        return cls.of(OrderKind.GREVLEX, num_vars, priority)

    @classmethod
    def grevlex_lowest(cls, num_vars: int, lowest: int) -> "MonomialOrder":
        """grevlex with natural priority except that ``lowest`` comes last."""
        rest = [i for i in range(num_vars) if i != lowest]
        return cls.grevlex(num_vars, rest + [lowest])

    def key(self, m: Monomial) -> tuple:
        if self.kind is OrderKind.LEX:
            return tuple(m[i] for i in self.priority)
        # grevlex: degree first, then the smaller exponent in the lowest
        # differing variable wins
        return (sum(m),) + tuple(-m[i] for i in self._reversed)


def monomial_compare(order: MonomialOrder, a: Monomial, b: Monomial) -> Comparison:
    """Compare two monomials under ``order``."""
    if len(a) != len(b) or len(a) != order.num_vars:
        raise ValueError(
            f"Monomial lengths {len(a)} and {len(b)} do not match the order's {order.num_vars} variables"
        )
    ka, kb = order.key(a), order.key(b)
    if ka == kb:
        return Comparison.EQ
    return Comparison.GT if ka > kb else Comparison.LT


# ---------------------------------------------------------------------------
# binomials and ideals
# ---------------------------------------------------------------------------

class PureBinomial(NamedTuple):
    """``x^lead - x^trail`` with implicit coefficients +1 and -1."""

    lead: Monomial
    trail: Monomial

    @property
    def num_vars(self) -> int:
        return len(self.lead)

    def is_homogeneous(self) -> bool:
        return degree(self.lead) == degree(self.trail)

    def swapped(self) -> "PureBinomial":
        return PureBinomial(self.trail, self.lead)


def orient(a: Monomial, b: Monomial, order: MonomialOrder) -> Optional[PureBinomial]:
    """Return ``±(x^a - x^b)`` with the larger term first, or None when ``a == b``."""
    if a == b:
        return None
    if order.key(a) > order.key(b):
        return PureBinomial(a, b)
    return PureBinomial(b, a)


def is_oriented(f: PureBinomial, order: MonomialOrder) -> bool:
    return order.key(f.lead) > order.key(f.trail)


def _assert_pure(f: PureBinomial) -> None:
    # Pure-difference ideals contain no monomials: setting every variable to 1
    # kills each element but not a monomial. A binomial with equal terms is 0.
    if not isinstance(f, PureBinomial) or len(f) != 2:
        raise TypeError(f"Expected a PureBinomial, got {f!r}")
    if f.lead == f.trail:
        raise ValueError("The zero binomial cannot be a generator")


@dataclass(frozen=True)
class BinomialIdeal:
    """An ideal given by finitely many pure binomials (empty = zero ideal)."""

    num_vars: int
    generators: Tuple[PureBinomial, ...] = ()

    def __post_init__(self) -> None:
        gens = tuple(PureBinomial(tuple(f[0]), tuple(f[1])) for f in self.generators)
        for f in gens:
            _assert_pure(f)
            if len(f.lead) != self.num_vars or len(f.trail) != self.num_vars:
                raise ValueError(f"Generator {f} does not live in {self.num_vars} variables")
        object.__setattr__(self, "generators", gens)

    @classmethod
    def zero(cls, num_vars: int) -> "BinomialIdeal":
        return cls(num_vars, ())

    @property
    def is_zero(self) -> bool:
        return not self.generators

    def __add__(self, other: "BinomialIdeal") -> "BinomialIdeal":
        if not isinstance(other, BinomialIdeal):
            return NotImplemented
        if other.num_vars != self.num_vars:
            raise ValueError(f"Cannot add ideals in {self.num_vars} and {other.num_vars} variables")
        return BinomialIdeal(self.num_vars, self.generators + other.generators)


def sum_ideals(ideals: Iterable[BinomialIdeal], num_vars: int) -> BinomialIdeal:
    total = BinomialIdeal.zero(num_vars)
    for ideal in ideals:
        total = total + ideal
    return total


def rename_variables(ideal: BinomialIdeal, mapping: Mapping[int, int], num_vars: int) -> BinomialIdeal:
    """
    Move every generator into ``num_vars`` variables through ``mapping``.

    ``mapping`` sends old variable indices to new ones and must be injective on
    the variables the generators actually use.
    """
    targets = list(mapping.values())
    if len(set(targets)) != len(targets):
        raise ValueError("Variable renaming must be injective")
    if any(t < 0 or t >= num_vars for t in targets):
        raise ValueError(f"Variable renaming leaves the range 0..{num_vars - 1}")

    def move(m: Monomial) -> Monomial:
        out = [0] * num_vars
        for i, e in enumerate(m):
            if e:
                if i not in mapping:
                    raise ValueError(f"Variable {i} is used but not renamed")
                out[mapping[i]] = e
        return tuple(out)

    return BinomialIdeal(num_vars, tuple(PureBinomial(move(f.lead), move(f.trail)) for f in ideal.generators))


def default_order(num_vars: int) -> MonomialOrder:
    return MonomialOrder.grevlex(num_vars)


# ---------------------------------------------------------------------------
# reduction and Buchberger
# ---------------------------------------------------------------------------

def _reduce_monomial(m: Monomial, basis: Sequence[PureBinomial]) -> Monomial:
    # Each rewrite replaces a multiple of a lead by the same multiple of its
    # trail, which is strictly smaller, so the loop terminates.
    while True:
        for g in basis:
            if divides(g.lead, m):
                m = monomial_mul(monomial_div(m, g.lead), g.trail)
                break
        else:
            return m


def normal_form(f: PureBinomial, basis: Sequence[PureBinomial], order: MonomialOrder) -> Optional[PureBinomial]:
    """
    Reduce ``f`` by ``basis``; None stands for the zero polynomial.

    Both terms are rewritten until no basis lead divides them. The result is
    either zero or a pure binomial oriented under ``order``; it is never a
    monomial.
    """
    for g in basis:
        if len(g.lead) != len(f.lead):
            raise ValueError("Binomial and basis live in different rings")
        if not is_oriented(g, order):
            raise ValueError(f"Basis element {g} is not oriented under {order.kind.value}")
    return _normal_form(f, basis, order)


def _normal_form(f: PureBinomial, basis: Sequence[PureBinomial], order: MonomialOrder) -> Optional[PureBinomial]:
    a = _reduce_monomial(f.lead, basis)
    b = _reduce_monomial(f.trail, basis)
    return orient(a, b, order)


def s_binomial(f: PureBinomial, g: PureBinomial, order: MonomialOrder) -> Optional[PureBinomial]:
    """The S-polynomial of two oriented pure binomials, again pure or zero."""
    lcm = monomial_lcm(f.lead, g.lead)
    a = monomial_mul(monomial_div(lcm, f.lead), f.trail)
    b = monomial_mul(monomial_div(lcm, g.lead), g.trail)
    return orient(a, b, order)


def _sort_key(order: MonomialOrder):
    return lambda f: (order.key(f.lead), order.key(f.trail))


@lru_cache(maxsize=8192)
def _reduced_basis(ideal: BinomialIdeal, order: MonomialOrder) -> Tuple[PureBinomial, ...]:
    key = order.key
    seeds: Set[PureBinomial] = set()
    for f in ideal.generators:
        oriented = orient(f.lead, f.trail, order)
        if oriented is not None:
            seeds.add(oriented)

    basis: List[PureBinomial] = []
    pairs: Set[Tuple[int, int]] = set()

    def add(f: PureBinomial) -> None:
        index = len(basis)
        for i, g in enumerate(basis):
            # Buchberger's first criterion: coprime leads reduce to zero.
            if not coprime(g.lead, f.lead):
                pairs.add((i, index))
        basis.append(f)

    for f in sorted(seeds, key=_sort_key(order)):
        reduced = _normal_form(f, basis, order)
        if reduced is not None:
            add(reduced)

    processed = 0
    while pairs:
        # normal strategy: smallest lcm first, ties broken by position
        i, j = min(pairs, key=lambda p: (key(monomial_lcm(basis[p[0]].lead, basis[p[1]].lead)), p))
        pairs.discard((i, j))
        processed += 1
        s = s_binomial(basis[i], basis[j], order)
        if s is None:
            continue
        reduced = _normal_form(s, basis, order)
        if reduced is not None:
            add(reduced)

    # minimalize
    basis.sort(key=_sort_key(order))
    minimal: List[PureBinomial] = []
    for f in basis:
        if not any(divides(g.lead, f.lead) for g in minimal):
            minimal.append(f)
    # interreduce trails; leads stay untouched in a minimal basis
    reduced_basis = []
    for f in minimal:
        trail = _reduce_monomial(f.trail, minimal)
        g = PureBinomial(f.lead, trail)
        _assert_pure(g)
        reduced_basis.append(g)
    reduced_basis.sort(key=_sort_key(order))

    logger.debug(
        f"Reduced basis: {len(ideal.generators)} generators -> {len(reduced_basis)} elements, "
        f"{processed} S-pairs processed, order={order.kind.value}"
    )
    return tuple(reduced_basis)


def reduced_groebner_basis(ideal: BinomialIdeal, order: Optional[MonomialOrder] = None) -> List[PureBinomial]:
    """
    Compute the reduced Gröbner basis of a pure binomial ideal.

    Buchberger's algorithm specialized to pure binomials: the S-polynomial of
    two pure binomials is again pure (or zero) and so is every remainder. The
    result is sorted by the order on leads, then trails, and does not depend
    on the order or multiplicity of the input generators.

    Args:
        ideal: The ideal (the zero ideal gives an empty basis)
        order: Monomial order; defaults to grevlex with natural priority

    Returns:
        The reduced basis as a list of oriented pure binomials

    Raises:
        ExactOverflowError: If an exponent leaves the supported range
    """
    if order is None:
        order = default_order(ideal.num_vars)
    if order.num_vars != ideal.num_vars:
        raise ValueError(f"Order on {order.num_vars} variables used for an ideal in {ideal.num_vars}")
    return list(_reduced_basis(ideal, order))


def ideal_membership(f: PureBinomial, ideal: BinomialIdeal, order: Optional[MonomialOrder] = None) -> bool:
    """True iff ``f`` (in either orientation) lies in ``ideal``."""
    if len(f.lead) != ideal.num_vars or len(f.trail) != ideal.num_vars:
        raise ValueError("Binomial and ideal live in different rings")
    if order is None:
        order = default_order(ideal.num_vars)
    oriented = orient(f.lead, f.trail, order)
    if oriented is None:
        return True
    basis = reduced_groebner_basis(ideal, order)
    return _normal_form(oriented, basis, order) is None


def ideal_equal(first: BinomialIdeal, second: BinomialIdeal, order: Optional[MonomialOrder] = None) -> bool:
    """True iff both ideals have the same reduced Gröbner basis."""
    if first.num_vars != second.num_vars:
        raise ValueError(f"Cannot compare ideals in {first.num_vars} and {second.num_vars} variables")
    if order is None:
        order = default_order(first.num_vars)
    return set(reduced_groebner_basis(first, order)) == set(reduced_groebner_basis(second, order))


def ideal_contains(big: BinomialIdeal, small: BinomialIdeal, order: Optional[MonomialOrder] = None) -> bool:
    """True iff every generator of ``small`` lies in ``big``."""
    return all(ideal_membership(f, big, order) for f in small.generators)


def is_homogeneous(ideal: BinomialIdeal) -> bool:
    return all(f.is_homogeneous() for f in ideal.generators)


# ---------------------------------------------------------------------------
# saturation
# ---------------------------------------------------------------------------

def _require_homogeneous(ideal: BinomialIdeal) -> None:
    for f in ideal.generators:
        if not f.is_homogeneous():
            raise NonHomogeneousError(
                f"Saturation needs a homogeneous ideal; generator of degrees "
                f"{degree(f.lead)} and {degree(f.trail)} found"
            )


def _divide_out(f: PureBinomial, v: int) -> PureBinomial:
    # Only the common power of v may be removed from a binomial.
    k = min(f.lead[v], f.trail[v])
    if k == 0:
        return f
    lead = list(f.lead)
    trail = list(f.trail)
    lead[v] -= k
    trail[v] -= k
    return PureBinomial(tuple(lead), tuple(trail))


def saturate_variable(ideal: BinomialIdeal, v: int) -> BinomialIdeal:
    """
    Compute ``(I : x_v^∞)`` for a homogeneous pure binomial ideal.

    Under grevlex with ``x_v`` lowest, dividing each element of the reduced
    basis by the largest power of ``x_v`` dividing it generates the colon
    ideal. The divide step is repeated until the reduced basis has no element
    divisible by ``x_v``, which certifies the fixpoint.

    Raises:
        NonHomogeneousError: If a generator is not homogeneous
    """
    _require_homogeneous(ideal)
    if not 0 <= v < ideal.num_vars:
        raise ValueError(f"Variable index {v} out of range 0..{ideal.num_vars - 1}")
    if all(f.lead[v] == 0 and f.trail[v] == 0 for f in ideal.generators):
        # x_v does not occur, so it is a nonzerodivisor modulo I
        return ideal

    order = MonomialOrder.grevlex_lowest(ideal.num_vars, v)
    current = ideal
    rounds = 0
    while True:
        basis = reduced_groebner_basis(current, order)
        divided = [_divide_out(f, v) for f in basis]
        if divided == basis:
            logger.debug(f"Saturation by variable {v} settled after {rounds} divide rounds")
            return BinomialIdeal(ideal.num_vars, tuple(basis))
        rounds += 1
        current = BinomialIdeal(ideal.num_vars, tuple(divided))


def saturate_all(ideal: BinomialIdeal) -> BinomialIdeal:
    """
    Compute ``(I : <all variables>^∞)`` for a homogeneous pure binomial ideal.

    Saturates variable by variable and repeats full passes until a pass leaves
    the ideal unchanged. The result is given by its reduced grevlex basis.

    Raises:
        NonHomogeneousError: If a generator is not homogeneous
    """
    _require_homogeneous(ideal)
    order = default_order(ideal.num_vars)
    current = ideal
    passes = 0
    while True:
        previous = current
        for v in range(ideal.num_vars):
            current = saturate_variable(current, v)
        passes += 1
        if ideal_equal(current, previous, order):
            break
    result = BinomialIdeal(ideal.num_vars, tuple(reduced_groebner_basis(current, order)))
    logger.debug(f"Full saturation reached after {passes} passes with {len(result.generators)} generators")
    return result


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def xy_variable_names(n: int) -> List[str]:
    """Names ``x1..xn, y1..yn`` for the edge-ideal ring in 2n variables."""
    return [f"x{i}" for i in range(1, n + 1)] + [f"y{i}" for i in range(1, n + 1)]


def t_variable_names(q: int) -> List[str]:
    """Names ``t1..tq`` for edge variables."""
    return [f"t{i}" for i in range(1, q + 1)]


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, m):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors) if factors else "1"


def format_binomial(f: PureBinomial, names: Sequence[str]) -> str:
    """Render ``f`` as ``lead - trail``, e.g. ``x1*y2 - x2*y1``."""
    if len(names) != len(f.lead):
        raise ValueError(f"Need {len(f.lead)} variable names, got {len(names)}")
    return f"{format_monomial(f.lead, names)} - {format_monomial(f.trail, names)}"


def format_ideal(ideal: BinomialIdeal, names: Sequence[str]) -> List[str]:
    return [format_binomial(f, names) for f in ideal.generators]


def signed_terms(*products: Tuple[int, Monomial, PureBinomial]) -> Dict[Monomial, int]:
    """
    Expand ``sum(sign * x^m * f)`` into a monomial -> coefficient map.

    Zero coefficients are dropped, so an empty result means the combination
    cancels as a formal polynomial identity.
    """
    terms: Dict[Monomial, int] = {}
    for sign, multiplier, f in products:
        for term, coeff in ((f.lead, sign), (f.trail, -sign)):
            m = monomial_mul(multiplier, term)
            terms[m] = terms.get(m, 0) + coeff
    return {m: c for m, c in terms.items() if c != 0}
