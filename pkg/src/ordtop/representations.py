"""Utility functions, multi-utility families, and semicontinuity checks.

Values are exact rationals throughout; the strict inequalities in the
Richter-Peleg checks never touch floating point.  A ValueFunction is
aligned with the element order of the preorder it describes, which also
pins it to a topology on the same ground set.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from ordtop.errors import (
    DomainMismatchError,
    EmptyFamilyError,
    GroundMismatchError,
    NotLscPreorderError,
    NotTotalError,
)
from ordtop.preorders import ContourKind, Preorder, contour, quotient
from ordtop.topologies import Topology, is_closed


@dataclass(frozen=True)
class ValueFunction:
    """Exact-rational function aligned with an element order."""

    elements: tuple[str, ...]
    values: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if len(self.elements) != len(self.values):
            raise DomainMismatchError(
                f"{len(self.values)} values for {len(self.elements)} elements"
            )

    @classmethod
    def from_mapping(cls, elements: Iterable[str], mapping: Mapping[str, object]) -> ValueFunction:
        labels = tuple(elements)
        missing = [x for x in labels if x not in mapping]
        if missing:
            raise DomainMismatchError(f"no value for {missing[0]!r}")
        extra = [x for x in mapping if x not in set(labels)]
        if extra:
            raise DomainMismatchError(f"value for unknown element {extra[0]!r}")
        return cls(labels, tuple(Fraction(mapping[x]) for x in labels))

    def __call__(self, label: str) -> Fraction:
        try:
            return self.values[self.elements.index(label)]
        except ValueError:
            raise DomainMismatchError(f"no value for {label!r}") from None

    def as_dict(self) -> dict[str, Fraction]:
        return dict(zip(self.elements, self.values))


@dataclass(frozen=True)
class FunctionFamily:
    members: tuple[ValueFunction, ...]


class Sense(Enum):
    LOWER = "lower"
    UPPER = "upper"
    BOTH = "both"


class WitnessKind(Enum):
    #: x <= y but some member decreases
    ORDER_VIOLATED = "order-violated"
    #: not(x <= y) yet every member weakly increases
    NOT_SEPARATED = "not-separated"
    #: x strictly below y but some member is not strictly increasing
    STRICTNESS_VIOLATED = "strictness-violated"


@dataclass(frozen=True)
class RepWitness:
    x: str
    y: str
    member: int | None
    kind: WitnessKind


@dataclass(frozen=True)
class RepVerdict:
    ok: bool
    witness: RepWitness | None = None


@dataclass(frozen=True)
class MonotonicityVerdict:
    isotonic: bool
    order_preserving: bool
    witness: tuple[str, str] | None = None


def _require_same_domain(f: ValueFunction, p: Preorder) -> None:
    if f.elements != p.elements:
        raise DomainMismatchError("function is not aligned with the preorder's elements")


def monotonicity(f: ValueFunction, p: Preorder) -> MonotonicityVerdict:
    """Isotonicity (x <= y implies f(x) <= f(y)) and order preservation."""
    _require_same_domain(f, p)
    n = p.n
    for i in range(n):
        for j in range(n):
            if p.leq_idx(i, j) and f.values[i] > f.values[j]:
                return MonotonicityVerdict(False, False, (p.elements[i], p.elements[j]))
    for i in range(n):
        for j in range(n):
            if p.leq_idx(i, j) and not p.leq_idx(j, i) and f.values[i] >= f.values[j]:
                return MonotonicityVerdict(True, False, (p.elements[i], p.elements[j]))
    return MonotonicityVerdict(True, True)


def _require_family(family: FunctionFamily, p: Preorder) -> None:
    if not family.members:
        raise EmptyFamilyError()
    for f in family.members:
        _require_same_domain(f, p)


def is_multiutility(family: FunctionFamily, p: Preorder) -> RepVerdict:
    """x <= y iff every member weakly increases from x to y, over all pairs."""
    _require_family(family, p)
    n = p.n
    for i in range(n):
        for j in range(n):
            all_le = True
            bad_member = None
            for k, f in enumerate(family.members):
                if f.values[i] > f.values[j]:
                    all_le = False
                    bad_member = k
                    break
            if p.leq_idx(i, j):
                if not all_le:
                    return RepVerdict(
                        False,
                        RepWitness(p.elements[i], p.elements[j], bad_member,
                                   WitnessKind.ORDER_VIOLATED),
                    )
            elif all_le:
                return RepVerdict(
                    False,
                    RepWitness(p.elements[i], p.elements[j], None,
                               WitnessKind.NOT_SEPARATED),
                )
    return RepVerdict(True)


def is_richter_peleg_multiutility(family: FunctionFamily, p: Preorder) -> RepVerdict:
    """A multi-utility whose members are all order-preserving.

    Also re-checks the derived strict-part equivalence (x strictly below y
    iff every member strictly increases), which such a family must satisfy.
    """
    base = is_multiutility(family, p)
    if not base.ok:
        return base
    n = p.n
    for k, f in enumerate(family.members):
        for i in range(n):
            for j in range(n):
                if p.leq_idx(i, j) and not p.leq_idx(j, i) and f.values[i] >= f.values[j]:
                    return RepVerdict(
                        False,
                        RepWitness(p.elements[i], p.elements[j], k,
                                   WitnessKind.STRICTNESS_VIOLATED),
                    )
    for i in range(n):
        for j in range(n):
            strict = p.leq_idx(i, j) and not p.leq_idx(j, i)
            all_lt = all(f.values[i] < f.values[j] for f in family.members)
            if strict != all_lt:
                return RepVerdict(
                    False,
                    RepWitness(p.elements[i], p.elements[j], None,
                               WitnessKind.STRICTNESS_VIOLATED),
                )
    return RepVerdict(True)


@dataclass(frozen=True)
class ScVerdict:
    ok: bool
    at: str | None = None
    failing_set: int | None = None


def semicontinuity(f: ValueFunction, t: Topology, sense: Sense) -> ScVerdict:
    """Semicontinuity of ``f`` via closedness of its level sets.

    Lower: every sublevel set {y : f(y) <= f(x)} is closed.  Upper: dually
    with superlevel sets.  Both: both, i.e. continuity at finite scale.
    """
    if len(f.elements) != t.ground_size:
        raise DomainMismatchError(
            f"{len(f.elements)} elements vs ground size {t.ground_size}"
        )
    n = t.ground_size
    senses = (Sense.LOWER, Sense.UPPER) if sense is Sense.BOTH else (sense,)
    for s in senses:
        for x in range(n):
            level = 0
            for y in range(n):
                if s is Sense.LOWER:
                    if f.values[y] <= f.values[x]:
                        level |= 1 << y
                else:
                    if f.values[y] >= f.values[x]:
                        level |= 1 << y
            if not is_closed(t, level):
                return ScVerdict(False, f.elements[x], level)
    return ScVerdict(True)


@dataclass(frozen=True)
class PreorderScVerdict:
    ok: bool
    witness: str | None = None
    contour: int | None = None


def preorder_semicontinuity(p: Preorder, t: Topology, sense: Sense) -> PreorderScVerdict:
    """Closedness of every weak lower (resp. upper) contour in ``t``."""
    if p.n != t.ground_size:
        raise GroundMismatchError(p.n, t.ground_size)
    if sense is Sense.BOTH:
        raise ValueError("preorder semicontinuity is checked one sense at a time")
    kind = ContourKind.WEAK_LOWER if sense is Sense.LOWER else ContourKind.WEAK_UPPER
    for a in p.elements:
        c = contour(p, a, kind)
        if not is_closed(t, c):
            return PreorderScVerdict(False, a, c)
    return PreorderScVerdict(True)


@dataclass(frozen=True)
class StrictContinuityVerdict:
    ok: bool
    witness: str | None = None
    kind: ContourKind | None = None
    contour: int | None = None


def strict_continuity(p: Preorder, t: Topology) -> StrictContinuityVerdict:
    """Openness of every strict contour (both directions) in ``t``."""
    if p.n != t.ground_size:
        raise GroundMismatchError(p.n, t.ground_size)
    for a in p.elements:
        for kind in (ContourKind.STRICT_LOWER, ContourKind.STRICT_UPPER):
            c = contour(p, a, kind)
            if not t.is_open(c):
                return StrictContinuityVerdict(False, a, kind, c)
    return StrictContinuityVerdict(True)


def construct_indicator_multiutility(p: Preorder) -> FunctionFamily:
    """One 0/1 member per element x: the indicator of the up-set of x."""
    members = []
    for i in range(p.n):
        values = tuple(
            Fraction(1) if p.leq_idx(i, j) else Fraction(0) for j in range(p.n)
        )
        members.append(ValueFunction(p.elements, values))
    return FunctionFamily(tuple(members))


def construct_lsc_multiutility(p: Preorder, t: Topology) -> FunctionFamily:
    """One member per element x: 0 on the weak lower contour of x, 1 outside.

    Every member's sublevel sets are then exactly the closed contours, so
    the family is lower semicontinuous whenever the preorder is.
    """
    if p.n != t.ground_size:
        raise GroundMismatchError(p.n, t.ground_size)
    sc = preorder_semicontinuity(p, t, Sense.LOWER)
    if not sc.ok:
        assert sc.witness is not None and sc.contour is not None
        raise NotLscPreorderError(sc.witness, sc.contour)
    members = []
    for i in range(p.n):
        values = tuple(
            Fraction(0) if p.leq_idx(j, i) else Fraction(1) for j in range(p.n)
        )
        members.append(ValueFunction(p.elements, values))
    return FunctionFamily(tuple(members))


def construct_rp_utility(p: Preorder) -> ValueFunction:
    """f(y) = number of elements y is not below; isotonic and order-preserving."""
    n = p.n
    values = tuple(Fraction(n - p.rows[i].bit_count()) for i in range(n))
    return ValueFunction(p.elements, values)


def rank_utility(p: Preorder) -> ValueFunction:
    """Rank of each element's equivalence class along a total preorder."""
    bad = p.incomparable_pair()
    if bad is not None:
        raise NotTotalError(bad)
    q = quotient(p)
    k = q.order.n
    # sort classes along the chain: fewer classes below means lower rank
    by_position = sorted(range(k), key=lambda c: q.order.cols[c].bit_count())
    rank_of_class = {c: pos for pos, c in enumerate(by_position)}
    values = tuple(Fraction(rank_of_class[q.class_of[x]]) for x in p.elements)
    return ValueFunction(p.elements, values)


@dataclass(frozen=True)
class LscRpResult:
    """Certificate for the lsc Richter-Peleg decision procedure.

    Exactly one of ``family`` (the representation) and ``obstruction``
    (an element whose weak lower contour is not closed) is set.
    """

    family: FunctionFamily | None = None
    obstruction: str | None = None
    obstruction_contour: int | None = None

    @property
    def has_family(self) -> bool:
        return self.family is not None


def construct_finite_lsc_rp_multiutility(p: Preorder, t: Topology) -> LscRpResult:
    """Decide lsc Richter-Peleg multi-utility representability on ``(p, t)``.

    When every weak lower contour is closed, returns the family
    ``g_x = f + (n + 1) * v_x`` where ``f`` counts non-dominated elements,
    ``v_x`` is the 0/1 contour indicator, and ``n`` is the maximum of
    ``f``; the scale makes every separation an integer gap.  Otherwise
    returns the first offending contour as the obstruction.
    """
    if p.n != t.ground_size:
        raise GroundMismatchError(p.n, t.ground_size)
    sc = preorder_semicontinuity(p, t, Sense.LOWER)
    if not sc.ok:
        return LscRpResult(obstruction=sc.witness, obstruction_contour=sc.contour)
    f = construct_rp_utility(p)
    scale = max(f.values) + 1
    members = []
    for i in range(p.n):
        values = tuple(
            f.values[j] + (Fraction(0) if p.leq_idx(j, i) else scale)
            for j in range(p.n)
        )
        members.append(ValueFunction(p.elements, values))
    return LscRpResult(family=FunctionFamily(tuple(members)))
