"""Finite topologies as explicit families of open masks.

Opens are stored canonically (duplicate-free, ascending), so family
equality is tuple equality.  Generation from a subbasis closes the family
under pairwise union and intersection until a fixpoint, which on a finite
ground set yields the full topology.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable

from ordtop import kernels
from ordtop.errors import (
    EmptySubspaceError,
    GroundMismatchError,
    OutOfBoundsError,
    TooLargeError,
)
from ordtop.preorders import ContourKind, Preorder, contour

SCOTT_CAP = 20


@dataclass(frozen=True)
class Topology:
    ground_size: int
    opens: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.ground_size) - 1

    @cached_property
    def open_set(self) -> frozenset[int]:
        return frozenset(self.opens)

    @cached_property
    def closed_set(self) -> frozenset[int]:
        full = self.full_mask
        return frozenset(full & ~o for o in self.opens)

    def is_open(self, mask: int) -> bool:
        return mask in self.open_set

    def is_closed_mask(self, mask: int) -> bool:
        return (self.full_mask & ~mask) in self.open_set


class SubbasisRole(Enum):
    AS_OPEN_SUBBASIS = "open"
    AS_CLOSED_SUBBASIS = "closed"


def _check_mask(ground_size: int, mask: int) -> None:
    if mask & ~((1 << ground_size) - 1):
        raise OutOfBoundsError(mask, ground_size)


def discrete(ground_size: int) -> Topology:
    full = (1 << ground_size) - 1
    return Topology(ground_size, tuple(range(full + 1)))


def indiscrete(ground_size: int) -> Topology:
    full = (1 << ground_size) - 1
    return Topology(ground_size, (0, full) if full else (0,))


def generate(ground_size: int, sets: Iterable[int], role: SubbasisRole) -> Topology:
    """Smallest topology whose opens (resp. closeds) include the given family."""
    if ground_size < 1:
        raise ValueError("ground_size must be at least 1")
    full = (1 << ground_size) - 1
    members = []
    for s in sets:
        _check_mask(ground_size, s)
        if role is SubbasisRole.AS_CLOSED_SUBBASIS:
            s = full & ~s
        members.append(s)
    opens = kernels.close_family(members, full)
    return Topology(ground_size, tuple(opens))


def upper_topology(p: Preorder) -> Topology:
    """Closed sets generated by the weak lower contours."""
    contours = [contour(p, a, ContourKind.WEAK_LOWER) for a in p.elements]
    return generate(p.n, contours, SubbasisRole.AS_CLOSED_SUBBASIS)


def alexandrov_topology(p: Preorder) -> Topology:
    """Opens are exactly the up-sets."""
    return Topology(p.n, tuple(kernels.up_sets(list(p.rows))))


def scott_topology(p: Preorder) -> Topology:
    """Up-sets that no directed set's supremum can enter from outside.

    Computed literally from the directed-subset definition (every nonempty
    subset is tested for directedness and for a supremum class), not via
    any finite-case shortcut, so agreement with the other generators stays
    a checkable fact.
    """
    if p.n > SCOTT_CAP:
        raise TooLargeError(SCOTT_CAP, p.n)
    return Topology(p.n, tuple(kernels.scott_opens(list(p.rows))))


def order_topology(p: Preorder) -> Topology:
    """Generated by the strict contours as an open subbasis."""
    sets = [contour(p, a, ContourKind.STRICT_LOWER) for a in p.elements]
    sets += [contour(p, a, ContourKind.STRICT_UPPER) for a in p.elements]
    return generate(p.n, sets, SubbasisRole.AS_OPEN_SUBBASIS)


@dataclass(frozen=True)
class FinerVerdict:
    ok: bool
    missing_open: int | None = None


def is_finer(t1: Topology, t2: Topology) -> FinerVerdict:
    """True when every open of ``t2`` is open in ``t1``."""
    if t1.ground_size != t2.ground_size:
        raise GroundMismatchError(t1.ground_size, t2.ground_size)
    for o in t2.opens:
        if o not in t1.open_set:
            return FinerVerdict(False, o)
    return FinerVerdict(True)


def is_closed(t: Topology, mask: int) -> bool:
    _check_mask(t.ground_size, mask)
    return t.is_closed_mask(mask)


def closure(t: Topology, mask: int) -> int:
    """Smallest closed superset of ``mask``."""
    _check_mask(t.ground_size, mask)
    acc = t.full_mask
    for c in t.closed_set:
        if c & mask == mask:
            acc &= c
    return acc


def interior(t: Topology, mask: int) -> int:
    """Largest open subset of ``mask``."""
    _check_mask(t.ground_size, mask)
    acc = 0
    for o in t.opens:
        if o & mask == o:
            acc |= o
    return acc


def subspace(t: Topology, mask: int) -> Topology:
    """Trace topology on ``mask``, re-indexed to a compact ground set."""
    _check_mask(t.ground_size, mask)
    if not mask:
        raise EmptySubspaceError()
    kept = []
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        kept.append(i)
    position = {i: pos for pos, i in enumerate(kept)}
    opens = set()
    for o in t.opens:
        trace = o & mask
        compact = 0
        while trace:
            i = (trace & -trace).bit_length() - 1
            trace &= trace - 1
            compact |= 1 << position[i]
        opens.add(compact)
    result = Topology(len(kept), tuple(sorted(opens)))
    problem = verify_axioms(result)
    if problem is not None:  # cannot happen for a trace of a topology
        raise AssertionError(f"subspace produced a non-topology: {problem}")
    return result


def random_topology_between(lower: Topology, seed: int, extra_sets: int) -> Topology:
    """Seeded topology refining ``lower`` by ``extra_sets`` random subsets."""
    rng = random.Random(seed)
    full = lower.full_mask
    members = list(lower.opens)
    for _ in range(extra_sets):
        members.append(rng.randrange(full + 1))
    return Topology(lower.ground_size, tuple(kernels.close_family(members, full)))


def verify_axioms(t: Topology) -> str | None:
    """None when ``t`` satisfies the finite topology axioms, else a description."""
    opens = t.open_set
    if len(t.opens) != len(opens) or tuple(sorted(opens)) != t.opens:
        return "opens are not canonically sorted and duplicate-free"
    if 0 not in opens:
        return "empty set is not open"
    if t.full_mask not in opens:
        return "ground set is not open"
    for a in t.opens:
        if a & ~t.full_mask:
            return f"open {a:#x} exceeds the ground set"
        for b in t.opens:
            if a | b not in opens:
                return f"union of {a:#x} and {b:#x} is not open"
            if a & b not in opens:
                return f"intersection of {a:#x} and {b:#x} is not open"
    return None
