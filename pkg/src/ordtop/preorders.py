"""Finite preorders on labelled ground sets.

A :class:`Preorder` stores an ordered tuple of opaque string labels and a
reflexive-transitive relation as per-element bitmask rows: ``rows[i]``
holds the set ``{j : element i <= element j}``.  Subsets of the ground
set ("element sets") travel as plain int masks; :func:`mask_of` and
:func:`labels_of` convert at the boundary.

All values are immutable after construction and every operation is a
pure function of its inputs, so everything here is safe to share across
threads.  Randomised operations take explicit seeds.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

from ordtop import kernels
from ordtop.errors import (
    DuplicateLabelError,
    EmptySetError,
    EmptyUniverseError,
    InconsistentForcingError,
    NotReflexiveError,
    NotTransitiveError,
    NotTotalError,
    OutOfBoundsError,
    TooLargeError,
    UnknownLabelError,
)

WIDTH_CAP = 25


class PairClass(Enum):
    """How an ordered pair (a, b) sits in the preorder."""

    EQUIVALENT = "equivalent"
    STRICTLY_BELOW = "strictly-below"
    STRICTLY_ABOVE = "strictly-above"
    INCOMPARABLE = "incomparable"


class ContourKind(Enum):
    WEAK_LOWER = "weak-lower"
    WEAK_UPPER = "weak-upper"
    STRICT_LOWER = "strict-lower"
    STRICT_UPPER = "strict-upper"


class SetDirection(Enum):
    UP = "up"
    DOWN = "down"


@dataclass(frozen=True)
class Preorder:
    """Immutable finite preorder; construct via :func:`build_preorder`."""

    elements: tuple[str, ...]
    rows: tuple[int, ...]

    @property
    def n(self) -> int:
        return len(self.elements)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.elements)) - 1

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.elements)}

    @cached_property
    def cols(self) -> tuple[int, ...]:
        """cols[j] = mask of {i : element i <= element j}."""
        cols = [0] * self.n
        for i, r in enumerate(self.rows):
            m = r
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                cols[j] |= 1 << i
        return tuple(cols)

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(label) from None

    def label(self, i: int) -> str:
        return self.elements[i]

    def leq_idx(self, i: int, j: int) -> bool:
        return bool(self.rows[i] >> j & 1)

    def leq(self, a: str, b: str) -> bool:
        return self.leq_idx(self.index(a), self.index(b))

    def eq_class_idx(self, i: int) -> int:
        """Mask of the equivalence class of element i."""
        return self.rows[i] & self.cols[i]

    def incomparable_pair(self) -> tuple[str, str] | None:
        """Some incomparable pair, or None when the preorder is total."""
        for i in range(self.n):
            comparable = self.rows[i] | self.cols[i]
            missing = ~comparable & self.full_mask
            if missing:
                j = (missing & -missing).bit_length() - 1
                return (self.elements[i], self.elements[j])
        return None

    def is_total(self) -> bool:
        return self.incomparable_pair() is None


def mask_of(p: Preorder, labels: Iterable[str]) -> int:
    mask = 0
    for label in labels:
        mask |= 1 << p.index(label)
    return mask


def labels_of(p: Preorder, mask: int) -> tuple[str, ...]:
    if mask & ~p.full_mask:
        raise OutOfBoundsError(mask, p.n)
    out = []
    while mask:
        i = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(p.elements[i])
    return tuple(out)


def _check_mask(p: Preorder, mask: int) -> None:
    if mask & ~p.full_mask:
        raise OutOfBoundsError(mask, p.n)


def build_preorder(
    elements: Sequence[str],
    pairs: Iterable[tuple[str, str]] = (),
    autoclose: bool = True,
) -> Preorder:
    """Build a preorder from generating pairs.

    With ``autoclose`` the reflexive-transitive closure of the pairs is
    taken; otherwise the pairs must already satisfy both axioms (every
    ``(a, a)`` must be listed explicitly).
    """
    labels = tuple(elements)
    if not labels:
        raise EmptyUniverseError()
    seen: set[str] = set()
    for label in labels:
        if label in seen:
            raise DuplicateLabelError(label)
        seen.add(label)
    index = {label: i for i, label in enumerate(labels)}
    n = len(labels)
    rows = [0] * n
    for a, b in pairs:
        if a not in index:
            raise UnknownLabelError(a)
        if b not in index:
            raise UnknownLabelError(b)
        rows[index[a]] |= 1 << index[b]
    if autoclose:
        for i in range(n):
            rows[i] |= 1 << i
        rows = kernels.transitive_closure(rows)
    else:
        for i in range(n):
            if not rows[i] >> i & 1:
                raise NotReflexiveError(labels[i])
        bad = kernels.transitivity_violation(rows)
        if bad is not None:
            i, j, k = bad
            raise NotTransitiveError((labels[i], labels[j], labels[k]))
    return Preorder(labels, tuple(rows))


def classify_pair(p: Preorder, a: str, b: str) -> PairClass:
    ab = p.leq(a, b)
    ba = p.leq(b, a)
    if ab and ba:
        return PairClass.EQUIVALENT
    if ab:
        return PairClass.STRICTLY_BELOW
    if ba:
        return PairClass.STRICTLY_ABOVE
    return PairClass.INCOMPARABLE


def contour(p: Preorder, a: str, kind: ContourKind) -> int:
    """Mask of the requested contour set of ``a``."""
    i = p.index(a)
    if kind is ContourKind.WEAK_UPPER:
        return p.rows[i]
    if kind is ContourKind.WEAK_LOWER:
        return p.cols[i]
    if kind is ContourKind.STRICT_UPPER:
        return p.rows[i] & ~p.cols[i]
    return p.cols[i] & ~p.rows[i]


@dataclass(frozen=True)
class MonotoneVerdict:
    ok: bool
    witness: tuple[str, str] | None = None


def is_monotone_set(p: Preorder, mask: int, direction: SetDirection) -> MonotoneVerdict:
    """Check up-set / down-set closure; on failure return a violating pair."""
    _check_mask(p, mask)
    reach = p.rows if direction is SetDirection.UP else p.cols
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        escaped = reach[i] & ~mask
        if escaped:
            j = (escaped & -escaped).bit_length() - 1
            return MonotoneVerdict(False, (p.elements[i], p.elements[j]))
    return MonotoneVerdict(True)


@dataclass(frozen=True)
class Quotient:
    """Partial order on equivalence classes plus the projection map."""

    order: Preorder
    class_of: dict[str, int]
    class_masks: tuple[int, ...]


def quotient(p: Preorder) -> Quotient:
    """Collapse equivalence classes; the result is antisymmetric."""
    class_masks: list[int] = []
    class_id: dict[int, int] = {}
    class_of: dict[str, int] = {}
    reps: list[int] = []
    for i in range(p.n):
        m = p.eq_class_idx(i)
        if m not in class_id:
            class_id[m] = len(class_masks)
            class_masks.append(m)
            reps.append(i)
        class_of[p.elements[i]] = class_id[m]
    k = len(class_masks)
    labels = tuple(",".join(sorted(labels_of(p, m))) for m in class_masks)
    rows = [0] * k
    for ci in range(k):
        for cj in range(k):
            if p.leq_idx(reps[ci], reps[cj]):
                rows[ci] |= 1 << cj
    return Quotient(Preorder(labels, tuple(rows)), class_of, tuple(class_masks))


@dataclass(frozen=True)
class WidthResult:
    size: int
    antichain: int


def width(p: Preorder) -> WidthResult:
    """Maximum antichain by exhaustive search (ground set capped at 25)."""
    if p.n > WIDTH_CAP:
        raise TooLargeError(WIDTH_CAP, p.n)
    mask = kernels.max_antichain(list(p.rows))
    return WidthResult(mask.bit_count(), mask)


def _total_preorder_from_class_order(p: Preorder, q: Quotient, order: Sequence[int]) -> Preorder:
    rank = {c: pos for pos, c in enumerate(order)}
    n = p.n
    rows = [0] * n
    for i in range(n):
        ri = rank[q.class_of[p.elements[i]]]
        for j in range(n):
            if ri <= rank[q.class_of[p.elements[j]]]:
                rows[i] |= 1 << j
    return Preorder(p.elements, tuple(rows))


def szpilrajn_extension(
    p: Preorder,
    forced: Iterable[tuple[str, str]] = (),
    seed: int = 0,
) -> Preorder:
    """Seeded total extension of ``p`` with the forced pairs made strict.

    The quotient is extended to a total order by a randomised topological
    sort (tie-breaking driven by ``seed``), then lifted back to the
    elements, which preserves the strict part by construction.
    """
    q = quotient(p)
    k = q.order.n
    class_rows = list(q.order.rows)
    for a, b in forced:
        ia, ib = p.index(a), p.index(b)
        if p.leq_idx(ib, ia):
            raise InconsistentForcingError(
                (a, b), f"{b!r} is already below-or-equivalent-to {a!r}"
            )
        class_rows[q.class_of[a]] |= 1 << q.class_of[b]
    class_rows = kernels.transitive_closure(class_rows)
    for ci in range(k):
        for cj in range(ci + 1, k):
            if class_rows[ci] >> cj & 1 and class_rows[cj] >> ci & 1:
                pair = (q.order.elements[ci], q.order.elements[cj])
                raise InconsistentForcingError(pair, "forced pairs create a cycle")
    rng = random.Random(seed)
    remaining = (1 << k) - 1
    order: list[int] = []
    while remaining:
        sources = []
        m = remaining
        while m:
            c = (m & -m).bit_length() - 1
            m &= m - 1
            below = 0
            m2 = remaining & ~(1 << c)
            while m2:
                d = (m2 & -m2).bit_length() - 1
                m2 &= m2 - 1
                if class_rows[d] >> c & 1:
                    below |= 1 << d
            if not below:
                sources.append(c)
        pick = sources[rng.randrange(len(sources))]
        order.append(pick)
        remaining &= ~(1 << pick)
    return _total_preorder_from_class_order(p, q, order)


def enumerate_linear_extensions(p: Preorder, limit: int) -> list[Preorder]:
    """Distinct total extensions of ``p`` (strict part preserved), at most ``limit``.

    Extensions keep the equivalence classes intact and order them in every
    way compatible with the quotient; enumeration is lexicographic in class
    index, so the result is deterministic and exhaustive when the total
    count does not exceed ``limit``.
    """
    if limit < 1:
        raise ValueError("limit must be at least 1")
    q = quotient(p)
    k = q.order.n
    class_rows = q.order.rows
    results: list[Preorder] = []
    acc: list[int] = []

    def dfs(remaining: int) -> None:
        if len(results) >= limit:
            return
        if not remaining:
            results.append(_total_preorder_from_class_order(p, q, acc))
            return
        for c in range(k):
            if not remaining >> c & 1:
                continue
            blocked = False
            m = remaining & ~(1 << c)
            while m:
                d = (m & -m).bit_length() - 1
                m &= m - 1
                if class_rows[d] >> c & 1:
                    blocked = True
                    break
            if blocked:
                continue
            acc.append(c)
            dfs(remaining & ~(1 << c))
            acc.pop()
            if len(results) >= limit:
                return

    dfs((1 << k) - 1)
    return results


@dataclass(frozen=True)
class DirectedSupVerdict:
    is_directed: bool
    sup_class: int | None


def directed_sup(p: Preorder, mask: int) -> DirectedSupVerdict:
    """Directedness of a subset and its supremum class (if one exists).

    The supremum exists when the minimal upper bounds of the subset form a
    single equivalence class; that class mask is returned.
    """
    _check_mask(p, mask)
    if not mask:
        raise EmptySetError("directed-set query")
    elems = []
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        elems.append(i)
    directed = True
    for ai in range(len(elems)):
        for bi in range(ai + 1, len(elems)):
            if not p.rows[elems[ai]] & p.rows[elems[bi]] & mask:
                directed = False
                break
        if not directed:
            break
    ub = p.full_mask
    for i in elems:
        ub &= p.rows[i]
    sup_class: int | None = None
    if ub:
        minima = 0
        m = ub
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            if not (p.cols[i] & ~p.rows[i]) & ub:
                minima |= 1 << i
        m0 = (minima & -minima).bit_length() - 1
        if not minima & ~p.eq_class_idx(m0):
            sup_class = p.eq_class_idx(m0)
    return DirectedSupVerdict(directed, sup_class)


def restrict(p: Preorder, mask: int) -> Preorder:
    """Induced sub-preorder on the elements of ``mask`` (labels kept)."""
    _check_mask(p, mask)
    if not mask:
        raise EmptySetError("carrier of a sub-preorder")
    kept = []
    m = mask
    while m:
        i = (m & -m).bit_length() - 1
        m &= m - 1
        kept.append(i)
    labels = tuple(p.elements[i] for i in kept)
    rows = []
    for i in kept:
        r = 0
        for new_j, j in enumerate(kept):
            if p.leq_idx(i, j):
                r |= 1 << new_j
        rows.append(r)
    return Preorder(labels, tuple(rows))
