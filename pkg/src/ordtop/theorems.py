"""Executable checkers for the order-topology theorems, plus an instance miner.

Each checker either passes, passes vacuously (its premise failed, which
the report makes explicit through ``non_vacuous``), or emits a replayable
violation carrying a serialised instance document.  Violations should
never occur; any one of them is a bug certificate.
"""

from __future__ import annotations

import json
import random
import time
from dataclasses import dataclass, field
from typing import Iterator, Sequence

from ordtop import instances
from ordtop.errors import (
    GroundMismatchError,
    PremiseFailedError,
    RefinementViolatedError,
    TooLargeError,
)
from ordtop.preorders import (
    Preorder,
    build_preorder,
    enumerate_linear_extensions,
    labels_of,
    mask_of,
    restrict,
    szpilrajn_extension,
)
from ordtop.representations import (
    Sense,
    is_richter_peleg_multiutility,
    construct_finite_lsc_rp_multiutility,
    preorder_semicontinuity,
    semicontinuity,
)
from ordtop.topologies import (
    Topology,
    alexandrov_topology,
    discrete,
    indiscrete,
    is_closed,
    is_finer,
    random_topology_between,
    scott_topology,
    subspace,
    upper_topology,
)

CHAIN_RESTRICTION_CAP = 8
MINE_CAP = 8
_EXHAUSTIVE_LIMIT = 50_000

THEOREM_IDS = (
    "topology-coincidence",
    "lsc-iff-upper",
    "scott-necessity",
    "alexandrov-antitone",
    "linear-extensions-lsc",
    "chain-restriction",
)


@dataclass(frozen=True)
class TheoremViolation:
    theorem_id: str
    instance: str  # serialised InstanceDocument
    params: dict
    detail: str

    def to_json(self) -> str:
        return json.dumps(
            {
                "theorem": self.theorem_id,
                "instance": json.loads(self.instance),
                "params": self.params,
                "detail": self.detail,
            }
        )


@dataclass(frozen=True)
class TheoremReport:
    theorem_id: str
    instances_checked: int
    non_vacuous: int
    violations: tuple[TheoremViolation, ...]
    elapsed: float

    @property
    def ok(self) -> bool:
        return not self.violations

    @property
    def premise_held(self) -> bool:
        return self.non_vacuous > 0


def _report(theorem_id, checked, non_vacuous, violations, started) -> TheoremReport:
    return TheoremReport(
        theorem_id,
        checked,
        non_vacuous,
        tuple(violations),
        time.perf_counter() - started,
    )


def _violation(
    theorem_id: str,
    p: Preorder,
    t: Topology | None = None,
    params: dict | None = None,
    detail: str = "",
) -> TheoremViolation:
    doc = instances.make_document(p, topology=t)
    return TheoremViolation(theorem_id, instances.serialize_instance(doc), params or {}, detail)


def check_lsc_iff_upper(p: Preorder, t: Topology) -> TheoremReport:
    """Lower semicontinuity of the preorder iff the topology refines its upper topology."""
    started = time.perf_counter()
    if p.n != t.ground_size:
        raise GroundMismatchError(p.n, t.ground_size)
    lhs = preorder_semicontinuity(p, t, Sense.LOWER).ok
    rhs = is_finer(t, upper_topology(p)).ok
    violations = []
    if lhs != rhs:
        violations.append(
            _violation(
                "lsc-iff-upper", p, t,
                detail=f"semicontinuity={lhs} but upper-refinement={rhs}",
            )
        )
    return _report("lsc-iff-upper", 1, 1, violations, started)


def check_scott_necessity(p: Preorder, t: Topology) -> TheoremReport:
    """A finite lsc Richter-Peleg multi-utility forces the topology above Scott.

    The constructed family is re-verified with the independent checkers
    before the refinement conclusion is asserted; an obstruction makes the
    instance a vacuous pass (after confirming the obstruction itself).
    """
    started = time.perf_counter()
    if p.n != t.ground_size:
        raise GroundMismatchError(p.n, t.ground_size)
    result = construct_finite_lsc_rp_multiutility(p, t)
    violations = []
    if not result.has_family:
        assert result.obstruction_contour is not None
        if is_closed(t, result.obstruction_contour):
            violations.append(
                _violation(
                    "scott-necessity", p, t,
                    detail=f"obstruction contour of {result.obstruction!r} is closed after all",
                )
            )
        return _report("scott-necessity", 1, 0, violations, started)
    family = result.family
    assert family is not None
    verdict = is_richter_peleg_multiutility(family, p)
    if not verdict.ok:
        violations.append(
            _violation("scott-necessity", p, t,
                       detail=f"constructed family fails the RP check: {verdict.witness}")
        )
    for k, member in enumerate(family.members):
        sc = semicontinuity(member, t, Sense.LOWER)
        if not sc.ok:
            violations.append(
                _violation("scott-necessity", p, t,
                           detail=f"member {k} is not lower semicontinuous at {sc.at!r}")
            )
    fin = is_finer(t, scott_topology(p))
    if not fin.ok:
        violations.append(
            _violation(
                "scott-necessity", p, t,
                detail=f"family exists but Scott open {fin.missing_open:#x} is missing",
            )
        )
    return _report("scott-necessity", 1, 1, violations, started)


def check_alexandrov_antitone(p_coarse: Preorder, p_fine: Preorder) -> TheoremReport:
    """Refining the preorder can only shrink the Alexandrov topology."""
    started = time.perf_counter()
    if p_coarse.elements != p_fine.elements:
        raise GroundMismatchError(p_coarse.n, p_fine.n)
    for i in range(p_coarse.n):
        escaped = p_coarse.rows[i] & ~p_fine.rows[i]
        if escaped:
            j = (escaped & -escaped).bit_length() - 1
            raise RefinementViolatedError((p_coarse.elements[i], p_coarse.elements[j]))
    fin = is_finer(alexandrov_topology(p_coarse), alexandrov_topology(p_fine))
    violations = []
    if not fin.ok:
        violations.append(
            _violation(
                "alexandrov-antitone", p_fine,
                params={"coarse_relation": _relation_pairs(p_coarse)},
                detail=f"fine Alexandrov open {fin.missing_open:#x} missing from the coarse one",
            )
        )
    return _report("alexandrov-antitone", 1, 1, violations, started)


def check_linear_extensions_lsc(
    p: Preorder, t: Topology, samples: int, seed: int
) -> TheoremReport:
    """Above the Alexandrov topology every linear extension is lower semicontinuous."""
    started = time.perf_counter()
    if p.n != t.ground_size:
        raise GroundMismatchError(p.n, t.ground_size)
    fin = is_finer(t, alexandrov_topology(p))
    if not fin.ok:
        raise PremiseFailedError(
            "topology is not finer than the Alexandrov topology", fin.missing_open
        )
    exts = enumerate_linear_extensions(p, max(samples, 1) + 1)
    if len(exts) > samples:
        exts = [szpilrajn_extension(p, (), seed=seed * 8191 + i) for i in range(samples)]
    violations = []
    for ext in exts:
        sc = preorder_semicontinuity(ext, t, Sense.LOWER)
        if not sc.ok:
            violations.append(
                _violation(
                    "linear-extensions-lsc", p, t,
                    params={"samples": samples, "seed": seed},
                    detail=f"extension contour of {sc.witness!r} is not closed",
                )
            )
            break
    return _report("linear-extensions-lsc", len(exts), len(exts), violations, started)


def check_chain_restriction(
    p: Preorder, t: Topology, chain: int, x: str
) -> TheoremReport:
    """If all linear extensions are lsc, the trace topology on a chain refines Alexandrov.

    The chain must be totally ordered and ``x`` incomparable to all of it;
    instances are capped at 8 elements because the premise is checked
    against every linear extension.
    """
    started = time.perf_counter()
    if p.n != t.ground_size:
        raise GroundMismatchError(p.n, t.ground_size)
    if p.n > CHAIN_RESTRICTION_CAP:
        raise TooLargeError(CHAIN_RESTRICTION_CAP, p.n)
    if not chain:
        raise PremiseFailedError("chain is empty")
    chain_elems = labels_of(p, chain)
    for a in chain_elems:
        for b in chain_elems:
            if not p.leq(a, b) and not p.leq(b, a):
                raise PremiseFailedError("chain is not totally ordered", (a, b))
    xi = p.index(x)
    if chain >> xi & 1:
        raise PremiseFailedError(f"{x!r} lies inside the chain")
    for c in chain_elems:
        if p.leq(x, c) or p.leq(c, x):
            raise PremiseFailedError(f"{x!r} is comparable to a chain element", (x, c))
    exts = enumerate_linear_extensions(p, _EXHAUSTIVE_LIMIT)
    premise = all(preorder_semicontinuity(e, t, Sense.LOWER).ok for e in exts)
    if not premise:
        return _report("chain-restriction", 1, 0, [], started)
    fin = is_finer(subspace(t, chain), alexandrov_topology(restrict(p, chain)))
    violations = []
    if not fin.ok:
        violations.append(
            _violation(
                "chain-restriction", p, t,
                params={"chain": list(chain_elems), "x": x},
                detail=f"trace open {fin.missing_open:#x} missing on the chain",
            )
        )
    return _report("chain-restriction", 1, 1, violations, started)


def check_topology_coincidence(p: Preorder) -> TheoremReport:
    """Upper within Scott within Alexandrov, and (finite fact) all three equal."""
    started = time.perf_counter()
    tu = upper_topology(p)
    ts = scott_topology(p)
    ta = alexandrov_topology(p)
    violations = []
    if not is_finer(ts, tu).ok:
        violations.append(_violation("topology-coincidence", p, detail="upper not within scott"))
    if not is_finer(ta, ts).ok:
        violations.append(_violation("topology-coincidence", p, detail="scott not within alexandrov"))
    if not (tu.opens == ts.opens == ta.opens):
        violations.append(
            _violation("topology-coincidence", p,
                       detail="generators disagree at finite scale")
        )
    return _report("topology-coincidence", 1, 1, violations, started)


def _relation_pairs(p: Preorder) -> list[list[str]]:
    return [
        [p.elements[i], p.elements[j]]
        for i in range(p.n)
        for j in range(p.n)
        if p.leq_idx(i, j)
    ]


def replay_violation(v: TheoremViolation) -> TheoremReport:
    """Re-run the checker on a serialised violation; must reproduce it."""
    doc = instances.parse_instance(v.instance)
    p = instances.document_preorder(doc)
    t = instances.document_topology(doc, p)
    if v.theorem_id == "topology-coincidence":
        return check_topology_coincidence(p)
    if v.theorem_id == "lsc-iff-upper":
        assert t is not None
        return check_lsc_iff_upper(p, t)
    if v.theorem_id == "scott-necessity":
        assert t is not None
        return check_scott_necessity(p, t)
    if v.theorem_id == "alexandrov-antitone":
        coarse = build_preorder(doc.elements,
                                [tuple(ab) for ab in v.params["coarse_relation"]],
                                autoclose=False)
        return check_alexandrov_antitone(coarse, p)
    if v.theorem_id == "linear-extensions-lsc":
        assert t is not None
        return check_linear_extensions_lsc(p, t, v.params["samples"], v.params["seed"])
    if v.theorem_id == "chain-restriction":
        assert t is not None
        return check_chain_restriction(p, t, mask_of(p, v.params["chain"]), v.params["x"])
    raise ValueError(f"unknown theorem id {v.theorem_id!r}")


# ---------------------------------------------------------------------------
# instance generation


def _set_partitions(items: Sequence[str]) -> Iterator[list[list[str]]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]
        yield [[first]] + part


_PARTIAL_ORDER_CACHE: dict[int, list[tuple[int, ...]]] = {}


def _all_partial_order_rows(k: int) -> list[tuple[int, ...]]:
    """All reflexive-transitive-antisymmetric row tuples on k elements."""
    if k in _PARTIAL_ORDER_CACHE:
        return _PARTIAL_ORDER_CACHE[k]
    pair_slots = [(i, j) for i in range(k) for j in range(i + 1, k)]
    out: list[tuple[int, ...]] = []
    rows = [1 << i for i in range(k)]

    def assign(slot: int) -> None:
        if slot == len(pair_slots):
            ok = True
            for i in range(k):
                for j in range(k):
                    if rows[i] >> j & 1:
                        if rows[j] & ~rows[i]:
                            ok = False
                            break
                if not ok:
                    break
            if ok:
                out.append(tuple(rows))
            return
        i, j = pair_slots[slot]
        assign(slot + 1)  # incomparable
        rows[i] |= 1 << j
        assign(slot + 1)  # i below j
        rows[i] &= ~(1 << j)
        rows[j] |= 1 << i
        assign(slot + 1)  # j below i
        rows[j] &= ~(1 << i)

    assign(0)
    _PARTIAL_ORDER_CACHE[k] = out
    return out


def all_preorders(labels: Sequence[str]) -> Iterator[Preorder]:
    """Every labelled preorder on the given ground set.

    Enumerated as (equivalence partition, partial order on the blocks),
    which is an independent route from filtering raw relation matrices.
    """
    labels = tuple(labels)
    index = {x: i for i, x in enumerate(labels)}
    n = len(labels)
    for blocks in _set_partitions(labels):
        k = len(blocks)
        block_of = {}
        for b, block in enumerate(blocks):
            for x in block:
                block_of[index[x]] = b
        block_masks = [0] * k
        for i in range(n):
            block_masks[block_of[i]] |= 1 << i
        for po_rows in _all_partial_order_rows(k):
            rows = []
            for i in range(n):
                r = 0
                reach = po_rows[block_of[i]]
                while reach:
                    b = (reach & -reach).bit_length() - 1
                    reach &= reach - 1
                    r |= block_masks[b]
                rows.append(r)
            yield Preorder(labels, tuple(rows))


def default_labels(n: int) -> tuple[str, ...]:
    return tuple("abcdefghijklmnopqrstuvwxyz"[:n])


def random_preorder(rng: random.Random, labels: Sequence[str]) -> Preorder:
    """Seeded preorder: random generating pairs, then reflexive-transitive closure."""
    labels = tuple(labels)
    density = rng.choice((0.1, 0.2, 0.3, 0.45))
    pairs = [
        (a, b)
        for a in labels
        for b in labels
        if a != b and rng.random() < density
    ]
    return build_preorder(labels, pairs, autoclose=True)


def random_refinement(rng: random.Random, p: Preorder) -> Preorder:
    """Add a few random comparabilities to ``p`` and close transitively."""
    extra = []
    for _ in range(rng.randint(1, 3)):
        a = rng.randrange(p.n)
        b = rng.randrange(p.n)
        if a != b:
            extra.append((p.elements[a], p.elements[b]))
    pairs = [
        (p.elements[i], p.elements[j])
        for i in range(p.n)
        for j in range(p.n)
        if p.leq_idx(i, j)
    ] + extra
    return build_preorder(p.elements, pairs, autoclose=True)


def find_chain_and_outsider(p: Preorder, rng: random.Random) -> tuple[int, str] | None:
    """A nonempty chain mask plus an element incomparable to all of it."""
    order = list(range(p.n))
    rng.shuffle(order)
    for xi in order:
        candidates = [
            j
            for j in range(p.n)
            if j != xi and not p.leq_idx(xi, j) and not p.leq_idx(j, xi)
        ]
        if not candidates:
            continue
        chain: list[int] = []
        for j in candidates:
            if all(p.leq_idx(j, c) or p.leq_idx(c, j) for c in chain):
                chain.append(j)
        if chain:
            mask = 0
            for j in chain:
                mask |= 1 << j
            return mask, p.elements[xi]
    return None


# ---------------------------------------------------------------------------
# aggregation


@dataclass
class _Tally:
    checked: int = 0
    non_vacuous: int = 0
    violations: list[TheoremViolation] = field(default_factory=list)
    elapsed: float = 0.0

    def add(self, report: TheoremReport) -> None:
        self.checked += report.instances_checked
        self.non_vacuous += report.non_vacuous
        self.violations.extend(report.violations)
        self.elapsed += report.elapsed

    def vacuous(self) -> None:
        self.checked += 1


@dataclass(frozen=True)
class SuiteReport:
    reports: tuple[TheoremReport, ...]

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.reports)

    @property
    def total_violations(self) -> int:
        return sum(len(r.violations) for r in self.reports)


def _finish(tallies: dict[str, _Tally]) -> SuiteReport:
    reports = tuple(
        TheoremReport(tid, tally.checked, tally.non_vacuous,
                      tuple(tally.violations), tally.elapsed)
        for tid, tally in tallies.items()
    )
    return SuiteReport(reports)


def mine(seed: int, trials: int, max_size: int) -> SuiteReport:
    """Seeded random (preorder, topology) instances fed to every checker.

    A pure function of ``(seed, trials, max_size)``: each trial derives its
    own generator, so aggregation is order-insensitive.
    """
    if max_size > MINE_CAP:
        raise TooLargeError(MINE_CAP, max_size, what="mining instance")
    tallies = {tid: _Tally() for tid in THEOREM_IDS}
    for trial in range(trials):
        rng = random.Random(seed * 1_000_003 + trial)
        n = rng.randint(2, max(2, max_size))
        p = random_preorder(rng, default_labels(n))
        base_kind = rng.choice(("indiscrete", "upper", "alexandrov"))
        if base_kind == "indiscrete":
            base = indiscrete(n)
        elif base_kind == "upper":
            base = upper_topology(p)
        else:
            base = alexandrov_topology(p)
        t = random_topology_between(base, rng.randrange(1 << 30), rng.randint(0, 3))

        tallies["topology-coincidence"].add(check_topology_coincidence(p))
        tallies["lsc-iff-upper"].add(check_lsc_iff_upper(p, t))
        tallies["scott-necessity"].add(check_scott_necessity(p, t))
        tallies["alexandrov-antitone"].add(
            check_alexandrov_antitone(p, random_refinement(rng, p))
        )
        try:
            tallies["linear-extensions-lsc"].add(
                check_linear_extensions_lsc(p, t, samples=6, seed=rng.randrange(1 << 30))
            )
        except PremiseFailedError:
            tallies["linear-extensions-lsc"].vacuous()
            above = random_topology_between(
                alexandrov_topology(p), rng.randrange(1 << 30), rng.randint(0, 2)
            )
            tallies["linear-extensions-lsc"].add(
                check_linear_extensions_lsc(p, above, samples=6, seed=rng.randrange(1 << 30))
            )
        found = find_chain_and_outsider(p, rng)
        if found is None:
            tallies["chain-restriction"].vacuous()
        else:
            chain, x = found
            tallies["chain-restriction"].add(check_chain_restriction(p, t, chain, x))
    return _finish(tallies)


def run_theorem_suite(max_size: int = 4, seed: int = 0) -> SuiteReport:
    """Exhaustive suite over all labelled preorders up to ``max_size``.

    Each preorder is paired with a spread of topologies (its own derived
    ones, the two trivial ones, and seeded refinements) and run through
    every checker; chain-restriction instances enumerate every chain plus
    incomparable outsider.
    """
    tallies = {tid: _Tally() for tid in THEOREM_IDS}
    for n in range(1, max_size + 1):
        labels = default_labels(n)
        for pi, p in enumerate(all_preorders(labels)):
            rng = random.Random(seed * 7_777_777 + pi * 101 + n)
            tu = upper_topology(p)
            ta = alexandrov_topology(p)
            sample_ts = [
                indiscrete(n),
                discrete(n),
                tu,
                ta,
                random_topology_between(tu, rng.randrange(1 << 30), 2),
                random_topology_between(indiscrete(n), rng.randrange(1 << 30), 2),
            ]
            tallies["topology-coincidence"].add(check_topology_coincidence(p))
            for t in sample_ts:
                tallies["lsc-iff-upper"].add(check_lsc_iff_upper(p, t))
                tallies["scott-necessity"].add(check_scott_necessity(p, t))
            tallies["alexandrov-antitone"].add(
                check_alexandrov_antitone(p, random_refinement(rng, p))
            )
            for t in (ta, random_topology_between(ta, rng.randrange(1 << 30), 2)):
                tallies["linear-extensions-lsc"].add(
                    check_linear_extensions_lsc(p, t, samples=4, seed=rng.randrange(1 << 30))
                )
            for chain, x in _chain_outsider_pairs(p):
                for t in sample_ts:
                    tallies["chain-restriction"].add(
                        check_chain_restriction(p, t, chain, x)
                    )
    return _finish(tallies)


def _chain_outsider_pairs(p: Preorder) -> Iterator[tuple[int, str]]:
    """Every (nonempty chain mask, incomparable outsider) pair of ``p``."""
    n = p.n
    for chain in range(1, 1 << n):
        elems = []
        m = chain
        while m:
            i = (m & -m).bit_length() - 1
            m &= m - 1
            elems.append(i)
        if any(
            not p.leq_idx(a, b) and not p.leq_idx(b, a)
            for ai, a in enumerate(elems)
            for b in elems[ai + 1 :]
        ):
            continue
        for xi in range(n):
            if chain >> xi & 1:
                continue
            if all(
                not p.leq_idx(xi, c) and not p.leq_idx(c, xi) for c in elems
            ):
                yield chain, p.elements[xi]
