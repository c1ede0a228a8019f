"""Kernel correctness against naive oracles, and backend agreement."""

import random

import pytest

from ordtop import kernels
from ordtop.kernels import pure


def random_relation(rng: random.Random, n: int, closed: bool = True) -> list[int]:
    rows = [1 << i for i in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and rng.random() < 0.3:
                rows[i] |= 1 << j
    return pure.transitive_closure(rows) if closed else rows


def closure_by_matrix_powering(rows: list[int]) -> list[int]:
    """Independent oracle: square the boolean matrix until it stabilises."""
    n = len(rows)
    cur = [rows[i] | (1 << i) for i in range(n)]
    while True:
        nxt = list(cur)
        for i in range(n):
            m = cur[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                nxt[i] |= cur[j]
        if nxt == cur:
            return cur
        cur = nxt


def brute_up_sets(rows: list[int]) -> list[int]:
    n = len(rows)
    out = []
    for mask in range(1 << n):
        ok = True
        for i in range(n):
            for j in range(n):
                if mask >> i & 1 and rows[i] >> j & 1 and not mask >> j & 1:
                    ok = False
        if ok:
            out.append(mask)
    return out


def brute_close_family(members, ground):
    fam = set(members) | {0, ground}
    while True:
        new = set()
        for a in fam:
            for b in fam:
                new.add(a | b)
                new.add(a & b)
        if new <= fam:
            return sorted(fam)
        fam |= new


def brute_max_antichain_size(rows: list[int]) -> int:
    n = len(rows)
    best = 0
    for mask in range(1 << n):
        elems = [i for i in range(n) if mask >> i & 1]
        if all(
            not rows[a] >> b & 1 and not rows[b] >> a & 1
            for ai, a in enumerate(elems)
            for b in elems[ai + 1 :]
        ):
            best = max(best, len(elems))
    return best


def test_transitive_closure_matches_matrix_powering():
    rng = random.Random(7)
    for _ in range(100):
        n = rng.randint(1, 7)
        raw = random_relation(rng, n, closed=False)
        assert kernels.transitive_closure(raw) == closure_by_matrix_powering(raw)


def test_transitivity_violation_detects_and_clears():
    rows = [0b011, 0b110, 0b100]  # a<=b, b<=c but not a<=c
    bad = kernels.transitivity_violation(rows)
    assert bad == (0, 1, 2)
    assert kernels.transitivity_violation(kernels.transitive_closure(rows)) is None


def test_close_family_matches_brute_fixpoint():
    rng = random.Random(11)
    for _ in range(60):
        g_bits = rng.randint(1, 6)
        ground = (1 << g_bits) - 1
        members = [rng.randrange(ground + 1) for _ in range(rng.randint(0, 5))]
        assert kernels.close_family(members, ground) == brute_close_family(members, ground)


def test_up_sets_match_pair_scan():
    rng = random.Random(13)
    for _ in range(60):
        rows = random_relation(rng, rng.randint(1, 6))
        assert kernels.up_sets(rows) == brute_up_sets(rows)


def test_directed_sups_match_singleton_queries():
    from ordtop.preorders import Preorder, directed_sup

    rng = random.Random(17)
    for _ in range(40):
        n = rng.randint(1, 5)
        rows = random_relation(rng, n)
        labels = tuple(f"e{i}" for i in range(n))
        p = Preorder(labels, tuple(rows))
        expected = []
        for mask in range(1, 1 << n):
            verdict = directed_sup(p, mask)
            if verdict.is_directed and verdict.sup_class is not None:
                expected.append((mask, verdict.sup_class))
        assert kernels.directed_sups(rows) == expected


def test_max_antichain_size_matches_subset_scan():
    rng = random.Random(19)
    for _ in range(40):
        rows = random_relation(rng, rng.randint(1, 8))
        mask = kernels.max_antichain(rows)
        assert mask.bit_count() == brute_max_antichain_size(rows)


@pytest.mark.skipif(not kernels.using_native(), reason="native kernels not built")
def test_backends_agree():
    from ordtop.kernels import _native

    rng = random.Random(23)
    for _ in range(80):
        n = rng.randint(1, 7)
        raw = random_relation(rng, n, closed=False)
        rows = pure.transitive_closure(raw)
        assert _native.transitive_closure(raw) == rows
        assert _native.transitivity_violation(raw) == pure.transitivity_violation(raw)
        assert _native.up_sets(rows) == pure.up_sets(rows)
        assert _native.directed_sups(rows) == pure.directed_sups(rows)
        assert _native.scott_opens(rows) == pure.scott_opens(rows)
        assert _native.max_antichain(rows) == pure.max_antichain(rows)
        ground = (1 << n) - 1
        members = [rng.randrange(ground + 1) for _ in range(4)]
        assert _native.close_family(members, ground) == pure.close_family(members, ground)


def test_native_dispatch_respects_word_limit():
    # 70 elements exceed the 64-bit native path; the fallback must kick in
    n = 70
    rows = [(1 << i) for i in range(n)]
    rows[0] |= 1 << 69
    closed = kernels.transitive_closure(rows)
    assert closed[0] >> 69 & 1
