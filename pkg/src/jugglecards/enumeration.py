"""Exhaustive enumeration and census of small card sequences.

Everything here is deliberately brute force.  The closed-form counts in
:mod:`jugglecards.counting` and the maps in :mod:`jugglecards.bijections`
are checked against these enumerations over small ranges, so this module
avoids clever shortcuts beyond safe pruning.
"""

from __future__ import annotations

import dataclasses
import itertools
from concurrent.futures import ProcessPoolExecutor

from jugglecards.bijections import CoverMatrix, LabeledDigraph, is_noncrossing
from jugglecards.cards import (
    Card,
    CardSequence,
    card_crossings,
    card_permutation,
    compose,
    cycle_count,
    identity_perm,
    inverse,
)


def throw_cards(b: int, m: int = 1, ordered: bool = True) -> tuple[Card, ...]:
    """Every card throwing ``m`` of ``b`` balls.

    ``ordered`` distinguishes all ``m``-permutations of target levels
    from just the ascending ones (which preserve the thrown balls'
    relative order).
    """
    if ordered:
        picks = itertools.permutations(range(1, b + 1), m)
    else:
        picks = itertools.combinations(range(1, b + 1), m)
    return tuple(Card(b, targets) for targets in picks)


def all_sequences(b, n, cards=None):
    """Iterate over every length-``n`` sequence built from ``cards``."""
    if cards is None:
        cards = throw_cards(b)
    for combo in itertools.product(cards, repeat=n):
        yield CardSequence(b, combo)


@dataclasses.dataclass(frozen=True)
class CensusQuery:
    """Filters for a census over all sequences of ``n`` cards on ``b`` balls.

    ``m`` and ``ordered`` pick the card family.  The remaining fields are
    optional filters: ``perm`` the exact one-line permutation the
    sequence must realize, ``crossings`` / ``max_crossings`` an exact or
    upper crossing count, ``primitive`` whether ``C_1`` is banned (True)
    or required (False), ``uses_top`` likewise for ``C_b``, and
    ``thrown`` the exact number of distinct balls thrown.
    """

    b: int
    n: int
    m: int = 1
    ordered: bool = True
    perm: tuple[int, ...] | None = None
    crossings: int | None = None
    max_crossings: int | None = None
    primitive: bool | None = None
    uses_top: bool | None = None
    thrown: int | None = None


def _census_from(query: CensusQuery, first: int | None, collect: bool):
    cards = throw_cards(query.b, query.m, query.ordered)
    perms = [card_permutation(c) for c in cards]
    deltas = [card_crossings(c) for c in cards]
    is_bottom = [c.targets == (1,) for c in cards]
    is_top = [c.targets == (query.b,) for c in cards]
    budget = query.crossings if query.crossings is not None else query.max_crossings
    target_arr = inverse(query.perm) if query.perm is not None else None
    found: list[CardSequence] = []
    count = 0

    def leaf_ok(arr, cr, top_seen, bottom_seen, thrown):
        if target_arr is not None and arr != target_arr:
            return False
        if query.crossings is not None and cr != query.crossings:
            return False
        if query.uses_top is True and not top_seen:
            return False
        if query.primitive is False and not bottom_seen:
            return False
        if query.thrown is not None and len(thrown) != query.thrown:
            return False
        return True

    def walk(depth, arr, cr, top_seen, bottom_seen, thrown, prefix):
        nonlocal count
        if depth == query.n:
            if leaf_ok(arr, cr, top_seen, bottom_seen, thrown):
                count += 1
                if collect:
                    found.append(CardSequence(query.b, tuple(prefix)))
            return
        if query.thrown is not None:
            left = (query.n - depth) * query.m
            if len(thrown) > query.thrown or len(thrown) + left < query.thrown:
                return
        choices = (first,) if depth == 0 and first is not None else range(len(cards))
        for i in choices:
            if query.primitive is True and is_bottom[i]:
                continue
            if query.uses_top is False and is_top[i]:
                continue
            cr2 = cr + deltas[i]
            if budget is not None and cr2 > budget:
                continue
            prefix.append(cards[i])
            walk(
                depth + 1,
                _apply(arr, perms[i]),
                cr2,
                top_seen or is_top[i],
                bottom_seen or is_bottom[i],
                thrown | set(arr[: query.m]),
                prefix,
            )
            prefix.pop()

    walk(0, identity_perm(query.b), 0, False, False, set(), [])
    return tuple(found) if collect else count


def _apply(arr, perm):
    # send the ball at level l to level perm[l-1]
    out = [0] * len(arr)
    for level, ball in enumerate(arr):
        out[perm[level] - 1] = ball
    return tuple(out)


def _census_worker(args):
    query, first, collect = args
    return _census_from(query, first, collect)


def census(query: CensusQuery, collect: bool = False, jobs: int | None = None):
    """Count (or collect) all sequences matching ``query``.

    ``jobs`` splits the search by first card across processes; results
    are identical to the serial order.
    """
    if jobs is not None and jobs > 1 and query.n > 1:
        firsts = range(len(throw_cards(query.b, query.m, query.ordered)))
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_census_worker, [(query, f, collect) for f in firsts]))
        if collect:
            return tuple(seq for part in parts for seq in part)
        return sum(parts)
    return _census_from(query, None, collect)


def count_by_permutation(
    b: int, n: int, m: int = 1, ordered: bool = True, by_thrown: bool = False
) -> dict:
    """Sequence counts keyed by realized permutation.

    Dynamic program over composed permutations, so it stays cheap for
    ``n`` far beyond exhaustive reach.  With ``by_thrown`` the keys are
    ``(perm, k)`` with ``k`` the number of distinct balls thrown.
    """
    cards = throw_cards(b, m, ordered)
    perms = [card_permutation(c) for c in cards]
    start = (identity_perm(b), frozenset()) if by_thrown else identity_perm(b)
    states = {start: 1}
    for _ in range(n):
        nxt: dict = {}
        for state, ways in states.items():
            perm = state[0] if by_thrown else state
            arr = inverse(perm)
            for cp in perms:
                new_perm = compose(perm, cp)
                if by_thrown:
                    key = (new_perm, state[1] | frozenset(arr[:m]))
                else:
                    key = new_perm
                nxt[key] = nxt.get(key, 0) + ways
        states = nxt
    if by_thrown:
        return {(perm, len(thrown)): ways for (perm, thrown), ways in states.items()}
    return states


def brute_js(sigma: tuple[int, ...], n: int, b: int, m: int = 1) -> int:
    """Exhaustively count sequences realizing the permutation ``sigma``.

    Oracle for the closed-form :func:`jugglecards.counting.js_count`;
    ``m > 1`` searches over ordered ``m``-subset cards.
    """
    return census(CensusQuery(b=b, n=n, m=m, perm=tuple(sigma)))


def enumerate_plus(
    b: int, n: int, d: int, primitive: bool = False
) -> tuple[CardSequence, ...]:
    """All single-throw sequences with ``d`` crossings above the minimum.

    They fix the sorted stack and use the full-height throw; with
    ``primitive`` the do-nothing card ``C_1`` is banned as well.
    """
    if d < 0 or d % 2:
        raise ValueError(f"crossing surplus must be even and nonnegative, got {d}")
    query = CensusQuery(
        b=b,
        n=n,
        perm=identity_perm(b),
        crossings=b * (b - 1) + d,
        uses_top=True,
        primitive=True if primitive else None,
    )
    return census(query, collect=True)


def enumerate_minimal(b: int, n: int) -> tuple[CardSequence, ...]:
    """All single-throw sequences with the fewest crossings ``b(b-1)``.

    They fix the sorted stack, use the full-height throw, and every pair
    of balls crosses exactly twice.
    """
    return enumerate_plus(b, n, 0)


def enumerate_plus_two(b: int, n: int) -> tuple[CardSequence, ...]:
    """Like :func:`enumerate_minimal` but with two extra crossings."""
    return enumerate_plus(b, n, 2)


def cycle_census(b: int, n: int) -> dict[int, int]:
    """How many of the ``b^n`` single-throw sequences have each cycle count.

    Walks the full tree of card choices, composing permutations on the
    way down and tallying the cycle count of the result.
    """
    perms = [card_permutation(c) for c in throw_cards(b)]
    tally: dict[int, int] = {}

    def walk(depth, perm):
        if depth == n:
            l = cycle_count(perm)
            tally[l] = tally.get(l, 0) + 1
            return
        for cp in perms:
            walk(depth + 1, compose(perm, cp))

    walk(0, identity_perm(b))
    return tally


def enumerate_set_partitions(n: int, k: int | None = None):
    """All partitions of 1..n (into ``k`` blocks if given), blocks by minima."""

    def extend(x, blocks):
        if x > n:
            if k is None or len(blocks) == k:
                yield tuple(tuple(block) for block in blocks)
            return
        for block in blocks:
            block.append(x)
            yield from extend(x + 1, blocks)
            block.pop()
        if k is None or len(blocks) < k:
            blocks.append([x])
            yield from extend(x + 1, blocks)
            blocks.pop()

    yield from extend(1, [])


def enumerate_noncrossing_partitions(n: int, k: int | None = None):
    """The partitions from :func:`enumerate_set_partitions` with no crossing."""
    for blocks in enumerate_set_partitions(n, k):
        if is_noncrossing(blocks):
            yield blocks


def enumerate_dyck_words(n: int):
    """All balanced-parenthesis words with ``n`` opening brackets."""
    if n == 0:
        yield ""
        return
    for inner in range(n):
        for left in enumerate_dyck_words(inner):
            for right in enumerate_dyck_words(n - 1 - inner):
                yield "(" + left + ")" + right


def enumerate_2covers(n: int, k: int):
    """Canonical 2-covers of ``n`` columns by ``k`` rows.

    Columns have weight two and no row is zero; one representative (rows
    sorted) per row multiset, since relabeling the virtual balls only
    permutes rows.
    """
    pairs = list(itertools.combinations(range(k), 2))
    for cols in itertools.product(pairs, repeat=n):
        rows = tuple(
            tuple(1 if i in col else 0 for col in cols) for i in range(k)
        )
        if any(not any(row) for row in rows):
            continue
        if rows != tuple(sorted(rows)):
            continue
        yield CoverMatrix(rows)


def enumerate_labeled_digraphs(n: int, k: int):
    """All loopless multi-digraphs with arcs labeled 1..n covering 1..k."""
    arcs = [(t, h) for t in range(1, k + 1) for h in range(1, k + 1) if t != h]
    for combo in itertools.product(arcs, repeat=n):
        used = {v for arc in combo for v in arc}
        if len(used) == k:
            yield LabeledDigraph(k, combo)
