"""Bijections between card sequences and other combinatorial structures.

Card sequences starting from the sorted stack correspond to set
partitions (which ball is thrown when), ordered set families and
edge-labeled digraphs (multiplex throws), 0/1 cover matrices and
multigraphs (order-preserving throws), and Dyck paths (fewest-crossing
sequences).  Each correspondence here comes as a pair of maps; the test
suite drives them around in both directions over exhaustive small ranges.

Conventions: patterns and partitions index card positions from 1;
arrangements list balls bottom to top; a "canonical" pattern or family
names its balls 1..k in order of first appearance.
"""

from __future__ import annotations

import dataclasses
import itertools

from jugglecards.cards import (
    Card,
    CardSequence,
    apply_card,
    arrangement_history,
    backward_step,
    backward_step_order_preserving,
    crossings,
    final_arrangement,
    identity_perm,
    increasing_suffix_length,
    inverse,
    is_identity,
    sequence_permutation,
    single_throw,
    single_throws,
    throw_pattern,
    uses_top_throw,
)

Blocks = tuple[tuple[int, ...], ...]
Family = tuple[tuple[int, ...], ...]


# ---------------------------------------------------------------------------
# set partitions from single-throw sequences


def sequence_to_partition(seq: CardSequence) -> Blocks:
    """Group card positions by the ball thrown there.

    Starting from the sorted stack the balls are first thrown in
    increasing order, so block ``i`` (holding the positions where ball
    ``i`` was thrown) automatically has the ``i``-th smallest minimum.
    """
    pattern = single_throws(throw_pattern(seq))
    thrown = sorted(set(pattern))
    assert thrown == list(range(1, len(thrown) + 1)), "balls must appear in order"
    return tuple(
        tuple(j + 1 for j, ball in enumerate(pattern) if ball == i) for i in thrown
    )


def _validate_blocks(blocks: Blocks) -> int:
    if not blocks:
        raise ValueError("partition needs at least one block")
    seen: set[int] = set()
    total = 0
    for block in blocks:
        if not block:
            raise ValueError("empty block in partition")
        if list(block) != sorted(block):
            raise ValueError(f"block {block} is not sorted")
        seen.update(block)
        total += len(block)
    n = max(seen)
    if len(seen) != total or seen != set(range(1, n + 1)):
        raise ValueError("blocks must partition 1..n")
    mins = [block[0] for block in blocks]
    if mins != sorted(mins):
        raise ValueError("blocks must be ordered by their minima")
    return n


def partition_to_sequence(
    blocks: Blocks, target: tuple[int, ...], b: int
) -> CardSequence:
    """The unique single-throw sequence throwing ball ``i`` at ``blocks[i-1]``.

    ``target`` is the required final arrangement over ``b`` balls.  The
    block count ``k`` must satisfy ``b - L <= k <= b`` where ``L`` is the
    increasing-suffix length of the target's level map; outside that
    range no sequence exists and a ValueError is raised.
    """
    n = _validate_blocks(blocks)
    if sorted(target) != list(range(1, b + 1)):
        raise ValueError(f"target must arrange balls 1..{b}, got {target}")
    k = len(blocks)
    sigma = inverse(tuple(target))
    low = b - increasing_suffix_length(sigma)
    if not low <= k <= b:
        raise ValueError(
            f"{k} blocks cannot reach this arrangement; need {max(low, 1)}..{b}"
        )
    ball_at = {}
    for i, block in enumerate(blocks, start=1):
        for j in block:
            ball_at[j] = i
    right = tuple(target)
    cards: list[Card] = []
    for j in range(n, 0, -1):
        right, card = backward_step(right, (ball_at[j],))
        cards.append(card)
    assert right == identity_perm(b), "backward construction must end sorted"
    return CardSequence(b, tuple(reversed(cards)))


def is_noncrossing(blocks: Blocks) -> bool:
    """No two blocks interleave as a < b < c < d with a,c and b,d split.

    Scans 1..n keeping a stack of open blocks; a block touched while not
    on top witnesses a crossing.

    >>> is_noncrossing(((1, 4), (2, 3)))
    True
    >>> is_noncrossing(((1, 3), (2, 4)))
    False
    """
    n = _validate_blocks(blocks)
    owner = {}
    for i, block in enumerate(blocks):
        for j in block:
            owner[j] = i
    stack: list[int] = []
    for x in range(1, n + 1):
        i = owner[x]
        if x == blocks[i][0]:
            stack.append(i)
        elif stack[-1] != i:
            return False
        if x == blocks[i][-1]:
            stack.pop()
    return True


# ---------------------------------------------------------------------------
# ordered families from multiplex sequences


def canonicalize_family(family: Family, k: int | None = None) -> Family:
    """Relabel symbols as 1..k in order of first appearance.

    With ``k`` given, it is an error for some of the ``k`` symbols never
    to occur.

    >>> canonicalize_family(((7, 2), (2, 7), (2, 5)))
    ((1, 2), (2, 1), (2, 3))
    """
    if not family:
        raise ValueError("family needs at least one entry")
    relabel: dict[int, int] = {}
    for entry in family:
        if not entry:
            raise ValueError("empty entry in family")
        if len(set(entry)) != len(entry):
            raise ValueError(f"repeated symbol in entry {entry}")
        for sym in entry:
            if sym not in relabel:
                relabel[sym] = len(relabel) + 1
    if k is not None and len(relabel) != k:
        raise ValueError(f"family uses {len(relabel)} of {k} declared symbols")
    return tuple(tuple(relabel[sym] for sym in entry) for entry in family)


def sequence_to_family(seq: CardSequence) -> Family:
    """Balls thrown by each card, bottom throw first; canonical as-is."""
    family = throw_pattern(seq)
    assert family == canonicalize_family(family), "first throws must be in order"
    return family


def family_to_sequence(family: Family, target: tuple[int, ...], b: int) -> CardSequence:
    """The unique sequence throwing exactly ``family[j-1]`` at card ``j``.

    ``family`` must be canonical; its symbols are the thrown balls.  As
    with partitions, the symbol count is constrained by the increasing
    suffix of the target's level map.
    """
    if family != canonicalize_family(family):
        raise ValueError("family must be canonical (symbols 1..k in first-use order)")
    k = max(max(entry) for entry in family)
    if sorted(target) != list(range(1, b + 1)):
        raise ValueError(f"target must arrange balls 1..{b}, got {target}")
    sigma = inverse(tuple(target))
    low = b - increasing_suffix_length(sigma)
    if not low <= k <= b:
        raise ValueError(
            f"{k} thrown balls cannot reach this arrangement; need {max(low, 1)}..{b}"
        )
    right = tuple(target)
    cards: list[Card] = []
    for entry in reversed(family):
        right, card = backward_step(right, entry)
        cards.append(card)
    assert right == identity_perm(b), "backward construction must end sorted"
    return CardSequence(b, tuple(reversed(cards)))


# ---------------------------------------------------------------------------
# edge-labeled digraphs


@dataclasses.dataclass(frozen=True)
class LabeledDigraph:
    """Loopless multi-digraph on vertices 1..k with arcs in label order."""

    k: int
    arcs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("need at least one vertex")
        if not self.arcs:
            raise ValueError("need at least one arc")
        for tail, head in self.arcs:
            if not (1 <= tail <= self.k and 1 <= head <= self.k):
                raise ValueError(f"arc ({tail},{head}) outside vertices 1..{self.k}")
            if tail == head:
                raise ValueError(f"loop at vertex {tail}")

    @property
    def n(self) -> int:
        return len(self.arcs)


def digraph_to_family(g: LabeledDigraph) -> Family:
    """Read arcs as ordered pairs (tail, head), then canonicalize.

    Every vertex must carry at least one arc end.
    """
    return canonicalize_family(g.arcs, k=g.k)


def family_to_digraph(family: Family) -> LabeledDigraph:
    """Inverse of :func:`digraph_to_family` on canonical pair families."""
    if family != canonicalize_family(family):
        raise ValueError("family must be canonical")
    for entry in family:
        if len(entry) != 2:
            raise ValueError(f"entry {entry} is not a pair")
    k = max(max(entry) for entry in family)
    return LabeledDigraph(k, tuple((t, h) for t, h in family))


# ---------------------------------------------------------------------------
# cover matrices and order-preserving sequences


@dataclasses.dataclass(frozen=True)
class CoverMatrix:
    """0/1 matrix whose column ``j`` marks the balls thrown at time ``j``.

    Rows are virtual balls, columns card positions; every column sums to
    the same ``m`` (each time exactly ``m`` balls go up) and no row is
    all zero (every virtual ball is thrown eventually).
    """

    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if not self.rows:
            raise ValueError("cover needs at least one row")
        n = len(self.rows[0])
        if n < 1:
            raise ValueError("cover needs at least one column")
        for row in self.rows:
            if len(row) != n:
                raise ValueError("ragged cover matrix")
            if any(x not in (0, 1) for x in row):
                raise ValueError("cover entries must be 0 or 1")
            if not any(row):
                raise ValueError("cover has an all-zero row")
        sums = {sum(row[j] for row in self.rows) for j in range(n)}
        if len(sums) != 1:
            raise ValueError(f"column sums differ: {sorted(sums)}")
        (m,) = sums
        if m < 1:
            raise ValueError("columns must each contain at least one 1")

    @property
    def k(self) -> int:
        return len(self.rows)

    @property
    def n(self) -> int:
        return len(self.rows[0])

    @property
    def m(self) -> int:
        return sum(row[0] for row in self.rows)


def cover_partial_order(M: CoverMatrix) -> tuple[tuple[int, ...], ...]:
    """Order the virtual balls from the cover, bottom class first.

    Ball ``u`` sits below ``v`` when the first column separating them
    (containing exactly one of the two) contains ``u``; rows that are
    never separated are equivalent and share a class.  The comparison is
    only a valid total preorder for matrices that really do arise from
    card sequences; contradictions raise with the offending rows named.
    """
    k = M.k

    def relate(u: int, v: int) -> int:
        # -1: u below, 1: v below, 0: equivalent; rows/balls are 1-based
        for j in range(M.n):
            cu, cv = M.rows[u - 1][j], M.rows[v - 1][j]
            if cu != cv:
                return -1 if cu else 1
        return 0

    rel = {}
    for u in range(1, k + 1):
        for v in range(u + 1, k + 1):
            rel[(u, v)] = relate(u, v)

    # group equivalent rows, then insist the grouping is exact
    class_of = list(range(k + 1))

    def find(x):
        while class_of[x] != x:
            class_of[x] = class_of[class_of[x]]
            x = class_of[x]
        return x

    for (u, v), r in rel.items():
        if r == 0:
            class_of[find(u)] = find(v)
    members: dict[int, list[int]] = {}
    for x in range(1, k + 1):
        members.setdefault(find(x), []).append(x)
    classes = [tuple(sorted(ms)) for ms in members.values()]
    for cls in classes:
        for u, v in itertools.combinations(cls, 2):
            if rel[(u, v)] != 0:
                raise ValueError(f"balls {u} and {v} are both ordered and equivalent")

    def below(cls_a, cls_b) -> bool:
        votes = set()
        for u in cls_a:
            for v in cls_b:
                r = rel[(min(u, v), max(u, v))]
                votes.add(r if u < v else -r)
        if len(votes) != 1:
            raise ValueError(
                f"rows {cls_a} and {cls_b} are ordered inconsistently"
            )
        return votes.pop() == -1

    order = sorted(
        classes, key=lambda c: sum(below(c, other) for other in classes if other != c),
        reverse=True,
    )
    # a transitive comparison makes the win counts all distinct; verify
    for i in range(len(order)):
        for j in range(i + 1, len(order)):
            if not below(order[i], order[j]):
                raise ValueError(
                    f"rows {order[i]} and {order[j]} break the order into a cycle"
                )
    return tuple(order)


def cover_canonical_order(M: CoverMatrix) -> tuple[int, ...]:
    """The order's flattening with equivalent balls by row index."""
    return tuple(x for cls in cover_partial_order(M) for x in cls)


def cover_to_sequence(
    M: CoverMatrix,
    terminal: tuple[int, ...],
    initial: tuple[int, ...] | None = None,
) -> tuple[CardSequence, tuple[int, ...]]:
    """Build the unique order-preserving sequence realizing the cover.

    ``terminal`` gives the virtual balls bottom to top after the last
    card.  The starting arrangement is forced: classes follow the cover's
    order and equivalent balls keep the terminal's relative order (they
    are always thrown together, so their order never changes).  It is
    returned alongside the cards.

    Passing ``initial`` asserts the expected start; it is rejected if it
    orders an equivalent pair differently from ``terminal``, or if it
    differs from the forced arrangement.
    """
    k = M.k
    if sorted(terminal) != list(range(1, k + 1)):
        raise ValueError(f"terminal must arrange balls 1..{k}, got {terminal}")
    order = cover_partial_order(M)
    if initial is not None:
        if sorted(initial) != list(range(1, k + 1)):
            raise ValueError(f"initial must arrange balls 1..{k}, got {initial}")
        for cls in order:
            if len(cls) < 2:
                continue
            by_terminal = [x for x in terminal if x in cls]
            by_initial = [x for x in initial if x in cls]
            if by_terminal != by_initial:
                u = next(a for a, c in zip(by_initial, by_terminal) if a != c)
                v = by_terminal[by_initial.index(u)]
                raise ValueError(
                    f"equivalent balls {u} and {v} cannot change relative order"
                )
    right = tuple(terminal)
    cards: list[Card] = []
    for j in range(M.n, 0, -1):
        thrown = {i + 1 for i, row in enumerate(M.rows) if row[j - 1]}
        right, card = backward_step_order_preserving(right, thrown)
        cards.append(card)
    start = right
    expected = tuple(
        x for cls in order for x in sorted(cls, key=terminal.index)
    )
    assert start == expected, "start must follow the cover's order"
    if initial is not None and initial != tuple(start):
        raise ValueError(f"cover forces the start {start}, not {tuple(initial)}")
    return CardSequence(k, tuple(reversed(cards))), start


def sequence_to_cover(seq: CardSequence) -> CoverMatrix:
    """Incidence matrix of balls (rows) against card positions (columns).

    Requires every ball to be thrown at least once and all cards to
    throw the same number of balls.
    """
    pattern = throw_pattern(seq)
    rows = tuple(
        tuple(1 if ball in entry else 0 for entry in pattern)
        for ball in range(1, seq.b + 1)
    )
    return CoverMatrix(rows)


def cover_to_multigraph(M: CoverMatrix) -> tuple[tuple[int, int], ...]:
    """Edges (one per column) of the multigraph behind a 2-cover."""
    if M.m != 2:
        raise ValueError(f"multigraph view needs column sums 2, got {M.m}")
    edges = []
    for j in range(M.n):
        u, v = (i + 1 for i, row in enumerate(M.rows) if row[j])
        edges.append((u, v))
    return tuple(edges)


def multigraph_to_cover(k: int, edges: tuple[tuple[int, int], ...]) -> CoverMatrix:
    """Incidence matrix of a loopless multigraph with labeled edges."""
    if not edges:
        raise ValueError("need at least one edge")
    rows = [[0] * len(edges) for _ in range(k)]
    for j, (u, v) in enumerate(edges):
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not (1 <= u <= k and 1 <= v <= k):
            raise ValueError(f"edge ({u},{v}) outside vertices 1..{k}")
        rows[u - 1][j] = 1
        rows[v - 1][j] = 1
    return CoverMatrix(tuple(tuple(r) for r in rows))


# ---------------------------------------------------------------------------
# fewest-crossing sequences, their recursion, and Dyck paths


def is_minimal(seq: CardSequence) -> bool:
    """Single-throw, fixes the sorted stack, uses ``C_b``, crossings ``b(b-1)``."""
    return (
        all(c.is_single_throw for c in seq.cards)
        and uses_top_throw(seq)
        and is_identity(sequence_permutation(seq))
        and crossings(seq) == seq.b * (seq.b - 1)
    )


def _restrict(seq: CardSequence, span: range, keep: list[int]) -> CardSequence | None:
    """Standalone subsequence seen by the balls in ``keep`` over ``span``.

    ``keep`` is in current bottom-to-top order at the start of the span;
    the card at each position must throw one of the kept balls, whose
    target becomes its rank among kept balls afterwards.
    """
    if not span:
        return None
    history = arrangement_history(seq)
    pattern = single_throws(throw_pattern(seq))
    relabel = {ball: i + 1 for i, ball in enumerate(keep)}
    cards = []
    for pos in span:  # 1-based card positions
        ball = pattern[pos - 1]
        assert ball in relabel, f"card {pos} throws {ball}, outside the split part"
        after = history[pos]
        target = sum(1 for x in after[: after.index(ball) + 1] if x in relabel)
        cards.append(single_throw(len(keep), target))
    return CardSequence(len(keep), tuple(cards))


def split_minimal(seq: CardSequence) -> tuple[CardSequence | None, CardSequence | None]:
    """Cut a fewest-crossing sequence at the second throw of ball 1.

    The first card throws ball 1 to level ``k+1``.  Between its first two
    throws only balls ``2..k+1`` are thrown, forming a fewest-crossing
    sequence ``B`` over ``k`` balls; from the second throw on, only ball
    1 and balls ``k+2..b`` are thrown, forming ``C``.  Either part can be
    empty (returned as None).  :func:`join_minimal` inverts this.
    """
    if not is_minimal(seq):
        raise ValueError("can only split a fewest-crossing sequence")
    pattern = single_throws(throw_pattern(seq))
    k = seq.cards[0].targets[0] - 1
    later = [j for j in range(2, seq.n + 1) if pattern[j - 1] == 1]
    p = later[0] if later else seq.n + 1
    B = _restrict(seq, range(2, p), list(range(2, k + 2)))
    C = _restrict(seq, range(p, seq.n + 1), [1] + list(range(k + 2, seq.b + 1)))
    return B, C


def join_minimal(
    B: CardSequence | None, C: CardSequence | None
) -> CardSequence:
    """Opposite of :func:`split_minimal`.

    Over ``b = k + b_C`` balls (``k`` from ``B``, one ball standing in
    for ``C`` when it is empty), the first card throws ball 1 over all of
    ``B``'s balls; ``B`` runs with each ball's last throw lifted over the
    ``C`` part, which then runs with each ball's last throw except ball
    1's lifted over the ``B`` part.
    """
    for part in (B, C):
        if part is not None and not is_minimal(part):
            raise ValueError("can only join fewest-crossing sequences")
    k = B.b if B else 0
    b = k + (C.b if C else 1)
    cards = [single_throw(b, k + 1)]
    if B is not None:
        pattern = single_throws(throw_pattern(B))
        last = {ball: max(j for j in range(B.n) if pattern[j] == ball)
                for ball in set(pattern)}
        for j, card in enumerate(B.cards):
            lift = b - k if last[pattern[j]] == j else 0
            cards.append(single_throw(b, card.targets[0] + lift))
    if C is not None:
        pattern = single_throws(throw_pattern(C))
        last = {ball: max(j for j in range(C.n) if pattern[j] == ball)
                for ball in set(pattern)}
        for j, card in enumerate(C.cards):
            lift = k if pattern[j] != 1 and last[pattern[j]] == j else 0
            cards.append(single_throw(b, card.targets[0] + lift))
    out = CardSequence(b, tuple(cards))
    assert is_minimal(out), "joined parts must form a fewest-crossing sequence"
    return out


def minimal_to_dyck(seq: CardSequence) -> str:
    """Balanced parentheses for a fewest-crossing sequence.

    Recursively ``(B)C`` for the split parts, with the empty part giving
    the empty string; the single card ``C_1`` maps to ``()``.
    """
    B, C = split_minimal(seq)
    left = minimal_to_dyck(B) if B else ""
    right = minimal_to_dyck(C) if C else ""
    return "(" + left + ")" + right


def dyck_to_minimal(word: str) -> CardSequence | None:
    """Rebuild the fewest-crossing sequence behind balanced parentheses.

    The empty word gives None (the empty sequence); anything unbalanced
    raises.
    """
    if word == "":
        return None
    depth = 0
    for i, ch in enumerate(word):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth == 0:
                inner, rest = word[1:i], word[i + 1:]
                return join_minimal(dyck_to_minimal(inner), dyck_to_minimal(rest))
            if depth < 0:
                break
        else:
            raise ValueError(f"unexpected character {ch!r} in word")
    raise ValueError(f"unbalanced word {word!r}")


def dyck_peaks(word: str) -> int:
    """Number of up-down corners, i.e. ``()`` factors."""
    return word.count("()")


# ---------------------------------------------------------------------------
# throw patterns with one extra crossing pair


def canonical_pattern(pattern: tuple[int, ...]) -> tuple[int, ...]:
    """Relabel a throw pattern so balls appear as 1, 2, ... in first use."""
    relabel: dict[int, int] = {}
    for ball in pattern:
        if ball not in relabel:
            relabel[ball] = len(relabel) + 1
    return tuple(relabel[ball] for ball in pattern)


def sequence_from_pattern(pattern: tuple[int, ...], b: int) -> CardSequence:
    """The unique sequence over ``b`` balls fixing the sorted stack while
    throwing ``pattern[j-1]`` at card ``j``.

    The pattern must be canonical; its distinct balls may number at most
    ``b``.
    """
    if pattern != canonical_pattern(pattern):
        raise ValueError("pattern must be canonical (balls 1..k in first-use order)")
    blocks = tuple(
        tuple(j + 1 for j, x in enumerate(pattern) if x == ball)
        for ball in range(1, len(set(pattern)) + 1)
    )
    return partition_to_sequence(blocks, identity_perm(b), b)


def _pair_crossing_counts(seq: CardSequence) -> dict[tuple[int, int], int]:
    counts: dict[tuple[int, int], int] = {}
    history = arrangement_history(seq)
    for arr, card in zip(history, seq.cards):
        ball = arr[0]
        for other in arr[1: card.targets[0]]:
            key = (min(ball, other), max(ball, other))
            counts[key] = counts.get(key, 0) + 1
    return counts


def decompose_plus_two(
    pattern: tuple[int, ...], b: int
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...], int]:
    """Split a two-extra-crossings pattern into four plain parts.

    Exactly one pair of balls crosses four times; walking its crossing
    positions ``i1 < i2 < i3 < i4`` cuts the pattern into subpatterns
    ``P1 = (i1, i2]``, ``P2 = (i2, i3]``, ``P3 = (i3, i4]`` and ``P0``
    (the rest), each of which relabels to a fewest-crossing pattern.
    Returns ``(P0, P1, P2, P3, i1)``; ``i1`` marks the cut inside ``P0``.
    """
    seq = sequence_from_pattern(pattern, b)
    if not uses_top_throw(seq):
        raise ValueError(f"pattern does not use the full-height throw C_{b}")
    if crossings(seq) != b * (b - 1) + 2:
        raise ValueError(
            f"pattern has {crossings(seq)} crossings, not {b * (b - 1) + 2}"
        )
    counts = _pair_crossing_counts(seq)
    special = [pair for pair, c in counts.items() if c == 4]
    if len(special) != 1 or any(
        c != 2 for pair, c in counts.items() if pair != special[0]
    ):
        raise ValueError("crossings are not two plus a single four-crossing pair")
    a, z = special[0]

    def first(ball, start):
        for j in range(start, len(pattern) + 1):
            if pattern[j - 1] == ball:
                return j
        return len(pattern) + 1

    def last_before(ball, stop):
        return max(j for j in range(1, stop) if pattern[j - 1] == ball)

    i1 = last_before(a, first(z, 1))
    i2 = last_before(z, first(a, i1 + 1))
    i3 = last_before(a, first(z, i2 + 1))
    i4 = last_before(z, first(a, i3 + 1))
    if not i1 < i2 < i3 < i4:
        raise ValueError("four-crossing pair's throws do not alternate")
    p0 = canonical_pattern(pattern[:i1] + pattern[i4:])
    p1 = canonical_pattern(pattern[i1:i2])
    p2 = canonical_pattern(pattern[i2:i3])
    p3 = canonical_pattern(pattern[i3:i4])
    return p0, p1, p2, p3, i1


def compose_plus_two(
    p0: tuple[int, ...],
    p1: tuple[int, ...],
    p2: tuple[int, ...],
    p3: tuple[int, ...],
    i1: int,
) -> tuple[int, ...]:
    """Inverse of :func:`decompose_plus_two`.

    Takes four canonical fewest-crossing patterns and the cut position
    ``1 <= i1 <= len(p0)``.  The ball at ``p0[i1-1]`` is identified with
    the last ball of ``p2``, and the last balls of ``p1`` and ``p3`` with
    each other, producing the four-crossing pair of the result.
    """
    parts = (p0, p1, p2, p3)
    for part in parts:
        if not part:
            raise ValueError("all four patterns must be nonempty")
        if part != canonical_pattern(part):
            raise ValueError(f"pattern {part} is not canonical")
        if not is_minimal(sequence_from_pattern(part, len(set(part)))):
            raise ValueError(f"pattern {part} is not a fewest-crossing pattern")
    if not 1 <= i1 <= len(p0):
        raise ValueError(f"cut position {i1} outside 1..{len(p0)}")
    A, Z = ("a",), ("z",)  # shared-ball markers, distinct from all tags below

    def tagged(idx, part, marked, marker):
        return [marker if x == marked else (idx, x) for x in part]

    w0 = tagged(0, p0, p0[i1 - 1], A)
    w1 = tagged(1, p1, p1[-1], Z)
    w2 = tagged(2, p2, p2[-1], A)
    w3 = tagged(3, p3, p3[-1], Z)
    merged = w0[:i1] + w1 + w2 + w3 + w0[i1:]
    relabel: dict = {}
    for ball in merged:
        if ball not in relabel:
            relabel[ball] = len(relabel) + 1
    return tuple(relabel[ball] for ball in merged)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
