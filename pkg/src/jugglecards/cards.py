"""Juggling cards and card sequences.

A card over ``b`` balls shows the balls stacked bottom to top on the left
edge, reorders them, and hands the new stack to the next card.  A
single-throw card ``C_i`` takes the bottom ball to level ``i`` while the
balls at levels ``2..i`` drop down one.  A multiplex card ``C_{s1,...,sm}``
throws the bottom ``m`` balls to the (distinct) levels ``s1..sm`` and lets
the remaining balls fill the free levels bottom up without changing their
relative order.

Permutations are tuples of length ``b`` holding the values ``1..b``;
``p[x-1]`` is the image of ``x``.  Arrangements are tuples listing the
balls bottom to top.  Both are plain tuples so they hash, compare, and
print without ceremony.
"""

from __future__ import annotations

import dataclasses
import itertools
import re


class MultiplexError(ValueError):
    """Raised by operations that are only defined for single-throw cards."""


# ---------------------------------------------------------------------------
# permutations


def identity_perm(b: int) -> tuple[int, ...]:
    return tuple(range(1, b + 1))


def compose(p: tuple[int, ...], q: tuple[int, ...]) -> tuple[int, ...]:
    """Apply ``p`` first and then ``q``.

    >>> compose((2, 1, 3), (1, 3, 2))
    (3, 1, 2)
    """
    if len(p) != len(q):
        raise ValueError(f"cannot compose permutations of sizes {len(p)} and {len(q)}")
    return tuple(q[x - 1] for x in p)


def inverse(p: tuple[int, ...]) -> tuple[int, ...]:
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x - 1] = i + 1
    return tuple(inv)


def is_identity(p: tuple[int, ...]) -> bool:
    return all(x == i + 1 for i, x in enumerate(p))


def cycles(p: tuple[int, ...]) -> tuple[tuple[int, ...], ...]:
    """Disjoint cycles of ``p``, fixed points included.

    Each cycle starts at its smallest element and cycles are listed in
    order of those starting points.

    >>> cycles((2, 4, 1, 3))
    ((1, 2, 4, 3),)
    """
    seen = [False] * len(p)
    out = []
    for start in range(1, len(p) + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        x = p[start - 1]
        while x != start:
            cyc.append(x)
            seen[x - 1] = True
            x = p[x - 1]
        out.append(tuple(cyc))
    return tuple(out)


def cycle_count(p: tuple[int, ...]) -> int:
    return len(cycles(p))


def cycle_string(p: tuple[int, ...]) -> str:
    """One-line cycle notation with fixed points left out; identity is ``()``.

    >>> cycle_string((2, 4, 1, 3))
    '(1 2 4 3)'
    """
    parts = [c for c in cycles(p) if len(c) > 1]
    if not parts:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in parts)


def inversions(p: tuple[int, ...]) -> int:
    """Number of pairs written out of order by ``p``.

    >>> inversions((3, 1, 2, 4))
    2
    """
    return sum(
        1
        for i, j in itertools.combinations(range(len(p)), 2)
        if p[i] > p[j]
    )


def increasing_suffix_length(p: tuple[int, ...]) -> int:
    """Length of the longest increasing run ending at position ``b``.

    This is the largest ``l`` with ``p(b-l+1) < ... < p(b)``; it controls
    how few distinct balls a card sequence realizing ``p`` can throw.

    >>> increasing_suffix_length((2, 4, 1, 3))
    2
    >>> increasing_suffix_length((1, 2, 3))
    3
    """
    b = len(p)
    l = 1
    while l < b and p[b - l - 1] < p[b - l]:
        l += 1
    return l


# ---------------------------------------------------------------------------
# cards


@dataclasses.dataclass(frozen=True)
class Card:
    """One juggling card over ``b`` balls.

    ``targets`` lists where the bottom ``m`` balls go: the ball entering at
    level ``j`` leaves at level ``targets[j-1]``.
    """

    b: int
    targets: tuple[int, ...]

    def __post_init__(self):
        m = len(self.targets)
        if self.b < 1:
            raise ValueError(f"need at least one ball, got b={self.b}")
        if not 1 <= m <= self.b:
            raise ValueError(f"card throws {m} balls, must be between 1 and {self.b}")
        if len(set(self.targets)) != m:
            raise ValueError(f"target levels must be distinct, got {self.targets}")
        for t in self.targets:
            if not 1 <= t <= self.b:
                raise ValueError(f"target level {t} outside 1..{self.b}")

    @property
    def m(self) -> int:
        return len(self.targets)

    @property
    def is_single_throw(self) -> bool:
        return len(self.targets) == 1

    def __str__(self) -> str:
        return "C" + ",".join(str(t) for t in self.targets)


def single_throw(b: int, i: int) -> Card:
    """The card ``C_i``: bottom ball up to level ``i``."""
    return Card(b, (i,))


_CARD_RE = re.compile(r"^C(\d+(?:,\d+)*)$")


def parse_card(text: str, b: int) -> Card:
    """Parse card names like ``C3`` or ``C2,5``."""
    m = _CARD_RE.match(text.strip())
    if not m:
        raise ValueError(f"cannot parse card {text!r}, expected e.g. C3 or C2,5")
    return Card(b, tuple(int(t) for t in m.group(1).split(",")))


def card_permutation(card: Card) -> tuple[int, ...]:
    """Level map of one card: entry level to exit level.

    >>> card_permutation(single_throw(4, 3))
    (3, 1, 2, 4)
    >>> card_permutation(Card(5, (2, 5)))
    (2, 5, 1, 3, 4)
    """
    thrown = set(card.targets)
    rest = (t for t in range(1, card.b + 1) if t not in thrown)
    return card.targets + tuple(itertools.islice(rest, card.b - card.m))


def card_crossings(card: Card) -> int:
    """Track crossings inside one card, drawn with no wasted crossings."""
    return inversions(card_permutation(card))


# ---------------------------------------------------------------------------
# sequences


@dataclasses.dataclass(frozen=True)
class CardSequence:
    """A nonempty left-to-right row of cards over the same ``b`` balls."""

    b: int
    cards: tuple[Card, ...]

    def __post_init__(self):
        if not self.cards:
            raise ValueError("card sequence must hold at least one card")
        for c in self.cards:
            if c.b != self.b:
                raise ValueError(f"card {c} is over {c.b} balls, sequence over {self.b}")

    @property
    def n(self) -> int:
        return len(self.cards)

    def __str__(self) -> str:
        return " ".join(str(c) for c in self.cards)


def sequence_of(b: int, *throws) -> CardSequence:
    """Build a sequence from target levels; ints give single throws.

    >>> str(sequence_of(4, 3, 3, 2))
    'C3 C3 C2'
    >>> str(sequence_of(5, (2, 5), 1))
    'C2,5 C1'
    """
    cards = tuple(
        Card(b, t if isinstance(t, tuple) else (t,)) for t in throws
    )
    return CardSequence(b, cards)


def parse_sequence(text: str, b: int) -> CardSequence:
    """Parse a whitespace-separated row of card names."""
    names = text.split()
    if not names:
        raise ValueError("empty card sequence")
    return CardSequence(b, tuple(parse_card(t, b) for t in names))


def sequence_permutation(seq: CardSequence) -> tuple[int, ...]:
    """The level map of the whole row, leftmost card applied first."""
    p = identity_perm(seq.b)
    for card in seq.cards:
        p = compose(p, card_permutation(card))
    return p


def apply_card(arrangement: tuple[int, ...], card: Card) -> tuple[int, ...]:
    """Push one arrangement (balls listed bottom to top) through a card."""
    b = card.b
    if len(arrangement) != b:
        raise ValueError("arrangement size does not match card")
    new = [0] * b
    for j, t in enumerate(card.targets):
        new[t - 1] = arrangement[j]
    rest = iter(arrangement[card.m:])
    for lv in range(b):
        if new[lv] == 0:
            new[lv] = next(rest)
    return tuple(new)


def arrangement_history(seq: CardSequence) -> tuple[tuple[int, ...], ...]:
    """Arrangements before the first card and after each card, in order.

    Starts from the sorted stack (ball ``j`` at level ``j``), so the entry
    after the last card is ``final_arrangement(seq)``.
    """
    arr = identity_perm(seq.b)
    out = [arr]
    for card in seq.cards:
        arr = apply_card(arr, card)
        out.append(arr)
    return tuple(out)


def final_arrangement(seq: CardSequence) -> tuple[int, ...]:
    """Ball order, bottom to top, after the last card.

    Equals the inverse of ``sequence_permutation`` read as a tuple: the
    ball at level ``j`` is the one whose start level maps to ``j``.
    """
    return arrangement_history(seq)[-1]


def throw_pattern(seq: CardSequence) -> tuple[tuple[int, ...], ...]:
    """Balls thrown by each card, bottom throw first.

    Every entry of the result is a tuple, of length 1 for single-throw
    cards.
    """
    arr = identity_perm(seq.b)
    out = []
    for card in seq.cards:
        out.append(arr[: card.m])
        arr = apply_card(arr, card)
    return tuple(out)


def single_throws(pattern: tuple[tuple[int, ...], ...]) -> tuple[int, ...]:
    """Flatten a single-throw pattern to one ball per card."""
    for entry in pattern:
        if len(entry) != 1:
            raise MultiplexError(f"throw {entry} is not a single throw")
    return tuple(entry[0] for entry in pattern)


def crossings(seq: CardSequence) -> int:
    """Total track crossings of the row, summed card by card."""
    return sum(card_crossings(c) for c in seq.cards)


def reduced_pattern(pattern: tuple[int, ...]) -> tuple[int, ...]:
    """Collapse runs of equal consecutive throws to a single throw.

    >>> reduced_pattern((1, 1, 1, 2, 2, 2, 1, 3, 3, 3, 3, 2, 2, 4))
    (1, 2, 1, 3, 2, 4)
    """
    return tuple(ball for ball, _ in itertools.groupby(pattern))


def is_primitive(seq: CardSequence) -> bool:
    """True when no card is ``C_1`` (throw the bottom ball back to level 1)."""
    return all(c.targets != (1,) for c in seq.cards)


def uses_top_throw(seq: CardSequence) -> bool:
    """True when some card is ``C_b``."""
    return any(c.targets == (seq.b,) for c in seq.cards)


# ---------------------------------------------------------------------------
# siteswaps

_SITESWAP_SEARCH_CAP_FACTOR = 1  # bail out after b*n hops; a ball must return by then


def siteswap_of(seq: CardSequence) -> tuple[int, ...]:
    """Throw heights obtained by cycling the row.

    ``t_i`` is the number of cards after which the ball thrown by card
    ``i`` is back at the bottom, reading the row cyclically.  Only defined
    for single-throw sequences.

    >>> siteswap_of(sequence_of(3, 3, 3, 3))
    (3, 3, 3)
    """
    for c in seq.cards:
        if not c.is_single_throw:
            raise MultiplexError(f"siteswap is undefined for multiplex card {c}")
    perms = [card_permutation(c) for c in seq.cards]
    n = seq.n
    cap = seq.b * n
    heights = []
    for i in range(n):
        level = 1
        t = 0
        while True:
            level = perms[(i + t) % n][level - 1]
            t += 1
            if level == 1:
                break
            if t > cap:  # cannot happen: orbits of a permutation are finite
                raise RuntimeError(f"ball thrown by card {i + 1} never returned")
        heights.append(t)
    return tuple(heights)


def verify_siteswap(heights: tuple[int, ...]) -> tuple[bool, int | None]:
    """Check the landing rule; return validity and the ball count.

    A height list is juggleable when no two throws land at the same time,
    that is when ``i + t_i`` are pairwise distinct mod ``n``.  The ball
    count of a valid pattern is the average height.
    """
    n = len(heights)
    if n == 0:
        raise ValueError("empty siteswap")
    for t in heights:
        if not isinstance(t, int) or t < 1:
            raise ValueError(f"throw heights must be positive integers, got {t!r}")
    landings = {(i + t) % n for i, t in enumerate(heights)}
    if len(landings) != n:
        return False, None
    total = sum(heights)
    if total % n:  # unreachable once landings are distinct, kept as a guard
        return False, None
    return True, total // n


# ---------------------------------------------------------------------------
# reconstruction, one card at a time

def backward_step(
    right: tuple[int, ...], thrown: tuple[int, ...]
) -> tuple[tuple[int, ...], Card]:
    """Recover the card and left arrangement from its right side.

    ``thrown`` lists the balls the card threw, ordered by the level they
    came from (bottom first).  The card's targets are then forced: the
    ball thrown from level ``j`` sits at its target level in ``right``,
    and the unthrown balls keep their relative order below the thrown
    ones removed.
    """
    b = len(right)
    pos = {ball: lv + 1 for lv, ball in enumerate(right)}
    if len(set(thrown)) != len(thrown):
        raise ValueError(f"thrown balls must be distinct, got {thrown}")
    for ball in thrown:
        if ball not in pos:
            raise ValueError(f"ball {ball} does not appear on the right side")
    targets = tuple(pos[ball] for ball in thrown)
    thrown_set = set(thrown)
    left = tuple(thrown) + tuple(ball for ball in right if ball not in thrown_set)
    return left, Card(b, targets)


def backward_step_order_preserving(
    right: tuple[int, ...], thrown: frozenset[int] | set[int]
) -> tuple[tuple[int, ...], Card]:
    """Like :func:`backward_step` but with an unordered throw set.

    The order is fixed by requiring the card to preserve the relative
    order of the thrown balls, so targets come out sorted.
    """
    pos = {ball: lv + 1 for lv, ball in enumerate(right)}
    for ball in thrown:
        if ball not in pos:
            raise ValueError(f"ball {ball} does not appear on the right side")
    targets = tuple(sorted(pos[ball] for ball in thrown))
    ordered = tuple(right[t - 1] for t in targets)
    left = ordered + tuple(ball for ball in right if ball not in thrown)
    return left, Card(len(right), targets)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
