"""Random walks on the symmetric group driven by card draws.

Drawing cards at random multiplies the running permutation by random
generators.  Everything distributional here is exact rational
arithmetic; floating point never appears, so statements like "the
single-cycle mass is 1/b for every n" are checked as equalities.
Monte Carlo estimates use the reproducible streams from
:mod:`jugglecards.rng`.
"""

from __future__ import annotations

import dataclasses
import itertools
import math
from fractions import Fraction

from jugglecards.cards import (
    CardSequence,
    card_permutation,
    compose,
    cycle_count,
    identity_perm,
)
from jugglecards.counting import stirling1
from jugglecards.enumeration import throw_cards
from jugglecards.rng import RandomStream


@dataclasses.dataclass(frozen=True)
class GeneratorDistribution:
    """Permutation generators with exact positive probabilities."""

    generators: tuple[tuple[int, ...], ...]
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.generators:
            raise ValueError("need at least one generator")
        if len(self.generators) != len(self.probs):
            raise ValueError(
                f"{len(self.generators)} generators but {len(self.probs)} probabilities"
            )
        b = len(self.generators[0])
        for g in self.generators:
            if sorted(g) != list(range(1, b + 1)):
                raise ValueError(f"{g} is not a permutation of 1..{b}")
        for p in self.probs:
            if not isinstance(p, Fraction):
                raise ValueError(f"probabilities must be exact fractions, got {p!r}")
            if p <= 0:
                raise ValueError(f"probabilities must be positive, got {p}")
        if sum(self.probs) != 1:
            raise ValueError(f"probabilities sum to {sum(self.probs)}, not 1")

    @property
    def degree(self) -> int:
        return len(self.generators[0])


def card_distribution(
    b: int, m: int = 1, ordered: bool = True, weights=None
) -> GeneratorDistribution:
    """The walk distribution of drawing one card from a family.

    ``weights`` (defaulting to uniform) are positive rationals in the
    order of :func:`jugglecards.enumeration.throw_cards`.
    """
    cards = throw_cards(b, m, ordered)
    if weights is None:
        weights = [1] * len(cards)
    if len(weights) != len(cards):
        raise ValueError(f"need {len(cards)} weights, got {len(weights)}")
    fracs = [Fraction(w) for w in weights]
    total = sum(fracs)
    if any(f <= 0 for f in fracs):
        raise ValueError("weights must be positive")
    return GeneratorDistribution(
        tuple(card_permutation(c) for c in cards),
        tuple(f / total for f in fracs),
    )


@dataclasses.dataclass(frozen=True)
class GroupDistribution:
    """Exact probabilities over permutations of a common degree."""

    prob: dict

    def __post_init__(self):
        if not self.prob:
            raise ValueError("empty distribution")
        sizes = {len(g) for g in self.prob}
        if len(sizes) != 1:
            raise ValueError(f"mixed permutation sizes {sorted(sizes)}")
        (b,) = sizes
        for g, p in self.prob.items():
            if sorted(g) != list(range(1, b + 1)):
                raise ValueError(f"{g} is not a permutation of 1..{b}")
            if p < 0:
                raise ValueError(f"negative probability {p} at {g}")
        if sum(self.prob.values()) != 1:
            raise ValueError("probabilities must sum to exactly 1")

    @property
    def degree(self) -> int:
        return len(next(iter(self.prob)))


def point_distribution(b: int) -> GroupDistribution:
    """All mass on the identity."""
    return GroupDistribution({identity_perm(b): Fraction(1)})


def uniform_distribution(b: int) -> GroupDistribution:
    """Equal mass on every permutation of ``b`` points."""
    share = Fraction(1, math.factorial(b))
    return GroupDistribution(
        {p: share for p in itertools.permutations(range(1, b + 1))}
    )


def step_distribution(d: GroupDistribution, gd: GeneratorDistribution) -> GroupDistribution:
    """One walk step: right-multiply by a random generator.

    The new element is "current, then generator", matching how appending
    a card extends a sequence.
    """
    if d.degree != gd.degree:
        raise ValueError(f"distribution on {d.degree} points, generators on {gd.degree}")
    nxt: dict = {}
    for current, mass in d.prob.items():
        for g, p in zip(gd.generators, gd.probs):
            new = compose(current, g)
            nxt[new] = nxt.get(new, Fraction(0)) + mass * p
    return GroupDistribution(nxt)


def exact_step_distribution(gd: GeneratorDistribution, n: int) -> GroupDistribution:
    """Distribution of the walk after ``n`` steps from the identity."""
    if n < 0:
        raise ValueError(f"step count must be nonnegative, got {n}")
    dist = point_distribution(gd.degree)
    for _ in range(n):
        dist = step_distribution(dist, gd)
    return dist


def cycle_count_distribution(d: GroupDistribution) -> dict[int, Fraction]:
    """Marginal of :func:`jugglecards.cards.cycle_count` under ``d``."""
    out: dict[int, Fraction] = {}
    for g, p in d.prob.items():
        l = cycle_count(g)
        out[l] = out.get(l, Fraction(0)) + p
    return out


def single_cycle_mass(d: GroupDistribution) -> Fraction:
    """Probability that the walk sits at a full-length cycle."""
    return cycle_count_distribution(d).get(1, Fraction(0))


def cycle_type_limit(b: int) -> dict[int, Fraction]:
    """Limit law of the cycle count: ``l`` cycles with chance c(b,l)/b!.

    This is the cycle-count distribution of a uniform permutation, the
    limit of the card walk as the number of cards grows.
    """
    fact = math.factorial(b)
    return {l: Fraction(stirling1(b, l), fact) for l in range(1, b + 1)}


def total_variation(d1, d2) -> Fraction:
    """Half the L1 distance between two exact distributions.

    Accepts :class:`GroupDistribution` or plain mappings (for marginals
    like cycle counts); missing keys count as zero, but permutation keys
    of different degrees are rejected as different groups.
    """
    p = d1.prob if isinstance(d1, GroupDistribution) else d1
    q = d2.prob if isinstance(d2, GroupDistribution) else d2
    keys = set(p) | set(q)
    sizes = {len(k) for k in keys if isinstance(k, tuple)}
    if len(sizes) > 1:
        raise ValueError(f"distributions live on different groups: sizes {sorted(sizes)}")
    total = sum(abs(Fraction(p.get(k, 0)) - Fraction(q.get(k, 0))) for k in keys)
    return total / 2


def _integer_weights(cards, weights):
    if weights is None:
        weights = [1] * len(cards)
    if len(weights) != len(cards):
        raise ValueError(f"need {len(cards)} weights, got {len(weights)}")
    fracs = [Fraction(w) for w in weights]
    if any(f <= 0 for f in fracs):
        raise ValueError("weights must be positive")
    scale = math.lcm(*(f.denominator for f in fracs))
    return [int(f * scale) for f in fracs]


def _draw_index(stream: RandomStream, cumulative, total) -> int:
    r = stream.randrange(total)
    for i, edge in enumerate(cumulative):
        if r < edge:
            return i
    raise AssertionError("cumulative weights must cover the range")


def sample_sequence(
    b: int,
    n: int,
    m: int = 1,
    ordered: bool = True,
    weights=None,
    seed: int = 0,
) -> CardSequence:
    """Draw ``n`` cards independently, with replacement.

    ``weights`` (defaulting to uniform) follow the order of
    :func:`jugglecards.enumeration.throw_cards`; the draw is exact, by
    integer cumulative sums, so equal seeds reproduce equal sequences.
    """
    cards = throw_cards(b, m, ordered)
    ints = _integer_weights(cards, weights)
    cumulative = list(itertools.accumulate(ints))
    stream = RandomStream(seed)
    picks = [
        cards[_draw_index(stream, cumulative, cumulative[-1])] for _ in range(n)
    ]
    return CardSequence(b, tuple(picks))


def estimate_single_cycle_probability(
    b: int,
    n: int,
    m: int = 1,
    ordered: bool = True,
    weights=None,
    trials: int = 10_000,
    seed: int = 0,
) -> Fraction:
    """Monte Carlo estimate of the chance that ``n`` cards leave one cycle.

    Every trial runs on its own child stream of ``seed``, so estimates
    are reproducible and the first ``t`` trials do not depend on the
    total trial count.
    """
    if trials < 1:
        raise ValueError(f"need at least one trial, got {trials}")
    cards = throw_cards(b, m, ordered)
    perms = [card_permutation(c) for c in cards]
    ints = _integer_weights(cards, weights)
    cumulative = list(itertools.accumulate(ints))
    total = cumulative[-1]
    root = RandomStream(seed)
    hits = 0
    for t in range(trials):
        stream = root.split(t)
        current = identity_perm(b)
        for _ in range(n):
            current = compose(current, perms[_draw_index(stream, cumulative, total)])
        if cycle_count(current) == 1:
            hits += 1
    return Fraction(hits, trials)
