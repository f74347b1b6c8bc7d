"""Deterministic, splittable counter-based random numbers.

Sampled examples must reproduce bit for bit from a seed, across
platforms and process boundaries, and Monte Carlo trials need
independent substreams derived without coordination.  The stdlib
Mersenne Twister is seedable but has no principled stream splitting, so
the scheme is fixed here instead:

* ``mix`` is the SplitMix64 finalizer: ``z ^= z >> 30``,
  ``z *= 0xBF58476D1CE4E5B9``, ``z ^= z >> 27``,
  ``z *= 0x94D049BB133111EB``, ``z ^= z >> 31``, all modulo ``2**64``.
* a stream with key ``K`` produces its ``i``-th word (counting from 1)
  as ``mix(K + i * 0x9E3779B97F4A7C15)``.
* child ``j`` (from 0) of that stream has key
  ``mix(K ^ ((j + 1) * 0xD1B54A32D192ED03))``.

Bounded integers come from rejection sampling on whole 64-bit words, so
there is no modulo bias at any bound.
"""

from __future__ import annotations

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15
_LEAP = 0xD1B54A32D192ED03


def mix(z: int) -> int:
    """The SplitMix64 output permutation of a 64-bit word."""
    z &= _MASK
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & _MASK
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & _MASK
    z ^= z >> 31
    return z


class RandomStream:
    """A keyed counter walked through :func:`mix`.

    Equal seeds give equal word sequences forever; :meth:`split` keys
    off independent children so parallel trials never share a stream.
    """

    def __init__(self, seed: int):
        self._key = seed & _MASK
        self._count = 0

    def next_word(self) -> int:
        """The next unsigned 64-bit word."""
        self._count += 1
        return mix((self._key + self._count * _GOLDEN) & _MASK)

    def randrange(self, n: int) -> int:
        """A uniform integer in ``0..n-1`` by rejection sampling."""
        if n < 1:
            raise ValueError(f"empty range, got n={n}")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            word = self.next_word()
            if word < limit:
                return word % n

    def split(self, j: int) -> "RandomStream":
        """Child stream number ``j``, independent of this one."""
        if j < 0:
            raise ValueError(f"child index must be nonnegative, got {j}")
        return RandomStream(mix((self._key ^ ((j + 1) * _LEAP)) & _MASK))
