"""Deterministic, platform-independent random number generator.

SplitMix64 (Steele, Lea & Flood 2014): a 64-bit counter is advanced by a
fixed odd constant and the counter value is scrambled by two xor-shift
multiplications.  The sequence depends only on the seed, never on the
platform, Python version, or hash randomization, so generated maps
reproduce bit-for-bit everywhere.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

T = TypeVar("T")


def _mix(z: int) -> int:
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9 & _MASK64
    z = (z ^ (z >> 27)) * 0x94D049BB133111EB & _MASK64
    return z ^ (z >> 31)


def _fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for byte in data:
        h = (h ^ byte) * 0x100000001B3 & _MASK64
    return h


class Rng:
    """SplitMix64 stream with sampling helpers.

    One instance is one stream; concurrent tasks must each derive their
    own stream (see ``derive``) rather than share an instance.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        return _mix(self._state)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n) without modulo bias (rejection sampling)."""
        if n <= 0:
            raise ValueError("bound must be positive")
        limit = _MASK64 + 1 - ((_MASK64 + 1) % n)
        while True:
            draw = self.next_u64()
            if draw < limit:
                return draw % n

    def shuffle(self, items: list[T]) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]

    def sample(self, population: Sequence[T], k: int) -> list[T]:
        """k items drawn uniformly without replacement (k capped at len)."""
        pool = list(population)
        k = min(k, len(pool))
        for i in range(k):
            j = i + self.below(len(pool) - i)
            pool[i], pool[j] = pool[j], pool[i]
        return pool[:k]

    def derive(self, label: str) -> "Rng":
        """Independent child stream keyed by a string label.

        The child seed mixes this stream's seed state with an FNV-1a hash
        of the label, so streams for different labels never collide in
        practice and do not consume draws from the parent.
        """
        return Rng(_mix(self._state ^ _fnv1a64(label.encode("utf-8"))))
