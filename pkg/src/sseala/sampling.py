"""Deterministic sampling streams.

The generator is splitmix64 (Steele/Lea/Flood mixing constants). A stream is
addressed by (seed, tag): the 64-bit state is seeded with FNV-1a of
"{seed}|{tag}", so distinct tags give independent substreams regardless of
draw order, and the same (seed, tag) reproduces the same sequence on every
platform. Reports name this algorithm as "splitmix64".
"""

from __future__ import annotations

from .scalars import Q

MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15

RNG_NAME = "splitmix64"


def fnv1a64(data: bytes) -> int:
    h = 0xCBF29CE484222325
    for b in data:
        h ^= b
        h = (h * 0x100000001B3) & MASK64
    return h


def _mix(z: int) -> int:
    z ^= z >> 30
    z = (z * 0xBF58476D1CE4E5B9) & MASK64
    z ^= z >> 27
    z = (z * 0x94D049BB133111EB) & MASK64
    z ^= z >> 31
    return z


class Stream:
    """One deterministic substream of draws."""

    __slots__ = ("seed", "tag", "_state")

    def __init__(self, seed: int, tag: str = ""):
        self.seed = seed & MASK64
        self.tag = tag
        self._state = fnv1a64(f"{self.seed}|{tag}".encode())

    def substream(self, sub: str) -> "Stream":
        return Stream(self.seed, f"{self.tag}/{sub}" if self.tag else sub)

    def u64(self) -> int:
        self._state = (self._state + _GAMMA) & MASK64
        return _mix(self._state)

    def int_in(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi] via multiply-shift reduction."""
        assert lo <= hi
        span = hi - lo + 1
        return lo + ((self.u64() * span) >> 64)

    def choice(self, seq):
        assert len(seq) > 0
        return seq[self.int_in(0, len(seq) - 1)]

    def vec(self, n: int, radius: int, nonzero: bool = False) -> tuple[int, ...]:
        while True:
            v = tuple(self.int_in(-radius, radius) for _ in range(n))
            if not nonzero or any(v):
                return v

    def rational(self, max_num: int = 3, max_den: int = 3, nonzero: bool = False):
        while True:
            x = Q(self.int_in(-max_num, max_num), self.int_in(1, max_den))
            if not nonzero or x != 0:
                return x

    def qvec(self, n: int, max_num: int = 3, max_den: int = 3) -> tuple:
        return tuple(self.rational(max_num, max_den) for _ in range(n))
