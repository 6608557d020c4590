"""SplitMix64, the generator behind every seeded draw in this package.

Chosen because it is fully specified by a few lines of 64-bit arithmetic, so
fixtures produced here can be regenerated bit-for-bit in any language.

Stream discipline: a :class:`SplitMix64` seeded with ``s`` has state ``s``; each
call to :meth:`next_u64` adds the golden-ratio increment to the state and
returns :func:`mix64` of the new state.
"""

from __future__ import annotations

MASK64 = (1 << 64) - 1
GOLDEN = 0x9E3779B97F4A7C15


def mix64(z: int) -> int:
    """The SplitMix64 finalizer (a bijection on 64-bit words)."""
    z &= MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return z ^ (z >> 31)


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + GOLDEN) & MASK64
        return mix64(self.state)

    def below(self, bound: int) -> int:
        """Integer in ``[0, bound)`` via the multiply-shift reduction of one draw."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return (self.next_u64() * bound) >> 64


def hash_bits(seed: int, bits: int) -> int:
    """Deterministic 64-bit digest of ``(seed, bits)``.

    ``bits`` is absorbed as little-endian 64-bit words, at least one word.
    """
    h = mix64(seed + GOLDEN)
    while True:
        h = mix64(h ^ (bits & MASK64))
        bits >>= 64
        if not bits:
            return h
