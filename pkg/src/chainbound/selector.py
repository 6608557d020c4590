"""Explicit choice functions: partial maps from subsets to elements.

A :class:`Selector` stands in for the choice function that an infinite
argument would obtain from the axiom of choice. It combines a named strategy
with a finite override table; overrides win and may name any element at all,
including ones that are not strict upper bounds.
"""

from __future__ import annotations

import enum
from collections.abc import Mapping
from dataclasses import dataclass, field

from .errors import UsageError
from .poset import Poset, SubsetBits, iter_bits, strict_upper_bounds
from .rng import hash_bits


class Strategy(enum.Enum):
    MIN_STRICT_UB = "min-strict-ub"
    MAX_STRICT_UB = "max-strict-ub"
    SEEDED_RANDOM = "seeded-random"
    NONE = "none"


@dataclass(frozen=True, eq=True)
class Selector:
    strategy: Strategy = Strategy.MIN_STRICT_UB
    seed: int = 0
    overrides: Mapping[SubsetBits, int] = field(default_factory=dict)

    __hash__ = None  # overrides is a dict

    def __post_init__(self):
        if not isinstance(self.strategy, Strategy):
            object.__setattr__(self, "strategy", Strategy(self.strategy))
        if not 0 <= self.seed < 1 << 64:
            raise UsageError(f"seed must fit in 64 bits: {self.seed}")
        object.__setattr__(self, "overrides", dict(self.overrides))

    def __call__(self, p: Poset, c: SubsetBits) -> int | None:
        return select(p, self, c)


def select(p: Poset, f: Selector, c: SubsetBits) -> int | None:
    """Value of ``f`` at ``c``: the override if present, else the strategy's pick."""
    if c.n != p.n:
        raise UsageError(f"subset bound to n={c.n}, poset has n={p.n}")
    hit = f.overrides.get(c)
    if hit is not None:
        return hit
    if f.strategy is Strategy.NONE:
        return None
    ub = strict_upper_bounds(p, c).bits
    if not ub:
        return None
    if f.strategy is Strategy.MIN_STRICT_UB:
        return (ub & -ub).bit_length() - 1
    if f.strategy is Strategy.MAX_STRICT_UB:
        return ub.bit_length() - 1
    candidates = list(iter_bits(ub))
    return candidates[(hash_bits(f.seed, c.bits) * len(candidates)) >> 64]
