"""Good chains for an expander, and the greatest good chain.

A chain ``C`` is good for an expander ``g`` when every proper segment ``S`` of
``C`` satisfies ``S ⊏ g(S) ⊑ C``. For a finite chain the proper segments are
exactly its proper prefixes in ``<=`` order, which is what every check here
enumerates.
"""

from __future__ import annotations

from collections.abc import Callable, Iterator, Mapping
from dataclasses import dataclass, field
from functools import partial

from .errors import InternalLemmaViolation, UsageError
from .poset import (
    MAX_EXHAUSTIVE_N,
    Poset,
    SubsetBits,
    chain_prefixes,
    check_exhaustive,
    is_chain,
    is_prop_segment,
    is_segment,
)
from .selector import Selector, select

Choice = Callable[[SubsetBits], "int | None"]


class Expander:
    """A map from subsets to subsets."""

    def __call__(self, s: SubsetBits) -> SubsetBits:
        raise NotImplementedError


class SelectorExpander(Expander):
    """``g(C) = C ∪ {f(C)}``, and ``g(C) = C`` where ``f`` is undefined."""

    def __init__(self, p: Poset, f: Selector | Choice):
        self.poset = p
        self.selector = f
        self._choose = partial(select, p, f) if isinstance(f, Selector) else f

    def __call__(self, s: SubsetBits) -> SubsetBits:
        x = self._choose(s)
        return s if x is None else s.add(x)


class TableExpander(Expander):
    """Explicit entries, identity everywhere else."""

    def __init__(self, table: Mapping[SubsetBits, SubsetBits]):
        self.table = dict(table)

    def __call__(self, s: SubsetBits) -> SubsetBits:
        return self.table.get(s, s)


def selector_derived(p: Poset, f: Selector | Choice) -> SelectorExpander:
    return SelectorExpander(p, f)


@dataclass(frozen=True)
class GoodChainReport:
    chain: SubsetBits
    trace: list[SubsetBits] = field(default_factory=list)
    method: str = "iterative"


def is_good(p: Poset, g: Expander, c: SubsetBits) -> bool:
    if not is_chain(p, c):
        return False
    for s in chain_prefixes(p, c)[:-1]:
        gs = g(s)
        if not (is_prop_segment(p, s, gs) and is_segment(p, gs, c)):
            return False
    return True


def is_good_weak(p: Poset, g: Expander, c: SubsetBits) -> bool:
    """Goodness without the ``S ⊏ g(S)`` half: only ``g(S) ⊑ C`` is required."""
    if not is_chain(p, c):
        return False
    return all(is_segment(p, g(s), c) for s in chain_prefixes(p, c)[:-1])


def enumerate_chains(p: Poset, limit: int = MAX_EXHAUSTIVE_N) -> Iterator[SubsetBits]:
    """Every chain of ``p`` once, by depth-first extension with increasing indices."""
    check_exhaustive(p, limit)
    n = p.n
    comparable = [p.up_mask(i) | p.down_mask(i) for i in range(n)]

    def extend(start: int, bits: int, allowed: int) -> Iterator[SubsetBits]:
        yield SubsetBits(n, bits)
        for i in range(start, n):
            if allowed >> i & 1:
                yield from extend(i + 1, bits | 1 << i, allowed & comparable[i])

    return extend(0, 0, (1 << n) - 1)


def good_chains(p: Poset, g: Expander, limit: int = MAX_EXHAUSTIVE_N) -> list[SubsetBits]:
    return [c for c in enumerate_chains(p, limit) if is_good(p, g, c)]


def greatest_good_chain_bruteforce(
    p: Poset, g: Expander, limit: int = MAX_EXHAUSTIVE_N
) -> GoodChainReport:
    """Union of all good chains, checked to be good and to extend each of them."""
    family = good_chains(p, g, limit)
    bits = 0
    for c in family:
        bits |= c.bits
    union = SubsetBits(p.n, bits)
    if not is_good(p, g, union):
        raise InternalLemmaViolation(f"union of good chains {union!r} is not good")
    for c in family:
        if not is_segment(p, c, union):
            raise InternalLemmaViolation(f"good chain {c!r} is not a segment of the union {union!r}")
    # good chains are pairwise segment-comparable, so size orders them by ⊑
    trace = sorted(family, key=len)
    return GoodChainReport(union, trace, "bruteforce")


@dataclass(frozen=True)
class Ascent:
    """Outcome of iterating ``C ↦ C ∪ {f(C)}`` from ∅.

    ``stop_value`` is what ``f`` returned at the final chain: None when it was
    undefined, otherwise an element that is not a strict upper bound.
    """

    trace: list[SubsetBits]
    stop_value: int | None

    @property
    def chain(self) -> SubsetBits:
        return self.trace[-1]


def ascend(p: Poset, f: Selector | Choice) -> Ascent:
    choose = partial(select, p, f) if isinstance(f, Selector) else f
    c = SubsetBits(p.n, 0)
    strict_ub = (1 << p.n) - 1
    trace = [c]
    # each accepted step adds a new element, so n + 1 queries always suffice
    for _ in range(p.n + 1):
        x = choose(c)
        if x is not None and not 0 <= x < p.n:
            raise UsageError(f"selector returned {x!r}, not an element of an {p.n}-element poset")
        if x is None or not strict_ub >> x & 1:
            return Ascent(trace, x)
        c = SubsetBits(p.n, c.bits | 1 << x)
        strict_ub &= p.up_mask(x) & ~(1 << x)
        trace.append(c)
    raise InternalLemmaViolation(f"ascent did not stop within {p.n + 1} steps")


def greatest_good_chain_iter(p: Poset, f: Selector | Choice) -> GoodChainReport:
    """Greatest good chain of the selector-derived expander, by direct iteration.

    Runs in ``O(n)`` selector calls, with no enumeration, so it is the route
    for posets too large for :func:`greatest_good_chain_bruteforce`.
    """
    a = ascend(p, f)
    return GoodChainReport(a.chain, a.trace, "iterative")


def comparability_check(
    p: Poset, g: Expander, limit: int = MAX_EXHAUSTIVE_N
) -> tuple[SubsetBits, SubsetBits] | None:
    """First pair of good chains where neither is a segment of the other, if any."""
    family = good_chains(p, g, limit)
    for i, a in enumerate(family):
        for b in family[i + 1 :]:
            if not (is_segment(p, a, b) or is_segment(p, b, a)):
                return a, b
    return None
