"""Fixed points of inflationary maps by iteration from the bottom element.

For ``h`` with ``x <= h(x)`` the iterates ``⊥, h(⊥), h(h(⊥)), ...`` form a
strictly increasing chain until they stop at a fixed point. On a finite poset
where every chain has a supremum, that chain is the greatest good chain of
``C ↦ C ∪ {f(C)}`` where ``f`` adds the supremum of ``C`` if it is missing
and ``h`` of it otherwise; :func:`bw_chain_equals_ggc` checks exactly this.
"""

from __future__ import annotations

import operator
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field
from typing import Any

from .errors import (
    CapExceeded,
    NotInflationary,
    OrderInconsistent,
    PreconditionFailed,
    UsageError,
)
from .chains import enumerate_chains, greatest_good_chain_bruteforce, selector_derived
from .poset import MAX_EXHAUSTIVE_N, Poset, SubsetBits, sup_of

DEFAULT_CAP = 10**6


@dataclass
class AbstractCpo:
    """Bottom element plus order and equality predicates.

    Nothing here is checked up front: the chain-supremum hypothesis cannot be
    verified abstractly, and inflationarity is checked only on the elements
    the iteration actually visits.
    """

    bottom: Any
    leq: Callable[[Any, Any], bool]
    equal: Callable[[Any, Any], bool] = operator.eq

    def admit(self, h: Callable[[Any], Any]) -> None:
        """Hook for eager validation of ``h`` before iterating."""


class FinitePosetCpo(AbstractCpo):
    """A validated finite poset viewed as a CPO on element indices."""

    def __init__(self, p: Poset, limit: int = MAX_EXHAUSTIVE_N):
        missing = validate_cpo_finite(p, limit)
        if missing:
            raise PreconditionFailed(
                f"{len(missing)} chain(s) lack a supremum, first: {p.names(missing[0])}"
            )
        super().__init__(sup_of(p, p.empty()), p.leq)
        self.poset = p

    def admit(self, h: Callable[[int], int]) -> None:
        for x in range(self.poset.n):
            hx = h(x)
            if not (isinstance(hx, int) and 0 <= hx < self.poset.n):
                raise UsageError(f"h({x}) = {hx!r} is not an element")
            if not self.poset.leq(x, hx):
                raise NotInflationary(x, hx)


@dataclass(frozen=True)
class FixpointReport:
    fixpoint: Any
    iterations: int
    trace: list = field(default_factory=list)


def as_function(h: Callable | Mapping | Sequence) -> Callable:
    """Accept ``h`` as a callable, a mapping, or an index-addressed sequence."""
    if callable(h):
        return h
    return h.__getitem__


def bw_fixpoint(cpo: AbstractCpo, h, cap: int = DEFAULT_CAP) -> FixpointReport:
    """Iterate ``h`` from ``cpo.bottom`` until it stops moving.

    ``cap`` bounds the number of applications of ``h``; reaching the fixed
    point after ``k`` moves takes ``k + 1`` applications.
    """
    if cap < 1:
        raise UsageError("cap must be at least 1")
    h = as_function(h)
    cpo.admit(h)
    x = cpo.bottom
    trace = [x]
    for k in range(cap):
        y = h(x)
        if not cpo.leq(x, y):
            raise NotInflationary(x, y)
        if cpo.equal(x, y):
            return FixpointReport(x, k, trace)
        if cpo.leq(y, x):
            raise OrderInconsistent(x, y)
        trace.append(y)
        x = y
    raise CapExceeded(cap, x)


def validate_cpo_finite(p: Poset, limit: int = MAX_EXHAUSTIVE_N) -> list[SubsetBits]:
    """Chains (∅ included) that have no supremum; empty iff ``p`` is a CPO."""
    return [c for c in enumerate_chains(p, limit) if sup_of(p, c) is None]


def sup_then_h_selector(p: Poset, h) -> Callable[[SubsetBits], int | None]:
    """``f(C) = h(sup C)``, the selector whose failure proves the fixed point exists."""
    h = as_function(h)

    def f(c: SubsetBits) -> int | None:
        s = sup_of(p, c)
        return None if s is None else h(s)

    return f


def iterate_selector(p: Poset, h) -> Callable[[SubsetBits], int | None]:
    """``f(C) = sup C`` when the supremum is missing from ``C``, else ``h(sup C)``.

    This is the bottom-up iteration written as a selector: ∅ picks up the bottom
    element and each later step applies ``h`` to the current top. Its greatest
    good chain is the full iterate chain, bottom included. Under ``h(sup C)``
    alone the bottom is skipped whenever ``h(⊥) != ⊥``.
    """
    h = as_function(h)

    def f(c: SubsetBits) -> int | None:
        s = sup_of(p, c)
        if s is None:
            return None
        return s if s not in c else h(s)

    return f


def bw_chain_equals_ggc(p: Poset, h, limit: int = MAX_EXHAUSTIVE_N) -> bool:
    """Check that the iterates of ``h`` from the bottom form the greatest good chain of
    the expander built from :func:`iterate_selector`."""
    h = as_function(h)
    cpo = FinitePosetCpo(p, limit)
    try:
        cpo.admit(h)
    except (NotInflationary, UsageError) as exc:
        raise PreconditionFailed(str(exc)) from exc
    report = bw_fixpoint(cpo, h, cap=p.n + 1)
    iterates = SubsetBits.of(p.n, report.trace)
    ggc = greatest_good_chain_bruteforce(p, selector_derived(p, iterate_selector(p, h)), limit)
    return ggc.chain == iterates


@dataclass(frozen=True)
class DataflowInstance:
    """A control-flow graph with per-node gen/kill sets over ``defs``.

    ``gen`` and ``kill`` are bit masks over ``defs``; ``preds`` are node indices.
    """

    defs: tuple[str, ...]
    names: tuple[str, ...]
    preds: tuple[tuple[int, ...], ...]
    gen: tuple[int, ...]
    kill: tuple[int, ...]

    def __post_init__(self):
        n = len(self.names)
        if not (len(self.preds) == len(self.gen) == len(self.kill) == n):
            raise UsageError("names, preds, gen and kill must have one entry per node")
        if len(set(self.names)) != n:
            raise UsageError("node names must be distinct")
        if len(set(self.defs)) != len(self.defs):
            raise UsageError("definition names must be distinct")
        full = (1 << len(self.defs)) - 1
        for i in range(n):
            if any(not 0 <= q < n for q in self.preds[i]):
                raise UsageError(f"node {self.names[i]!r} has an invalid predecessor")
            if self.gen[i] & ~full or self.kill[i] & ~full:
                raise UsageError(f"node {self.names[i]!r} references unknown definitions")
            if self.gen[i] & self.kill[i]:
                raise UsageError(f"node {self.names[i]!r} both generates and kills a definition")


def reaching_definitions(inst: DataflowInstance, cap: int = DEFAULT_CAP) -> list[tuple[int, int]]:
    """Least ``(in, out)`` bit masks per node."""
    return list(solve_reaching_definitions(inst, cap).fixpoint)


def solve_reaching_definitions(inst: DataflowInstance, cap: int = DEFAULT_CAP) -> FixpointReport:
    """Reaching definitions as a fixed point on the product of bit-vector lattices.

    The global state is a tuple of ``(in, out)`` pairs ordered pointwise by
    inclusion. One round recomputes every node from the previous state and is
    joined back into it, which makes the step inflationary.
    """
    n = len(inst.names)

    def step(state):
        nxt = []
        for i in range(n):
            old_in, old_out = state[i]
            new_in = 0
            for q in inst.preds[i]:
                new_in |= state[q][1]
            new_out = inst.gen[i] | (new_in & ~inst.kill[i])
            nxt.append((old_in | new_in, old_out | new_out))
        return tuple(nxt)

    def leq(a, b):
        return all(ai & ~bi == 0 and ao & ~bo == 0 for (ai, ao), (bi, bo) in zip(a, b))

    cpo = AbstractCpo(bottom=((0, 0),) * n, leq=leq)
    return bw_fixpoint(cpo, step, cap)
