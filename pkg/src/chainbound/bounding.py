"""Chain bounding made constructive on finite posets.

No selector can name a strict upper bound for every chain. Given any
selector, :func:`falsify_bound_assignment` climbs ``∅, {f(∅)}, ...`` until it
reaches a chain where the selector is undefined or wrong, and returns that
chain as the witness. The same climb under an honest selector produces a chain
with no strict upper bound, whose top element is maximal.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .chains import ascend, is_good, selector_derived
from .errors import EmptyPoset, InternalLemmaViolation, InvalidSelector, NotAChain
from .poset import (
    Poset,
    SubsetBits,
    chain_order,
    chain_prefixes,
    is_chain,
    maximal_elements,
    strict_upper_bounds,
    upper_bounds,
)
from .selector import Selector, Strategy, select


class Verdict(enum.Enum):
    SELECTOR_UNDEFINED = "selector_undefined"
    VALUE_NOT_STRICT_BOUND = "value_not_strict_bound"


@dataclass(frozen=True)
class BoundingWitness:
    chain: SubsetBits
    trace: list[SubsetBits]
    verdict: Verdict
    value: int | None = None  # the offending element for VALUE_NOT_STRICT_BOUND


def falsify_bound_assignment(p: Poset, f: Selector) -> BoundingWitness:
    """Find a chain on which ``f`` fails to name a strict upper bound."""
    a = ascend(p, f)
    if a.stop_value is None:
        return BoundingWitness(a.chain, a.trace, Verdict.SELECTOR_UNDEFINED)
    return BoundingWitness(a.chain, a.trace, Verdict.VALUE_NOT_STRICT_BOUND, a.stop_value)


def unbounded_chain(p: Poset, f: Selector) -> SubsetBits:
    """A chain with no strict upper bound, built by climbing with ``f``.

    ``f`` must be honest: wherever a strict upper bound exists it has to return
    one. Anything else raises :class:`InvalidSelector`.
    """
    a = ascend(p, f)
    c = a.chain
    if a.stop_value is not None:
        raise InvalidSelector(
            f"selector returned {p.labels[a.stop_value]!r} on {p.names(c)}, which is not a strict upper bound"
        )
    if strict_upper_bounds(p, c):
        raise InvalidSelector(f"selector is undefined on {p.names(c)} although strict upper bounds exist")
    return c


def zorn_maximal(p: Poset, f: Selector | None = None) -> tuple[int, SubsetBits]:
    """A maximal element together with the unbounded chain it tops."""
    if p.n == 0:
        raise EmptyPoset("the empty poset has no maximal element")
    c = unbounded_chain(p, f if f is not None else Selector(Strategy.MIN_STRICT_UB))
    u = chain_order(p, c)[-1]
    if not (is_chain(p, c) and u in upper_bounds(p, c) and u in maximal_elements(p)):
        raise InternalLemmaViolation(f"{p.labels[u]!r} topping {p.names(c)} is not maximal")
    return u, c


def selector_for_chain(p: Poset, c: SubsetBits) -> Selector:
    """A selector whose derived expander makes the chain ``c`` good.

    Each proper prefix of ``c`` is sent to the next element of ``c``; the
    selector is undefined everywhere else.
    """
    if not is_chain(p, c):
        raise NotAChain(f"{p.names(c)} is not a chain")
    order = chain_order(p, c)
    prefixes = chain_prefixes(p, c)
    f = Selector(Strategy.NONE, overrides=dict(zip(prefixes, order)))
    if not is_good(p, selector_derived(p, f), c):
        raise InternalLemmaViolation(f"{p.names(c)} is not good for its own selector")
    return f


__all__ = [
    "BoundingWitness",
    "Verdict",
    "falsify_bound_assignment",
    "select",
    "selector_for_chain",
    "unbounded_chain",
    "zorn_maximal",
]
