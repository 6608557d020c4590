"""Exception hierarchy shared by every module."""

from __future__ import annotations


class ChainboundError(Exception):
    """Base class for all library errors."""


class UsageError(ChainboundError):
    """A call broke its contract (e.g. subsets bound to different posets)."""


class UnknownLabel(ChainboundError):
    def __init__(self, label: str):
        super().__init__(f"unknown label {label!r}")
        self.label = label


class DuplicateLabel(ChainboundError):
    def __init__(self, label: str):
        super().__init__(f"duplicate label {label!r}")
        self.label = label


class CycleDetected(ChainboundError):
    """The relation is not antisymmetric; ``cycle`` lists labels, first == last."""

    def __init__(self, cycle: list[str]):
        super().__init__("cycle in order relation: " + " <= ".join(cycle))
        self.cycle = cycle


class NotTransitive(ChainboundError):
    def __init__(self, a: str, b: str, c: str):
        super().__init__(f"not transitive: {a} <= {b} <= {c} but not {a} <= {c}")
        self.triple = (a, b, c)


class SizeLimitExceeded(ChainboundError):
    def __init__(self, n: int, limit: int):
        super().__init__(f"exhaustive operation refused: n={n} exceeds limit {limit}")
        self.n = n
        self.limit = limit


class InternalLemmaViolation(ChainboundError):
    """A result contradicts a theorem that guarantees it; always a bug."""


class InvalidSelector(ChainboundError):
    pass


class EmptyPoset(ChainboundError):
    pass


class NotAChain(ChainboundError):
    pass


class PreconditionFailed(ChainboundError):
    pass


class NotInflationary(ChainboundError):
    def __init__(self, x, hx):
        super().__init__(f"h is not inflationary at {x!r}: h(x) = {hx!r} is not >= x")
        self.x = x
        self.hx = hx


class OrderInconsistent(ChainboundError):
    def __init__(self, a, b):
        super().__init__(f"{a!r} and {b!r} are mutually <= but not equal")
        self.pair = (a, b)


class CapExceeded(ChainboundError):
    def __init__(self, cap: int, last):
        super().__init__(f"no fixed point within {cap} applications of h")
        self.cap = cap
        self.last = last


class MalformedInput(ChainboundError):
    pass


class UnknownStrategy(MalformedInput):
    pass
