"""Finite posets over labeled elements and the subset predicates built on them.

Elements are the indices ``0..n-1``. The reflexive relation ``<=`` is the
source of truth; it is stored row-wise as Python integers used as bit sets
(``up[i]`` holds every ``j`` with ``i <= j``) so that subset algebra costs a
handful of machine words per operation.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from .errors import (
    CycleDetected,
    DuplicateLabel,
    NotTransitive,
    SizeLimitExceeded,
    UnknownLabel,
    UsageError,
)

#: Hard ceiling for operations that enumerate chains or subsets.
MAX_EXHAUSTIVE_N = 20


def iter_bits(bits: int) -> Iterator[int]:
    """Yield the positions of the set bits of ``bits`` in increasing order."""
    while bits:
        low = bits & -bits
        yield low.bit_length() - 1
        bits ^= low


@dataclass(frozen=True, slots=True)
class SubsetBits:
    """A subset of the elements of an ``n``-element poset."""

    n: int
    bits: int = 0

    def __post_init__(self):
        if self.n < 0 or self.bits < 0 or self.bits >> self.n:
            raise UsageError(f"bits {self.bits:#x} do not fit in {self.n} elements")

    @classmethod
    def of(cls, n: int, elements: Iterable[int] = ()) -> SubsetBits:
        bits = 0
        for i in elements:
            if not 0 <= i < n:
                raise UsageError(f"element {i} out of range for n={n}")
            bits |= 1 << i
        return cls(n, bits)

    @classmethod
    def full(cls, n: int) -> SubsetBits:
        return cls(n, (1 << n) - 1)

    def _same(self, other: SubsetBits) -> None:
        if not isinstance(other, SubsetBits):
            raise UsageError(f"expected SubsetBits, got {type(other).__name__}")
        if other.n != self.n:
            raise UsageError(f"subsets bound to different sizes: {self.n} vs {other.n}")

    def __contains__(self, i: int) -> bool:
        return 0 <= i < self.n and bool(self.bits >> i & 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __bool__(self) -> bool:
        return self.bits != 0

    def __or__(self, other: SubsetBits) -> SubsetBits:
        self._same(other)
        return SubsetBits(self.n, self.bits | other.bits)

    def __and__(self, other: SubsetBits) -> SubsetBits:
        self._same(other)
        return SubsetBits(self.n, self.bits & other.bits)

    def __sub__(self, other: SubsetBits) -> SubsetBits:
        self._same(other)
        return SubsetBits(self.n, self.bits & ~other.bits)

    def issubset(self, other: SubsetBits) -> bool:
        self._same(other)
        return self.bits & ~other.bits == 0

    def add(self, i: int) -> SubsetBits:
        if not 0 <= i < self.n:
            raise UsageError(f"element {i} out of range for n={self.n}")
        return SubsetBits(self.n, self.bits | 1 << i)

    def __repr__(self) -> str:
        return f"SubsetBits({self.n}, {{{', '.join(map(str, self))}}})"


class Poset:
    """Immutable finite partial order.

    Build one with :func:`poset_from_pairs` or :meth:`Poset.from_matrix`; the
    bare constructor trusts its ``up`` rows and is meant for internal use.
    """

    __slots__ = ("labels", "n", "_up", "_down", "_index")

    def __init__(self, labels: Sequence[str], up: Sequence[int]):
        self.labels: tuple[str, ...] = tuple(labels)
        self.n = len(self.labels)
        self._up = tuple(up)
        down = [0] * self.n
        for i, row in enumerate(self._up):
            for j in iter_bits(row):
                down[j] |= 1 << i
        self._down = tuple(down)
        self._index = {lab: i for i, lab in enumerate(self.labels)}

    @classmethod
    def from_matrix(cls, labels: Sequence[str], leq: Sequence[Sequence[bool]]) -> Poset:
        """Validate a full boolean ``<=`` matrix and wrap it."""
        labels = _check_labels(labels)
        n = len(labels)
        if len(leq) != n or any(len(row) != n for row in leq):
            raise UsageError(f"relation matrix must be {n}x{n}")
        pairs = [(labels[i], labels[j]) for i in range(n) for j in range(n) if i != j and leq[i][j]]
        for i in range(n):
            if not leq[i][i]:
                raise UsageError(f"relation is not reflexive at {labels[i]!r}")
        return poset_from_pairs(labels, pairs, "full")

    # relation access

    def leq(self, i: int, j: int) -> bool:
        return bool(self._up[i] >> j & 1)

    def lt(self, i: int, j: int) -> bool:
        return i != j and bool(self._up[i] >> j & 1)

    def up_mask(self, i: int) -> int:
        """Bits of every ``j`` with ``i <= j``."""
        return self._up[i]

    def down_mask(self, j: int) -> int:
        """Bits of every ``i`` with ``i <= j``."""
        return self._down[j]

    def relation(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(tuple(bool(row >> j & 1) for j in range(self.n)) for row in self._up)

    # labels

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabel(label) from None

    def subset(self, labels: Iterable[str] = ()) -> SubsetBits:
        return SubsetBits.of(self.n, (self.index(lab) for lab in labels))

    def empty(self) -> SubsetBits:
        return SubsetBits(self.n, 0)

    def everything(self) -> SubsetBits:
        return SubsetBits.full(self.n)

    def names(self, s: SubsetBits) -> list[str]:
        """Labels of ``s``, sorted lexicographically."""
        return sorted(self.labels[i] for i in s)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self._up == other._up

    def __hash__(self) -> int:
        return hash((self.labels, self._up))

    def __repr__(self) -> str:
        return f"Poset(n={self.n}, labels={list(self.labels)!r})"


def _check_labels(labels: Sequence[str]) -> list[str]:
    seen = set()
    for lab in labels:
        if not isinstance(lab, str):
            raise UsageError(f"labels must be strings, got {lab!r}")
        if lab in seen:
            raise DuplicateLabel(lab)
        seen.add(lab)
    return list(labels)


def _find_cycle(succ: list[list[int]]) -> list[int] | None:
    """Return a directed cycle as a closed vertex list, or None."""
    n = len(succ)
    color = [0] * n  # 0 unseen, 1 on stack, 2 done
    parent = [-1] * n
    for root in range(n):
        if color[root]:
            continue
        color[root] = 1
        stack = [(root, iter(succ[root]))]
        while stack:
            v, it = stack[-1]
            for w in it:
                if color[w] == 1:
                    cycle = [w]
                    u = v
                    while u != w:
                        cycle.append(u)
                        u = parent[u]
                    cycle.append(w)
                    cycle.reverse()
                    return cycle
                if color[w] == 0:
                    color[w] = 1
                    parent[w] = v
                    stack.append((w, iter(succ[w])))
                    break
            else:
                color[v] = 2
                stack.pop()
    return None


def _topo_order(succ: list[list[int]]) -> list[int]:
    indeg = [0] * len(succ)
    for ws in succ:
        for w in ws:
            indeg[w] += 1
    order = [v for v in range(len(succ)) if indeg[v] == 0]
    for v in order:
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                order.append(w)
    return order


def poset_from_pairs(
    labels: Sequence[str],
    pairs: Iterable[tuple[str, str]],
    closure_mode: str = "hasse",
) -> Poset:
    """Build a poset from labeled ``(low, high)`` pairs.

    In ``"hasse"`` mode the pairs are covering edges and the reflexive-transitive
    closure is taken. In ``"full"`` mode they must already be the complete
    strict part of ``<=``; all three axioms are checked and violations raise
    :class:`CycleDetected` or :class:`NotTransitive` with a witness.
    Reflexive pairs ``(a, a)`` are accepted and ignored in both modes.
    """
    if closure_mode not in ("hasse", "full"):
        raise UsageError(f"closure_mode must be 'hasse' or 'full', not {closure_mode!r}")
    labels = _check_labels(labels)
    index = {lab: i for i, lab in enumerate(labels)}
    n = len(labels)
    succ_bits = [0] * n
    for a, b in pairs:
        if a not in index:
            raise UnknownLabel(a)
        if b not in index:
            raise UnknownLabel(b)
        i, j = index[a], index[b]
        if i != j:
            succ_bits[i] |= 1 << j
    succ = [list(iter_bits(m)) for m in succ_bits]

    cycle = _find_cycle(succ)
    if cycle is not None:
        raise CycleDetected([labels[i] for i in cycle])

    if closure_mode == "full":
        up = [succ_bits[i] | 1 << i for i in range(n)]
        for a in range(n):
            for b in iter_bits(up[a]):
                missing = up[b] & ~up[a]
                if missing:
                    c = (missing & -missing).bit_length() - 1
                    raise NotTransitive(labels[a], labels[b], labels[c])
        return Poset(labels, up)

    up = [0] * n
    for v in reversed(_topo_order(succ)):
        row = 1 << v
        for w in succ[v]:
            row |= up[w]
        up[v] = row
    return Poset(labels, up)


def check_axioms(p: Poset) -> None:
    """Re-verify reflexivity, antisymmetry and transitivity from the raw rows."""
    for i in range(p.n):
        if not p.leq(i, i):
            raise UsageError(f"not reflexive at {p.labels[i]!r}")
        for j in iter_bits(p.up_mask(i)):
            if j != i and p.leq(j, i):
                raise CycleDetected([p.labels[i], p.labels[j], p.labels[i]])
            missing = p.up_mask(j) & ~p.up_mask(i)
            if missing:
                k = (missing & -missing).bit_length() - 1
                raise NotTransitive(p.labels[i], p.labels[j], p.labels[k])


def _bound(p: Poset, *subsets: SubsetBits) -> None:
    for s in subsets:
        if not isinstance(s, SubsetBits) or s.n != p.n:
            raise UsageError(f"subset {s!r} is not bound to a poset with n={p.n}")


def is_chain(p: Poset, s: SubsetBits) -> bool:
    _bound(p, s)
    for i in s:
        if s.bits & ~(p.up_mask(i) | p.down_mask(i)):
            return False
    return True


def is_segment(p: Poset, s: SubsetBits, c: SubsetBits) -> bool:
    """``s`` is an initial segment of ``c``: ``s ⊆ c`` and downward closed in ``c``."""
    _bound(p, s, c)
    if s.bits & ~c.bits:
        return False
    outside = c.bits & ~s.bits
    for y in s:
        if p.down_mask(y) & outside:
            return False
    return True


def is_prop_segment(p: Poset, s: SubsetBits, c: SubsetBits) -> bool:
    return s.bits != c.bits and is_segment(p, s, c)


def strict_upper_bounds(p: Poset, c: SubsetBits) -> SubsetBits:
    _bound(p, c)
    acc = (1 << p.n) - 1
    for x in c:
        acc &= p.up_mask(x) & ~(1 << x)
    return SubsetBits(p.n, acc)


def upper_bounds(p: Poset, c: SubsetBits) -> SubsetBits:
    _bound(p, c)
    acc = (1 << p.n) - 1
    for x in c:
        acc &= p.up_mask(x)
    return SubsetBits(p.n, acc)


def maximal_elements(p: Poset) -> SubsetBits:
    return SubsetBits.of(p.n, (x for x in range(p.n) if p.up_mask(x) == 1 << x))


def sup_of(p: Poset, c: SubsetBits) -> int | None:
    """Least upper bound of ``c`` if it exists. ``sup_of(∅)`` is the bottom element."""
    ub = upper_bounds(p, c).bits
    for u in iter_bits(ub):
        if ub & ~p.up_mask(u) == 0:
            return u
    return None


def chain_order(p: Poset, c: SubsetBits) -> list[int]:
    """Elements of the chain ``c`` listed in increasing ``<=`` order.

    Within a chain an element's rank is the number of chain elements below it,
    so this is a plain sort; ``c`` must already be a chain.
    """
    _bound(p, c)
    return sorted(c, key=lambda x: (p.down_mask(x) & c.bits).bit_count())


def chain_prefixes(p: Poset, c: SubsetBits) -> list[SubsetBits]:
    """All prefixes of the chain ``c``, from ∅ up to ``c`` itself."""
    out = [SubsetBits(p.n, 0)]
    bits = 0
    for x in chain_order(p, c):
        bits |= 1 << x
        out.append(SubsetBits(p.n, bits))
    return out


def check_exhaustive(p: Poset, limit: int = MAX_EXHAUSTIVE_N) -> None:
    """Guard for operations that enumerate chains or subsets."""
    if limit > MAX_EXHAUSTIVE_N:
        raise UsageError(f"limit {limit} above the hard cap {MAX_EXHAUSTIVE_N}")
    if p.n > limit:
        raise SizeLimitExceeded(p.n, limit)
