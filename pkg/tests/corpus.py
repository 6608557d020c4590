"""Seeded instance families shared by the property and acceptance suites."""

from __future__ import annotations

import random
from fractions import Fraction

from chainbound import GenConfig, Poset, Selector, Strategy, SubsetBits, random_poset
from chainbound.fixpoint import DataflowInstance
from chainbound.poset import strict_upper_bounds
from chainbound.selector import select

PROBS = (Fraction(1, 10), Fraction(3, 10), Fraction(6, 10))
BASE_SEED = 20240611


def poset_corpus(count: int, max_n: int, base_seed: int = BASE_SEED):
    """``count`` seeded posets cycling through sizes ``0..max_n`` and all edge probabilities."""
    for i in range(count):
        cfg = GenConfig(n=(i // 3) % (max_n + 1), edge_prob=PROBS[i % 3], seed=base_seed + i)
        yield i, random_poset(cfg)


def random_override_selector(p: Poset, rng: random.Random, chains: list[SubsetBits]) -> Selector:
    """Random strategy plus overrides on random chains pointing at arbitrary elements."""
    strategy = rng.choice(list(Strategy))
    overrides = {}
    if p.n:
        for _ in range(rng.randint(0, 4)):
            overrides[rng.choice(chains)] = rng.randrange(p.n)
    return Selector(strategy, rng.getrandbits(64), overrides)


def adversarial_selector(p: Poset, rng: random.Random) -> Selector:
    """Overrides planted along the selector's own ascent, so they actually fire.

    Each planted value is an arbitrary element, and may well not be a strict
    upper bound of the chain it is attached to.
    """
    strategy = rng.choice(list(Strategy))
    seed = rng.getrandbits(64)
    overrides: dict[SubsetBits, int] = {}
    if p.n == 0:
        return Selector(strategy, seed)
    c = SubsetBits(p.n, 0)
    for _ in range(p.n + 1):
        if rng.random() < 0.5:
            overrides[c] = rng.randrange(p.n)
        x = select(p, Selector(strategy, seed, overrides), c)
        if x is None or x not in strict_upper_bounds(p, c):
            break
        c = c.add(x)
    for _ in range(rng.randint(0, 2)):
        overrides.setdefault(SubsetBits(p.n, rng.getrandbits(p.n)), rng.randrange(p.n))
    return Selector(strategy, seed, overrides)


def standard_selectors(p: Poset, i: int, chains: list[SubsetBits]) -> list[Selector]:
    rng = random.Random(BASE_SEED * 7 + i)
    return [
        Selector(Strategy.MIN_STRICT_UB),
        Selector(Strategy.MAX_STRICT_UB),
        Selector(Strategy.SEEDED_RANDOM, seed=i),
    ] + [random_override_selector(p, rng, chains) for _ in range(3)]


def random_table(p: Poset, rng: random.Random, chains: list[SubsetBits]) -> dict[SubsetBits, SubsetBits]:
    """Table expander entries, biased toward one-element extensions so some chains are good."""
    table = {}
    for c in chains:
        roll = rng.random()
        if roll < 0.5 and p.n:
            table[c] = c.add(rng.randrange(p.n))
        elif roll < 0.7:
            table[c] = SubsetBits(p.n, rng.getrandbits(p.n) if p.n else 0)
    return table


def with_bottom(p: Poset) -> Poset:
    """``p`` with a new least element ``bot`` at index 0."""
    n = p.n + 1
    up = [(1 << n) - 1] + [p.up_mask(i) << 1 for i in range(p.n)]
    return Poset(["bot", *p.labels], up)


def cpo_corpus(count: int, max_n: int, base_seed: int = BASE_SEED + 500_000):
    """Posets with a least element (hence finite CPOs) and a random inflationary map."""
    for i in range(count):
        cfg = GenConfig(n=i % max_n, edge_prob=PROBS[i % 3], seed=base_seed + i)
        p = with_bottom(random_poset(cfg))
        rng = random.Random(base_seed + i)
        h = [rng.choice(list(SubsetBits(p.n, p.up_mask(x)))) for x in range(p.n)]
        yield i, p, h


def random_cfg(rng: random.Random, max_nodes: int = 8, max_defs: int = 12) -> DataflowInstance:
    n = rng.randint(1, max_nodes)
    d = rng.randint(0, max_defs)
    defs = tuple(f"d{k}" for k in range(d))
    names = tuple(f"b{k}" for k in range(n))
    preds = tuple(tuple(sorted(rng.sample(range(n), rng.randint(0, min(3, n))))) for _ in range(n))
    gen, kill = [], []
    for _ in range(n):
        g = rng.getrandbits(d) if d else 0
        k = (rng.getrandbits(d) if d else 0) & ~g
        gen.append(g)
        kill.append(k)
    return DataflowInstance(defs, names, preds, tuple(gen), tuple(kill))
