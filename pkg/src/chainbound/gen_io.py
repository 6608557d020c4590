"""Seeded instance generation, JSON formats and DOT export.

JSON formats (subsets are label lists, sorted on write, order-free on read)::

    poset     {"elements": [str], "closure": "hasse" | "full", "le": [[str, str]]}
    selector  {"strategy": "min-strict-ub" | "max-strict-ub" | "seeded-random" | "none",
               "seed": uint64, "overrides": [{"subset": [str], "value": str}]}
    dataflow  {"defs": [str], "nodes": [{"name": str, "preds": [str],
               "gen": [str], "kill": [str]}]}
    h table   {"h": {str: str}}   (total map over the poset's labels)
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .errors import MalformedInput, UnknownLabel, UnknownStrategy, UsageError
from .fixpoint import DataflowInstance
from .poset import Poset, SubsetBits, iter_bits, poset_from_pairs
from .rng import SplitMix64
from .selector import Selector, Strategy


@dataclass(frozen=True)
class GenConfig:
    n: int
    edge_prob: Fraction
    seed: int

    def __post_init__(self):
        prob = Fraction(self.edge_prob)
        if not 0 <= prob <= 1:
            raise UsageError(f"edge_prob must lie in [0, 1], got {prob}")
        if self.n < 0:
            raise UsageError("n must be nonnegative")
        object.__setattr__(self, "edge_prob", prob)


def random_poset(cfg: GenConfig) -> Poset:
    """Closure of a random forward DAG on ``0..n-1``.

    Pairs ``(i, j)`` with ``i < j`` are visited with ``i`` outer and ``j``
    inner. Each consumes one SplitMix64 draw ``u`` and becomes an edge iff
    ``u < edge_prob * 2**64``.
    """
    rng = SplitMix64(cfg.seed)
    num, den = cfg.edge_prob.numerator, cfg.edge_prob.denominator
    threshold = num << 64
    n = cfg.n
    succ = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.next_u64() * den < threshold:
                succ[i] |= 1 << j
    up = [0] * n
    for i in reversed(range(n)):
        row = 1 << i
        for j in iter_bits(succ[i]):
            row |= up[j]
        up[i] = row
    return Poset([f"e{i}" for i in range(n)], up)


def covers(p: Poset) -> list[tuple[int, int]]:
    """Covering pairs ``(i, j)``: ``i < j`` with nothing strictly between."""
    out = []
    for i in range(p.n):
        above = p.up_mask(i) & ~(1 << i)
        beyond = 0
        for k in iter_bits(above):
            beyond |= p.up_mask(k) & ~(1 << k)
        out.extend((i, j) for j in iter_bits(above & ~beyond))
    return out


# JSON helpers


def _load(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise MalformedInput(f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _field(obj: object, key: str, kind: type, where: str, default=...):
    if not isinstance(obj, dict):
        raise MalformedInput(f"{where}: expected an object")
    if key not in obj:
        if default is ...:
            raise MalformedInput(f"{where}: missing field {key!r}")
        return default
    value = obj[key]
    if not isinstance(value, kind) or (kind is int and isinstance(value, bool)):
        raise MalformedInput(f"{where}.{key}: expected {kind.__name__}")
    return value


def _strings(value: object, where: str) -> list[str]:
    if not isinstance(value, list) or not all(isinstance(v, str) for v in value):
        raise MalformedInput(f"{where}: expected a list of strings")
    return value


def _dump(obj: object) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def parse_poset(text: str) -> Poset:
    doc = _load(text)
    labels = _strings(_field(doc, "elements", list, "poset"), "poset.elements")
    closure = _field(doc, "closure", str, "poset", "hasse")
    if closure not in ("hasse", "full"):
        raise MalformedInput(f"poset.closure: expected 'hasse' or 'full', got {closure!r}")
    pairs = []
    for k, pair in enumerate(_field(doc, "le", list, "poset", [])):
        pair = _strings(pair, f"poset.le[{k}]")
        if len(pair) != 2:
            raise MalformedInput(f"poset.le[{k}]: expected a [low, high] pair")
        pairs.append((pair[0], pair[1]))
    return poset_from_pairs(labels, pairs, closure)


def write_poset(p: Poset) -> str:
    """Serialize with ``"hasse"`` closure, listing only covering pairs."""
    le = [[p.labels[i], p.labels[j]] for i, j in covers(p)]
    return _dump({"elements": list(p.labels), "closure": "hasse", "le": le})


def parse_selector(text: str, p: Poset) -> Selector:
    doc = _load(text)
    name = _field(doc, "strategy", str, "selector")
    try:
        strategy = Strategy(name)
    except ValueError:
        raise UnknownStrategy(f"selector.strategy: unknown strategy {name!r}") from None
    seed = _field(doc, "seed", int, "selector", 0)
    if not 0 <= seed < 1 << 64:
        raise MalformedInput("selector.seed: expected an unsigned 64-bit integer")
    overrides: dict[SubsetBits, int] = {}
    for k, entry in enumerate(_field(doc, "overrides", list, "selector", [])):
        where = f"selector.overrides[{k}]"
        subset = p.subset(_strings(_field(entry, "subset", list, where), f"{where}.subset"))
        value = p.index(_field(entry, "value", str, where))
        if subset in overrides:
            raise MalformedInput(f"{where}: duplicate subset {p.names(subset)}")
        overrides[subset] = value
    return Selector(strategy, seed, overrides)


def write_selector(f: Selector, p: Poset) -> str:
    doc: dict = {"strategy": f.strategy.value}
    if f.strategy is Strategy.SEEDED_RANDOM or f.seed:
        doc["seed"] = f.seed
    entries = []
    for subset, value in f.overrides.items():
        if subset.n != p.n:
            raise UsageError(f"override key {subset!r} is not bound to this poset")
        entries.append({"subset": p.names(subset), "value": p.labels[value]})
    if entries:
        doc["overrides"] = sorted(entries, key=lambda e: (e["subset"], e["value"]))
    return _dump(doc)


def parse_dataflow(text: str) -> DataflowInstance:
    doc = _load(text)
    defs = _strings(_field(doc, "defs", list, "dataflow"), "dataflow.defs")
    if len(set(defs)) != len(defs):
        raise MalformedInput("dataflow.defs: duplicate definition")
    def_index = {d: i for i, d in enumerate(defs)}
    nodes = _field(doc, "nodes", list, "dataflow")
    names = [_field(node, "name", str, f"dataflow.nodes[{k}]") for k, node in enumerate(nodes)]
    if len(set(names)) != len(names):
        raise MalformedInput("dataflow.nodes: duplicate node name")
    node_index = {name: i for i, name in enumerate(names)}

    def lookup(table: dict, key: str) -> int:
        if key not in table:
            raise UnknownLabel(key)
        return table[key]

    preds, gen, kill = [], [], []
    for k, node in enumerate(nodes):
        where = f"dataflow.nodes[{k}]"
        preds.append(
            tuple(lookup(node_index, q) for q in _strings(_field(node, "preds", list, where, []), f"{where}.preds"))
        )
        masks = []
        for key in ("gen", "kill"):
            bits = 0
            for d in _strings(_field(node, key, list, where, []), f"{where}.{key}"):
                bits |= 1 << lookup(def_index, d)
            masks.append(bits)
        if masks[0] & masks[1]:
            raise MalformedInput(f"{where}: gen and kill overlap")
        gen.append(masks[0])
        kill.append(masks[1])
    return DataflowInstance(tuple(defs), tuple(names), tuple(preds), tuple(gen), tuple(kill))


def write_dataflow(inst: DataflowInstance) -> str:
    def defs_of(mask: int) -> list[str]:
        return sorted(inst.defs[i] for i in iter_bits(mask))

    nodes = [
        {
            "name": inst.names[i],
            "preds": [inst.names[q] for q in inst.preds[i]],
            "gen": defs_of(inst.gen[i]),
            "kill": defs_of(inst.kill[i]),
        }
        for i in range(len(inst.names))
    ]
    return _dump({"defs": list(inst.defs), "nodes": nodes})


def parse_h_table(text: str, p: Poset) -> list[int]:
    """A map on the poset's elements, returned as an index-addressed list."""
    doc = _load(text)
    table = _field(doc, "h", dict, "h-table")
    out: list[int | None] = [None] * p.n
    for src, dst in table.items():
        if not isinstance(dst, str):
            raise MalformedInput(f"h-table.h.{src}: expected a label")
        out[p.index(src)] = p.index(dst)
    missing = [p.labels[i] for i, v in enumerate(out) if v is None]
    if missing:
        raise MalformedInput(f"h-table.h: no image for {missing}")
    return out


def write_h_table(h: list[int], p: Poset) -> str:
    return _dump({"h": {p.labels[i]: p.labels[h[i]] for i in range(p.n)}})


def _dot_id(text: str) -> str:
    return json.dumps(text, ensure_ascii=False)


def to_dot(p: Poset) -> str:
    """Hasse diagram as a DOT digraph, edges pointing upward."""
    lines = ["digraph poset {", "  rankdir=BT;"]
    lines += [f"  n{i} [label={_dot_id(lab)}];" for i, lab in enumerate(p.labels)]
    lines += [f"  n{i} -> n{j};" for i, j in covers(p)]
    lines.append("}")
    return "\n".join(lines) + "\n"
