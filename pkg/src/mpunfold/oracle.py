"""Independent checks for the semantics and the unfolding theorem.

naive_mp_successors re-derives most permissive successors straight from the
definition, enumerating Boolean completions and evaluating rule trees
directly.  It deliberately shares no code with the diagram-based
implementation in semantics.py; agreement between the two is evidence, not
tautology.

check_equivalence is the desk-scale theorem check: most permissive
reachability between Boolean states coincides with asynchronous
reachability between their encodings in the fully unfolded network.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product

from . import expr as ex
from .network import BooleanNetwork, build_function
from .semantics import async_successors
from .unfold import UnfoldSpec, encode_state, unfold

MAX_NAIVE_N = 10
MAX_EQUIV_N = 4

_LEVEL_ORDER = {c: k for k, c in enumerate("0id1")}


def _eval(e, bits) -> int:
    # local evaluator on purpose; see module docstring
    if isinstance(e, ex.Var):
        return bits[e.index]
    if isinstance(e, ex.Const):
        return e.value
    if isinstance(e, ex.Not):
        return 1 - _eval(e.operand, bits)
    if isinstance(e, ex.And):
        return _eval(e.left, bits) and _eval(e.right, bits)
    return _eval(e.left, bits) or _eval(e.right, bits)


def naive_mp_successors(net: BooleanNetwork, x: str) -> set[str]:
    """Most permissive successors by brute force over gamma(x)."""
    if net.n > MAX_NAIVE_N:
        raise ValueError(f"naive enumeration is limited to n <= {MAX_NAIVE_N}")
    if len(x) != net.n or any(c not in "0id1" for c in x):
        raise ValueError(f"not a most permissive state of size {net.n}: {x!r}")
    free = [k for k, c in enumerate(x) if c in "id"]
    can: list[set[int]] = [set() for _ in range(net.n)]
    for choice in product((0, 1), repeat=len(free)):
        bits = [int(c) if c in "01" else 0 for c in x]
        for k, b in zip(free, choice):
            bits[k] = b
        for j, rule in enumerate(net.rules):
            can[j].add(_eval(rule, bits))
    out = set()
    for j, c in enumerate(x):
        if c in "0d" and 1 in can[j]:
            out.add(x[:j] + "i" + x[j + 1 :])
        if c in "1i" and 0 in can[j]:
            out.add(x[:j] + "d" + x[j + 1 :])
        if c == "i":
            out.add(x[:j] + "1" + x[j + 1 :])
        if c == "d":
            out.add(x[:j] + "0" + x[j + 1 :])
    return out


# --- random networks ---------------------------------------------------------

@dataclass(frozen=True)
class RandomNetSpec:
    n: int
    max_regulators: int = 3
    depth: int = 3
    seed: int = 0


def _random_expr(rng: random.Random, regulators: list[int], depth: int) -> ex.BooleanExpr:
    if depth == 0:
        leaf = ex.Var(rng.choice(regulators))
        return ex.Not(leaf) if rng.random() < 0.4 else leaf
    kind = rng.choice(("var", "not", "and", "or"))
    if kind == "var":
        return _random_expr(rng, regulators, 0)
    if kind == "not":
        return ex.Not(_random_expr(rng, regulators, depth - 1))
    left = _random_expr(rng, regulators, depth - 1)
    right = _random_expr(rng, regulators, depth - 1)
    return ex.And(left, right) if kind == "and" else ex.Or(left, right)


def random_network(spec: RandomNetSpec) -> BooleanNetwork:
    """Deterministic in the spec: same spec, same network, always."""
    if spec.n < 1:
        raise ValueError("need at least one component")
    if spec.max_regulators < 1 or spec.depth < 0:
        raise ValueError("max_regulators must be >= 1 and depth >= 0")
    names = [f"x{j + 1}" for j in range(spec.n)]
    for attempt in range(64):
        rng = random.Random(
            f"{spec.n}/{spec.max_regulators}/{spec.depth}/{spec.seed}/{attempt}"
        )
        components = []
        for name in names:
            width = rng.randint(1, min(spec.max_regulators, spec.n))
            regulators = sorted(rng.sample(range(spec.n), width))
            components.append((name, _random_expr(rng, regulators, spec.depth)))
        net = BooleanNetwork(components)
        if any(
            not (fr := build_function(net, j)).is_true and not fr.is_false
            for j in range(net.n)
        ):
            return net
    raise RuntimeError("could not draw a network with a non-constant rule")


# --- theorem check ------------------------------------------------------------

@dataclass
class Mismatch:
    source: str
    target: str
    mp_reachable: bool
    unfolded_reachable: bool
    witness: list[str] | None = None


@dataclass
class EquivalenceReport:
    label: str
    mode: str
    pairs_checked: int
    mismatches: list[Mismatch] = field(default_factory=list)
    subsumption_violations: list[tuple[str, str]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches and not self.subsumption_violations

    def as_dict(self) -> dict:
        return {
            "label": self.label,
            "mode": self.mode,
            "pairs_checked": self.pairs_checked,
            "mismatches": [
                {
                    "source": m.source,
                    "target": m.target,
                    "mp_reachable": m.mp_reachable,
                    "unfolded_reachable": m.unfolded_reachable,
                    "witness": m.witness,
                }
                for m in self.mismatches
            ],
            "subsumption_violations": [list(v) for v in self.subsumption_violations],
            "ok": self.ok,
        }


def _bfs(adjacency, start):
    parent = {start: None}
    queue = [start]
    for s in queue:
        for t in adjacency[s]:
            if t not in parent:
                parent[t] = s
                queue.append(t)
    return parent


def _path(parent, target):
    path = [target]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path[::-1]


def check_equivalence(
    net: BooleanNetwork, mode: str = "exact", label: str = ""
) -> EquivalenceReport:
    """Compare Boolean-to-Boolean reachability: most permissive on the input
    network versus asynchronous on its full unfolding, over every ordered
    pair of Boolean states, both directions.  Also checks that plain
    asynchronous reachability is subsumed by most permissive reachability."""
    if net.n > MAX_EQUIV_N:
        raise ValueError(f"exhaustive check is limited to n <= {MAX_EQUIV_N}")
    # most permissive side, via the naive oracle
    mp_states = ["".join(t) for t in product("0id1", repeat=net.n)]
    order = lambda s: tuple(_LEVEL_ORDER[c] for c in s)
    mp_adj = {x: sorted(naive_mp_successors(net, x), key=order) for x in mp_states}
    bool_states = ["".join(t) for t in product("01", repeat=net.n)]
    mp_parents = {x: _bfs(mp_adj, x) for x in bool_states}
    mp_reach = {
        x: {y for y in bool_states if y in mp_parents[x]} for x in bool_states
    }
    # unfolded side, explicit asynchronous graph over all 2^(3n) states
    ext = unfold(net, UnfoldSpec(components=None, mode=mode))
    m = ext.n
    size = 1 << m
    tables = [
        build_function(ext, j).truth_table().to_bytes(size // 8, "little")
        for j in range(m)
    ]
    adjacency: list[list[int]] = []
    for idx in range(size):
        succ = []
        for j in range(m):
            value = tables[j][idx >> 3] >> (idx & 7) & 1
            if value != (idx >> (m - 1 - j) & 1):
                succ.append(idx ^ (1 << (m - 1 - j)))
        adjacency.append(succ)
    enc = {x: int(encode_state(net, x), 2) for x in bool_states}
    unf_parents = {x: _bfs(adjacency, enc[x]) for x in bool_states}
    unf_reach = {
        x: {y for y in bool_states if enc[y] in unf_parents[x]} for x in bool_states
    }
    report = EquivalenceReport(
        label=label or ",".join(net.names), mode=mode, pairs_checked=len(bool_states) ** 2
    )
    for x in bool_states:
        for y in bool_states:
            a, b = y in mp_reach[x], y in unf_reach[x]
            if a == b:
                continue
            if a:
                witness = _path(mp_parents[x], y)
            else:
                width = f"0{m}b"
                witness = [format(i, width) for i in _path(unf_parents[x], enc[y])]
            report.mismatches.append(Mismatch(x, y, a, b, witness))
    # async runs of the input must stay within most permissive reachability
    async_adj = {x: async_successors(net, x) for x in bool_states}
    for x in bool_states:
        for y in _bfs(async_adj, x):
            if y not in mp_reach[x]:
                report.subsumption_violations.append((x, y))
    return report
