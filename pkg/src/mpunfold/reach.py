"""State transition graphs, reachability, attractors.

All exploration is breadth-first in a deterministic order (successor lists
are already deterministic), so node lists, edge lists and DOT output are
byte-stable across runs.  Every explorer takes a cap on the number of
states; hitting the cap is reported, never silently truncated into a wrong
answer.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import NamedTuple

from .network import BooleanNetwork, RegGraph, build_function, check_bool_state
from .semantics import (
    async_successors,
    check_mp_state,
    general_successors,
    is_boolean_state,
    mp_successors,
    sync_successor,
)

DEFAULT_CAP = 10**6

SEMANTICS = ("sync", "async", "general", "mp")


class CapExceeded(RuntimeError):
    """State count passed the cap before the analysis could finish."""


class Edge(NamedTuple):
    source: str
    target: str
    tag: str | None = None


@dataclass
class Stg:
    nodes: list[str]
    edges: list[Edge]
    semantics: str
    roots: tuple[str, ...]
    cap: int
    cap_exceeded: bool = False


@dataclass
class ReachResult:
    verdict: str  # "reachable" | "unreachable" | "cap-exceeded"
    states_explored: int
    witness: list[str] | None = None


@dataclass
class Attractor:
    states: tuple[str, ...]
    kind: str  # "stable-state" | "complex"


def _successor_fn(net: BooleanNetwork, semantics: str):
    if semantics == "sync":
        return lambda s: [sync_successor(net, s)]
    if semantics == "async":
        return lambda s: async_successors(net, s)
    if semantics == "general":
        return lambda s: general_successors(net, s)
    if semantics == "mp":
        return lambda s: mp_successors(net, s)
    raise ValueError(f"semantics must be one of {SEMANTICS}, got {semantics!r}")


def _check_state(net: BooleanNetwork, semantics: str, s: str) -> str:
    if semantics == "mp":
        return check_mp_state(net, s)
    return check_bool_state(net, s)


def _check_cap(cap: int) -> int:
    if not isinstance(cap, int) or cap < 1:
        raise ValueError(f"cap must be a positive integer, got {cap!r}")
    return cap


def fixed_points(net: BooleanNetwork) -> list[str]:
    """All states with f(s) = s, by symbolic conjunction of f_j <-> x_j,
    in lexicographic order."""
    m = net.manager
    node = 1
    for j in range(net.n):
        node = m.conj(node, m.equiv(build_function(net, j).node, m.var_node(j)))
    return ["".join(str(b) for b in model) for model in m.iter_models(node)]


def reachable_set(
    net: BooleanNetwork, semantics: str, start: str, cap: int = DEFAULT_CAP
) -> Stg:
    """Forward closure from one state as an explicit graph."""
    _check_cap(cap)
    _check_state(net, semantics, start)
    succ = _successor_fn(net, semantics)
    nodes = [start]
    seen = {start}
    edges: list[Edge] = []
    queue = deque([start])
    exceeded = False
    while queue and not exceeded:
        s = queue.popleft()
        for t in succ(s):
            if t not in seen:
                if len(nodes) >= cap:
                    exceeded = True
                    break
                seen.add(t)
                nodes.append(t)
                queue.append(t)
            edges.append(Edge(s, t))
    return Stg(
        nodes=nodes,
        edges=edges,
        semantics=semantics,
        roots=(start,),
        cap=cap,
        cap_exceeded=exceeded,
    )


def _check_pattern(net: BooleanNetwork, semantics: str, pattern: str) -> str:
    alphabet = "01id*" if semantics == "mp" else "01*"
    if (
        not isinstance(pattern, str)
        or len(pattern) != net.n
        or any(c not in alphabet for c in pattern)
    ):
        raise ValueError(
            f"expected a target pattern of length {net.n} over {alphabet}, "
            f"got {pattern!r}"
        )
    return pattern


def _matches(state: str, pattern: str) -> bool:
    return all(p == "*" or p == c for c, p in zip(state, pattern))


def reaches(
    net: BooleanNetwork,
    semantics: str,
    start: str,
    target: str,
    cap: int = DEFAULT_CAP,
) -> ReachResult:
    """Can any state matching target (with * wildcards) be reached from
    start?  The witness is a shortest path found by the BFS."""
    _check_cap(cap)
    _check_state(net, semantics, start)
    _check_pattern(net, semantics, target)
    succ = _successor_fn(net, semantics)
    parent: dict[str, str | None] = {start: None}
    queue = deque([start])
    exceeded = False

    def path_to(s):
        path = [s]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])
        return path[::-1]

    if _matches(start, target):
        return ReachResult("reachable", 1, [start])
    while queue and not exceeded:
        s = queue.popleft()
        for t in succ(s):
            if t in parent:
                continue
            if len(parent) >= cap:
                exceeded = True
                break
            parent[t] = s
            if _matches(t, target):
                return ReachResult("reachable", len(parent), path_to(t))
            queue.append(t)
    if exceeded:
        return ReachResult("cap-exceeded", len(parent), None)
    return ReachResult("unreachable", len(parent), None)


def _tarjan_terminal_sccs(nodes: list[str], succ_of: dict[str, list[str]]):
    """Iterative Tarjan; yields the strongly connected components that no
    edge leaves, in discovery order."""
    index_of: dict[str, int] = {}
    lowlink: dict[str, int] = {}
    on_stack: set[str] = set()
    stack: list[str] = []
    counter = 0
    sccs = []
    for root in nodes:
        if root in index_of:
            continue
        work = [(root, iter(succ_of[root]))]
        index_of[root] = lowlink[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index_of:
                    index_of[w] = lowlink[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(succ_of[w])))
                    advanced = True
                    break
                if w in on_stack:
                    lowlink[v] = min(lowlink[v], index_of[w])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                lowlink[parent] = min(lowlink[parent], lowlink[v])
            if lowlink[v] == index_of[v]:
                component = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.append(w)
                    if w == v:
                        break
                sccs.append(component)
    for component in sccs:
        members = set(component)
        if all(t in members for v in component for t in succ_of[v]):
            yield component


def attractors(
    net: BooleanNetwork,
    semantics: str,
    cap: int = DEFAULT_CAP,
    roots: list[str] | None = None,
) -> list[Attractor]:
    """Terminal strongly connected components of the explicit graph.

    Without roots the whole state space is enumerated (needs 2^n <= cap);
    with roots, the forward closure of the root set.  Most permissive
    semantics is excluded: its transient levels make terminal SCCs the
    wrong notion there."""
    _check_cap(cap)
    if semantics not in ("sync", "async", "general"):
        raise ValueError(
            "attractors are computed for sync, async or general semantics"
        )
    succ = _successor_fn(net, semantics)
    if roots is None:
        if (1 << net.n) > cap:
            raise CapExceeded(
                f"full state space has {1 << net.n} states, cap is {cap}; "
                f"supply roots to restrict the search"
            )
        nodes = ["".join(bits) for bits in product("01", repeat=net.n)]
    else:
        seen: set[str] = set()
        nodes = []
        queue = deque()
        for r in roots:
            _check_state(net, semantics, r)
            if r not in seen:
                seen.add(r)
                nodes.append(r)
                queue.append(r)
        while queue:
            s = queue.popleft()
            for t in succ(s):
                if t not in seen:
                    if len(nodes) >= cap:
                        raise CapExceeded(
                            f"closure of the root set passed the cap of {cap} states"
                        )
                    seen.add(t)
                    nodes.append(t)
                    queue.append(t)
    succ_of = {s: succ(s) for s in nodes}
    out = []
    for component in _tarjan_terminal_sccs(nodes, succ_of):
        states = tuple(sorted(component))
        kind = "stable-state" if len(states) == 1 else "complex"
        out.append(Attractor(states=states, kind=kind))
    out.sort(key=lambda a: (a.kind != "stable-state", a.states[0]))
    return out


def mp_boolean_projection(
    net: BooleanNetwork, start: str, cap: int = DEFAULT_CAP
) -> Stg:
    """Boolean-to-Boolean view of the most permissive dynamics from start.

    Nodes are the Boolean states reachable under mp; there is an edge x -> y
    when some mp path goes from x to y through non-Boolean states only.
    Edges also realizable in one generalized asynchronous step are tagged
    solid, the genuinely most-permissive ones dotted.  The cap counts every
    distinct mp state explored, transients included."""
    _check_cap(cap)
    check_bool_state(net, start)
    explored: set[str] = {start}
    bool_nodes = [start]
    bool_seen = {start}
    edges: list[Edge] = []
    queue = deque([start])
    exceeded = False
    while queue and not exceeded:
        x = queue.popleft()
        one_step = set(general_successors(net, x))
        inner_seen: set[str] = set()
        targets: list[str] = []
        frontier = deque(mp_successors(net, x))
        while frontier:
            t = frontier.popleft()
            if t in inner_seen:
                continue
            inner_seen.add(t)
            if t not in explored:
                if len(explored) >= cap:
                    exceeded = True
                    break
                explored.add(t)
            if is_boolean_state(t):
                if t not in targets:
                    targets.append(t)
            else:
                frontier.extend(mp_successors(net, t))
        if exceeded:
            break
        for t in targets:
            tag = "solid" if t in one_step else "dotted"
            edges.append(Edge(x, t, tag))
            if t not in bool_seen:
                bool_seen.add(t)
                bool_nodes.append(t)
                queue.append(t)
    return Stg(
        nodes=bool_nodes,
        edges=edges,
        semantics="mp-projection",
        roots=(start,),
        cap=cap,
        cap_exceeded=exceeded,
    )


_SIGN_COLORS = {"positive": "green", "negative": "red", "dual": "blue"}


def export_dot(graph: Stg | RegGraph) -> str:
    """Graphviz text.  Stg edges honor their solid/dotted tag; regulatory
    edges are colored green/red/blue for positive/negative/dual."""
    lines = []
    if isinstance(graph, RegGraph):
        lines.append("digraph regulatory_graph {")
        for name in graph.nodes:
            lines.append(f'  "{name}";')
        for e in graph.edges:
            lines.append(
                f'  "{e.source}" -> "{e.target}" [color={_SIGN_COLORS[e.sign]}];'
            )
    elif isinstance(graph, Stg):
        lines.append("digraph stg {")
        lines.append('  node [shape=box];')
        for s in graph.nodes:
            lines.append(f'  "{s}";')
        for e in graph.edges:
            attr = f" [style={e.tag}]" if e.tag else ""
            lines.append(f'  "{e.source}" -> "{e.target}"{attr};')
    else:
        raise TypeError(f"cannot export {type(graph).__name__} as DOT")
    lines.append("}")
    return "\n".join(lines) + "\n"
