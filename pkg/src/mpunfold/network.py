"""Boolean networks: the core model type, .bnet I/O, regulatory graphs.

A BooleanNetwork is an ordered list of (name, rule) pairs.  Declaration
order is the variable order everywhere: state strings, diagram variable
order, successor enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from . import expr as ex
from .bdd import FALSE, TRUE, DiagramManager, FunctionRep
from .expr import BnetParseError, BooleanExpr, IDENT_RE


class BooleanNetwork:
    def __init__(self, components):
        components = list(components)
        if not components:
            raise ValueError("a network needs at least one component")
        names = []
        rules = []
        for name, rule in components:
            if not IDENT_RE.fullmatch(name):
                raise ValueError(f"invalid component name {name!r}")
            names.append(name)
            rules.append(rule)
        dupes = sorted({n for n in names if names.count(n) > 1})
        if dupes:
            raise ValueError(f"duplicate component names: {', '.join(dupes)}")
        self.names: tuple[str, ...] = tuple(names)
        self.rules: tuple[BooleanExpr, ...] = tuple(rules)
        self._index = {name: j for j, name in enumerate(names)}
        for j, rule in enumerate(self.rules):
            for k in ex.variables(rule):
                if not 0 <= k < len(names):
                    raise ValueError(
                        f"rule of {names[j]!r} references variable index {k}, "
                        f"but the network has {len(names)} components"
                    )
        self._manager: DiagramManager | None = None
        self._functions: list[FunctionRep | None] = [None] * len(names)

    @property
    def n(self) -> int:
        return len(self.names)

    def index_of(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"no component named {name!r}") from None

    def components(self):
        return list(zip(self.names, self.rules))

    @property
    def manager(self) -> DiagramManager:
        if self._manager is None:
            self._manager = DiagramManager(self.n)
        return self._manager

    def __repr__(self):
        return f"BooleanNetwork({', '.join(self.names)})"


def check_bool_state(net: BooleanNetwork, s: str) -> str:
    if not isinstance(s, str) or len(s) != net.n or any(c not in "01" for c in s):
        raise ValueError(
            f"expected a Boolean state of length {net.n} over 0/1, got {s!r}"
        )
    return s


def eval_rule(net: BooleanNetwork, j: int, s: str) -> int:
    """Value of component j's rule on a Boolean state string."""
    check_bool_state(net, s)
    return ex.evaluate(net.rules[j], [int(c) for c in s])


def build_function(net: BooleanNetwork, j: int) -> FunctionRep:
    """Canonical diagram of rule j in the network's shared manager."""
    if net._functions[j] is None:
        net._functions[j] = FunctionRep(net.manager, net.manager.from_expr(net.rules[j]))
    return net._functions[j]


def support(fr: FunctionRep) -> set[int]:
    """Indices the function actually depends on."""
    return fr.support()


# --- .bnet files ------------------------------------------------------------

def parse_bnet(text: str) -> BooleanNetwork:
    """Parse .bnet text: one "target, expression" per line, '#' comments,
    an optional case-insensitive "targets, factors" header."""
    entries = []  # (name, expr_text, line_no, name_col)
    seen: dict[str, int] = {}
    first_content = True
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        if first_content:
            first_content = False
            parts = [p.strip().lower() for p in line.split(",")]
            if parts == ["targets", "factors"]:
                continue
        if "," not in line:
            raise BnetParseError("expected 'target, expression'", line_no, 1)
        target, expr_text = line.split(",", 1)
        name = target.strip()
        name_col = line.index(name) + 1 if name else 1
        if not IDENT_RE.fullmatch(name):
            raise BnetParseError(f"invalid target name {name!r}", line_no, name_col)
        if name in seen:
            raise BnetParseError(
                f"duplicate target {name!r} (first declared on line {seen[name]})",
                line_no,
                name_col,
            )
        seen[name] = line_no
        entries.append((name, expr_text, line_no))
    if not entries:
        raise BnetParseError("no rules found", 1, 1)
    name_to_index = {name: j for j, (name, _, _) in enumerate(entries)}
    components = []
    for name, expr_text, line_no in entries:
        rule = ex.parse_expression(expr_text, name_to_index, line=line_no)
        components.append((name, rule))
    return BooleanNetwork(components)


def parse_bnet_file(path: str) -> BooleanNetwork:
    with open(path, encoding="utf-8") as fh:
        return parse_bnet(fh.read())


def _cube_text(cube, names) -> str:
    if not cube:
        return "1"
    return " & ".join(("" if bit else "!") + names[var] for var, bit in cube)


def print_bnet(net: BooleanNetwork) -> str:
    """Render as .bnet text.  Rules are re-derived from the canonical
    diagrams as sums of products (one product per diagram path to 1,
    literals in variable order, products sorted lexicographically), so the
    output is deterministic and round-trips to the same functions."""
    lines = ["targets, factors"]
    for j, name in enumerate(net.names):
        fr = build_function(net, j)
        if fr.is_false:
            body = "0"
        elif fr.is_true:
            body = "1"
        else:
            products = sorted(
                _cube_text(cube, net.names)
                for cube in net.manager.iter_cubes(fr.node)
            )
            body = " | ".join(products)
        lines.append(f"{name}, {body}")
    return "\n".join(lines) + "\n"


# --- regulatory graph -------------------------------------------------------

@dataclass(frozen=True)
class RegEdge:
    source: str
    target: str
    sign: str  # "positive" | "negative" | "dual"


@dataclass
class RegGraph:
    nodes: tuple[str, ...]
    edges: list[RegEdge] = field(default_factory=list)


def _sign_nodes(net: BooleanNetwork, k: int, j: int) -> tuple[int, int]:
    """Diagram nodes for the positive and negative witness sets of k -> j."""
    m = net.manager
    f = build_function(net, j).node
    high = m.restrict(f, {k: 1})
    low = m.restrict(f, {k: 0})
    pos = m.conj(high, m.neg(low))  # f(s[k:=1]) > f(s[k:=0])
    neg = m.conj(low, m.neg(high))
    return pos, neg


def infer_regulatory_graph(net: BooleanNetwork) -> RegGraph:
    """Exact signed regulations by cofactor comparison on the diagrams."""
    edges = []
    for j in range(net.n):
        fr = build_function(net, j)
        for k in sorted(fr.support()):
            pos, neg = _sign_nodes(net, k, j)
            if pos != FALSE and neg != FALSE:
                sign = "dual"
            elif pos != FALSE:
                sign = "positive"
            else:
                sign = "negative"
            edges.append(RegEdge(net.names[k], net.names[j], sign))
    return RegGraph(nodes=net.names, edges=edges)


def sign_witness(net: BooleanNetwork, source: str, target: str, direction: str) -> str | None:
    """A state s (with source fixed to 0) such that flipping source to 1
    moves target's rule in the claimed direction; None if no witness."""
    k = net.index_of(source)
    j = net.index_of(target)
    pos, neg = _sign_nodes(net, k, j)
    node = pos if direction == "positive" else neg
    if direction not in ("positive", "negative"):
        raise ValueError("direction must be 'positive' or 'negative'")
    for model in net.manager.iter_models(node):
        bits = list(model)
        bits[k] = 0
        return "".join(str(b) for b in bits)
    return None
