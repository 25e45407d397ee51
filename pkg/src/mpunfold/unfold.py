"""Boolean unfolding: three variables per component.

Each unfolded component X becomes X_a, X_b, X_c with the level encoding

    0 -> 000    i -> 001    d -> 101    1 -> 111

plus the transient triplets 011 (between 001 and 111) and 100 (between 101
and 000).  The remaining patterns 010 and 110 are artifacts and stay
unreachable from encoded states.  A triplet reads as activatable iff c = 1
and as inactivatable iff b = 0.

The rules of the unfolded network are driven by two conditions per
component j:

    plus_j   "f_j can evaluate to 1 given what each regulator may read as"
    minus_j  "f_j can evaluate to 0 ..."

where an unfolded regulator k may read as 1 iff x_kc = 1 and as 0 iff
x_kb = 0, and a plain regulator reads only as its current value.  Two
construction modes are provided:

    exact      node-wise transform of rule j's diagram; at each decision on
               regulator k, take (may-read-1 and transformed high-branch) or
               (may-read-0 and transformed low-branch).  This computes
               exactly "some choice of readings makes f_j = target".
    syntactic  substitute may-read-1 for positive literals and may-read-0
               for negative literals in the negation normal form.  Cheaper,
               identical on valid states when every regulator occurs with a
               single polarity, an over-approximation otherwise.

Negated conditions are the complements of the built ones in both modes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from . import expr as ex
from .bdd import FALSE, TRUE, DiagramManager, FunctionRep
from .network import BooleanNetwork, build_function
from .semantics import check_mp_state, mp_successors

LEVEL_TO_TRIPLET = {"0": "000", "i": "001", "d": "101", "1": "111"}
TRIPLET_TO_LEVEL = {t: lv for lv, t in LEVEL_TO_TRIPLET.items()}
TRANSIENT_TRIPLETS = ("011", "100")
VALID_TRIPLETS = tuple(LEVEL_TO_TRIPLET.values()) + TRANSIENT_TRIPLETS
ARTIFACT_TRIPLETS = ("010", "110")

LETTERS = ("a", "b", "c")

MODES = ("exact", "syntactic")


def triplet_is_active(triplet: str) -> bool:
    return triplet[2] == "1"


def triplet_is_inactive(triplet: str) -> bool:
    return triplet[1] == "0"


@dataclass(frozen=True)
class UnfoldSpec:
    """Which components to unfold (None = all) and the condition mode."""

    components: tuple[str, ...] | None = None
    mode: str = "exact"

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.components is not None and not isinstance(self.components, tuple):
            object.__setattr__(self, "components", tuple(self.components))

    def resolve(self, net: BooleanNetwork) -> frozenset[int]:
        if self.components is None:
            return frozenset(range(net.n))
        return frozenset(net.index_of(name) for name in self.components)


def unfolded_names(net: BooleanNetwork, spec: UnfoldSpec | None = None) -> list[str]:
    """Output component names, each unfolded X replaced in place by
    X_a, X_b, X_c."""
    spec = spec or UnfoldSpec()
    chosen = spec.resolve(net)
    out = []
    for k, name in enumerate(net.names):
        if k in chosen:
            out.extend(f"{name}_{letter}" for letter in LETTERS)
        else:
            out.append(name)
    return out


class _Unfolding:
    """Shared construction state for one (network, spec) pair."""

    def __init__(self, net: BooleanNetwork, spec: UnfoldSpec):
        self.net = net
        self.spec = spec
        self.chosen = spec.resolve(net)
        self.out_names = unfolded_names(net, spec)
        dupes = sorted({n for n in self.out_names if self.out_names.count(n) > 1})
        if dupes:
            raise ValueError(
                f"unfolding produces colliding component names: {', '.join(dupes)}"
            )
        self.manager = DiagramManager(len(self.out_names))
        # slots[k]: tuple (a,b,c) of output indices if k unfolded, else (p,)
        self.slots: list[tuple[int, ...]] = []
        pos = 0
        for k in range(net.n):
            width = 3 if k in self.chosen else 1
            self.slots.append(tuple(range(pos, pos + width)))
            pos += width
        m = self.manager
        self.allow1: list[int] = []
        self.allow0: list[int] = []
        for k in range(net.n):
            if k in self.chosen:
                _, b, c = self.slots[k]
                self.allow1.append(m.var_node(c))
                self.allow0.append(m.neg(m.var_node(b)))
            else:
                (p,) = self.slots[k]
                self.allow1.append(m.var_node(p))
                self.allow0.append(m.neg(m.var_node(p)))
        self._conditions: dict[tuple[int, str], int] = {}

    def condition(self, j: int, polarity: str) -> int:
        if polarity not in ("plus", "minus"):
            raise ValueError(f"polarity must be 'plus' or 'minus', got {polarity!r}")
        key = (j, polarity)
        if key not in self._conditions:
            target = 1 if polarity == "plus" else 0
            if self.spec.mode == "exact":
                node = self._exact(j, target)
            else:
                node = self._syntactic(j, target)
            self._conditions[key] = node
        return self._conditions[key]

    def _exact(self, j: int, target: int) -> int:
        src = self.net.manager
        m = self.manager
        hit, miss = (TRUE, FALSE) if target == 1 else (FALSE, TRUE)
        memo: dict[int, int] = {TRUE: hit, FALSE: miss}

        def go(u):
            r = memo.get(u)
            if r is None:
                k, low, high = src.triple(u)
                r = m.disj(
                    m.conj(self.allow1[k], go(high)),
                    m.conj(self.allow0[k], go(low)),
                )
                memo[u] = r
            return r

        return go(build_function(self.net, j).node)

    def _syntactic(self, j: int, target: int) -> int:
        m = self.manager
        nnf = ex.to_nnf(self.net.rules[j], negate=(target == 0))

        def go(e):
            if isinstance(e, ex.Var):
                return self.allow1[e.index]
            if isinstance(e, ex.Not):  # NNF: operand is a Var
                return self.allow0[e.operand.index]
            if isinstance(e, ex.Const):
                return TRUE if e.value else FALSE
            if isinstance(e, ex.And):
                return m.conj(go(e.left), go(e.right))
            return m.disj(go(e.left), go(e.right))

        return go(nnf)

    def _own(self, k: int, pattern: str) -> int:
        """Conjunction fixing component k's own triplet to a 0/1/* pattern."""
        m = self.manager
        node = TRUE
        for slot, want in zip(self.slots[k], pattern):
            if want == "*":
                continue
            lit = m.var_node(slot)
            node = m.conj(node, lit if want == "1" else m.neg(lit))
        return node

    def rule_node(self, out_index: int) -> int:
        m = self.manager
        k, letter = self._origin(out_index)
        if letter is None:  # plain component: may-rise or no-must-fall
            plus = self.condition(k, "plus")
            minus = self.condition(k, "minus")
            x = m.var_node(out_index)
            return m.disj(m.conj(m.neg(x), plus), m.conj(x, m.neg(minus)))
        plus = self.condition(k, "plus")
        minus = self.condition(k, "minus")
        own = lambda pattern: self._own(k, pattern)
        if letter == "a":
            return reduce(
                m.disj,
                (
                    own("011"),
                    own("110"),
                    own("111"),
                    m.conj(own("001"), minus),
                    m.conj(own("101"), m.neg(plus)),
                ),
            )
        if letter == "b":
            return reduce(
                m.disj,
                (own("110"), own("0*1"), m.conj(own("111"), m.neg(minus))),
            )
        return reduce(
            m.disj,
            (own("11*"), own("0*1"), m.conj(own("000"), plus)),
        )

    def _origin(self, out_index: int) -> tuple[int, str | None]:
        for k, slots in enumerate(self.slots):
            if out_index in slots:
                if len(slots) == 1:
                    return k, None
                return k, LETTERS[slots.index(out_index)]
        raise IndexError(out_index)


def build_condition(
    net: BooleanNetwork,
    j: int,
    spec: UnfoldSpec | None = None,
    polarity: str = "plus",
) -> FunctionRep:
    """The plus/minus condition of component j over the unfolded variables
    (variable order = unfolded_names order)."""
    ctx = _Unfolding(net, spec or UnfoldSpec())
    return FunctionRep(ctx.manager, ctx.condition(j, polarity))


def _node_to_expr(manager: DiagramManager, node: int) -> ex.BooleanExpr:
    if node == FALSE:
        return ex.Const(0)
    if node == TRUE:
        return ex.Const(1)
    products = []
    for cube in manager.iter_cubes(node):
        lits = [ex.Var(var) if bit else ex.Not(ex.Var(var)) for var, bit in cube]
        products.append(reduce(ex.And, lits))
    return reduce(ex.Or, products)


def unfold(net: BooleanNetwork, spec: UnfoldSpec | None = None) -> BooleanNetwork:
    """The unfolded Boolean network.

    Unfolded components get the three-variable rules driven by their
    conditions; components left plain get (not x and plus) or (x and not
    minus), which degenerates to the original rule when no regulator is
    unfolded.  Asynchronous runs of the result simulate the most permissive
    runs of the input (exactly, in exact mode, on encoded states)."""
    spec = spec or UnfoldSpec()
    ctx = _Unfolding(net, spec)
    components = []
    for out_index, name in enumerate(ctx.out_names):
        rule = _node_to_expr(ctx.manager, ctx.rule_node(out_index))
        components.append((name, rule))
    return BooleanNetwork(components)


def encode_state(net: BooleanNetwork, x: str, spec: UnfoldSpec | None = None) -> str:
    """Map a most permissive state to its unfolded Boolean state.  Components
    left plain must sit at a Boolean level."""
    spec = spec or UnfoldSpec()
    check_mp_state(net, x)
    chosen = spec.resolve(net)
    parts = []
    for k, level in enumerate(x):
        if k in chosen:
            parts.append(LEVEL_TO_TRIPLET[level])
        else:
            if level not in "01":
                raise ValueError(
                    f"component {net.names[k]!r} is not unfolded and must be "
                    f"Boolean, got level {level!r}"
                )
            parts.append(level)
    return "".join(parts)


def decode_state(net: BooleanNetwork, xt: str, spec: UnfoldSpec | None = None) -> str:
    """Inverse of encode_state; rejects transient and artifact triplets."""
    spec = spec or UnfoldSpec()
    chosen = spec.resolve(net)
    expected = sum(3 if k in chosen else 1 for k in range(net.n))
    if not isinstance(xt, str) or len(xt) != expected or any(c not in "01" for c in xt):
        raise ValueError(
            f"expected an unfolded Boolean state of length {expected}, got {xt!r}"
        )
    parts = []
    pos = 0
    for k in range(net.n):
        if k in chosen:
            triplet = xt[pos : pos + 3]
            pos += 3
            level = TRIPLET_TO_LEVEL.get(triplet)
            if level is None:
                raise ValueError(
                    f"triplet {triplet} of component {net.names[k]!r} does not "
                    f"encode a level"
                )
            parts.append(level)
        else:
            parts.append(xt[pos])
            pos += 1
    return "".join(parts)


def triplet_step(own: str, plus_cond: bool, minus_cond: bool) -> str:
    """Synchronous image of a single triplet given its condition values."""
    if own not in VALID_TRIPLETS + ARTIFACT_TRIPLETS:
        raise ValueError(f"not a triplet: {own!r}")
    if own == "000":
        return "001" if plus_cond else "000"
    if own == "001":
        return "111" if minus_cond else "011"
    if own == "011":
        return "111"
    if own == "100":
        return "000"
    if own == "101":
        return "000" if plus_cond else "100"
    if own == "111":
        return "101" if minus_cond else "111"
    # artifacts drain toward the nearest level
    if own == "010":
        return "000"
    return "111"  # 110


# per-coordinate move -> successive own-triplet values, one bit flip each
_MOVE_TRIPLETS = {
    ("0", "i"): ("001",),
    ("1", "d"): ("101",),
    ("i", "d"): ("101",),
    ("d", "i"): ("001",),
    ("i", "1"): ("011", "111"),
    ("d", "0"): ("100", "000"),
}


def translate_trajectory(net: BooleanNetwork, path: list[str]) -> list[str]:
    """Replay a most permissive trajectory in the fully unfolded network.

    Each single-step coordinate move expands to one bit flip, except the
    commitments i->1 and d->0 which take two (through the transient triplets
    011 and 100).  The input path is validated transition by transition."""
    if not path:
        return []
    spec = UnfoldSpec()
    for x in path:
        check_mp_state(net, x)
    out = [encode_state(net, path[0], spec)]
    for step, (x, y) in enumerate(zip(path, path[1:])):
        if y not in mp_successors(net, x):
            raise ValueError(
                f"step {step}: {y!r} is not a most permissive successor of {x!r}"
            )
        (j,) = [k for k in range(net.n) if x[k] != y[k]]
        cur = out[-1]
        for triplet in _MOVE_TRIPLETS[(x[j], y[j])]:
            cur = cur[: 3 * j] + triplet + cur[3 * j + 3 :]
            out.append(cur)
    return out
