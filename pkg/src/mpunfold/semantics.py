"""Successor relations: synchronous, asynchronous, generalized asynchronous,
and most permissive.

Boolean states are strings over 0/1; most permissive states are strings over
the four levels 0 < i/d < 1, where i marks a component increasing and d one
decreasing.  gamma(x) is the set of Boolean completions of x: Boolean
coordinates stay fixed, i/d coordinates range over both values.
"""
from __future__ import annotations

from .bdd import FALSE, TRUE
from .network import BooleanNetwork, build_function, check_bool_state, eval_rule

MP_LEVELS = "0id1"


def check_mp_state(net: BooleanNetwork, x: str) -> str:
    if not isinstance(x, str) or len(x) != net.n or any(c not in MP_LEVELS for c in x):
        raise ValueError(
            f"expected a most permissive state of length {net.n} over 0/i/d/1, got {x!r}"
        )
    return x


def is_boolean_state(x: str) -> bool:
    return all(c in "01" for c in x)


def sync_successor(net: BooleanNetwork, s: str) -> str:
    """All components update at once: the unique successor f(s)."""
    check_bool_state(net, s)
    bits = [int(c) for c in s]
    from . import expr as ex

    return "".join(str(ex.evaluate(rule, bits)) for rule in net.rules)


def _unstable(net: BooleanNetwork, s: str) -> list[int]:
    image = sync_successor(net, s)
    return [j for j in range(net.n) if image[j] != s[j]]


def async_successors(net: BooleanNetwork, s: str) -> list[str]:
    """One unstable component updates; declaration order; [] at fixed points."""
    out = []
    for j in _unstable(net, s):
        image = str(eval_rule(net, j, s))
        out.append(s[:j] + image + s[j + 1 :])
    return out


def general_successors(net: BooleanNetwork, s: str) -> list[str]:
    """Any non-empty subset of unstable components updates at once.

    Enumerated by increasing subset bitmask, bit t of the mask selecting the
    t-th unstable component in declaration order."""
    check_bool_state(net, s)
    unstable = _unstable(net, s)
    out = []
    for mask in range(1, 1 << len(unstable)):
        chars = list(s)
        for t, j in enumerate(unstable):
            if mask >> t & 1:
                chars[j] = "01"[eval_rule(net, j, s)]
        out.append("".join(chars))
    return out


def gamma_can_be(net: BooleanNetwork, j: int, x: str, v: int) -> bool:
    """Whether some Boolean completion x' in gamma(x) has f_j(x') = v.

    Exact: restrict rule j's diagram on the Boolean coordinates of x; the
    residual can attain v iff it is not the constant 1-v."""
    check_mp_state(net, x)
    if v not in (0, 1):
        raise ValueError("v must be 0 or 1")
    fixed = {k: int(c) for k, c in enumerate(x) if c in "01"}
    residual = net.manager.restrict(build_function(net, j).node, fixed)
    return residual != (FALSE if v else TRUE)


def mp_successors(net: BooleanNetwork, x: str) -> list[str]:
    """Most permissive successors, one coordinate change each.

    Per component j in declaration order, four cases in a fixed order:
      (a) x_j in {0,d} and f_j can be 1 on gamma(x)  ->  x_j := i
      (b) x_j in {1,i} and f_j can be 0 on gamma(x)  ->  x_j := d
      (c) x_j = i  ->  x_j := 1
      (d) x_j = d  ->  x_j := 0
    """
    check_mp_state(net, x)
    out = []
    for j, c in enumerate(x):
        if c in "0d" and gamma_can_be(net, j, x, 1):
            out.append(x[:j] + "i" + x[j + 1 :])
        if c in "1i" and gamma_can_be(net, j, x, 0):
            out.append(x[:j] + "d" + x[j + 1 :])
        if c == "i":
            out.append(x[:j] + "1" + x[j + 1 :])
        if c == "d":
            out.append(x[:j] + "0" + x[j + 1 :])
    return out
