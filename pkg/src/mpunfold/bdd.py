"""Reduced ordered binary decision diagrams with hash-consed nodes.

One DiagramManager serves one variable universe (a network's components in
declaration order).  Node ids are ints: 0 is the 0-terminal, 1 is the
1-terminal, internal nodes are >= 2 and stored as (var, low, high) triples.
Hash-consing plus the no-redundant-test rule make ids canonical: two
functions built in the same manager are equal iff their ids are equal.

No complement edges; the node-wise transforms in unfold.py rely on plain
(var, low, high) structure.
"""
from __future__ import annotations

FALSE = 0
TRUE = 1


class DiagramManager:
    def __init__(self, nvars: int):
        if nvars < 0:
            raise ValueError("nvars must be >= 0")
        self.nvars = nvars
        self._triples: list[tuple[int, int, int]] = []
        self._unique: dict[tuple[int, int, int], int] = {}
        self._apply_memo: dict[tuple[str, int, int], int] = {}
        self._neg_memo: dict[int, int] = {}

    def triple(self, u: int) -> tuple[int, int, int]:
        return self._triples[u - 2]

    def is_terminal(self, u: int) -> bool:
        return u < 2

    def mk(self, var: int, low: int, high: int) -> int:
        if low == high:
            return low
        key = (var, low, high)
        u = self._unique.get(key)
        if u is None:
            u = len(self._triples) + 2
            self._triples.append(key)
            self._unique[key] = u
        return u

    def var_node(self, var: int) -> int:
        if not 0 <= var < self.nvars:
            raise ValueError(f"variable index {var} out of range")
        return self.mk(var, FALSE, TRUE)

    def neg(self, u: int) -> int:
        if u < 2:
            return 1 - u
        r = self._neg_memo.get(u)
        if r is None:
            var, low, high = self.triple(u)
            r = self.mk(var, self.neg(low), self.neg(high))
            self._neg_memo[u] = r
            self._neg_memo[r] = u
        return r

    def apply(self, op: str, u: int, v: int) -> int:
        # terminal short-cuts
        if op == "and":
            if u == FALSE or v == FALSE:
                return FALSE
            if u == TRUE:
                return v
            if v == TRUE:
                return u
            if u == v:
                return u
        elif op == "or":
            if u == TRUE or v == TRUE:
                return TRUE
            if u == FALSE:
                return v
            if v == FALSE:
                return u
            if u == v:
                return u
        elif op == "xor":
            if u == v:
                return FALSE
            if u == FALSE:
                return v
            if v == FALSE:
                return u
            if u == TRUE:
                return self.neg(v)
            if v == TRUE:
                return self.neg(u)
        else:
            raise ValueError(f"unknown operation {op!r}")
        if v < u:  # all three ops are commutative
            u, v = v, u
        key = (op, u, v)
        r = self._apply_memo.get(key)
        if r is not None:
            return r
        uvar, ulow, uhigh = self.triple(u)
        vvar, vlow, vhigh = self.triple(v)
        var = min(uvar, vvar)
        if uvar > var:
            ulow = uhigh = u
        if vvar > var:
            vlow = vhigh = v
        r = self.mk(var, self.apply(op, ulow, vlow), self.apply(op, uhigh, vhigh))
        self._apply_memo[key] = r
        return r

    def conj(self, u: int, v: int) -> int:
        return self.apply("and", u, v)

    def disj(self, u: int, v: int) -> int:
        return self.apply("or", u, v)

    def equiv(self, u: int, v: int) -> int:
        return self.neg(self.apply("xor", u, v))

    def restrict(self, u: int, assignment: dict[int, int]) -> int:
        """Cofactor: fix the given variables to 0/1."""
        memo: dict[int, int] = {}

        def go(w):
            if w < 2:
                return w
            r = memo.get(w)
            if r is not None:
                return r
            var, low, high = self.triple(w)
            if var in assignment:
                r = go(high) if assignment[var] else go(low)
            else:
                r = self.mk(var, go(low), go(high))
            memo[w] = r
            return r

        return go(u)

    def support(self, u: int) -> set[int]:
        seen = set()
        out = set()
        stack = [u]
        while stack:
            w = stack.pop()
            if w < 2 or w in seen:
                continue
            seen.add(w)
            var, low, high = self.triple(w)
            out.add(var)
            stack.append(low)
            stack.append(high)
        return out

    def evaluate(self, u: int, bits) -> int:
        while u >= 2:
            var, low, high = self.triple(u)
            u = high if bits[var] else low
        return u

    def truth_table(self, u: int) -> int:
        """Big-int table: bit i holds the value on the state whose n-bit
        binary form (variable 0 as the most significant bit) is i."""
        n = self.nvars
        if n > 20:
            raise ValueError("truth tables limited to 20 variables")
        size = 1 << n
        full = (1 << size) - 1
        var_masks = []
        for var in range(n):
            block = 1 << (n - 1 - var)
            unit = ((1 << block) - 1) << block
            mask = 0
            for offset in range(0, size, 2 * block):
                mask |= unit << offset
            var_masks.append(mask)
        memo: dict[int, int] = {FALSE: 0, TRUE: full}

        def go(w):
            r = memo.get(w)
            if r is not None:
                return r
            var, low, high = self.triple(w)
            m = var_masks[var]
            r = (m & go(high)) | (~m & full & go(low))
            memo[w] = r
            return r

        return go(u)

    def iter_models(self, u: int):
        """Satisfying assignments as 0/1 tuples over all variables, in
        lexicographic order (variable 0 first, 0 before 1)."""
        n = self.nvars

        def go(w, var):
            if var == n:
                if w == TRUE:
                    yield ()
                return
            if w == FALSE:
                return
            if w >= 2 and self.triple(w)[0] == var:
                _, low, high = self.triple(w)
            else:
                low = high = w
            for rest in go(low, var + 1):
                yield (0,) + rest
            for rest in go(high, var + 1):
                yield (1,) + rest

        yield from go(u, 0)

    def iter_cubes(self, u: int):
        """Paths to the 1-terminal as lists of (var, bit), variables in
        order along each path, low branch explored first."""

        def go(w, prefix):
            if w == FALSE:
                return
            if w == TRUE:
                yield list(prefix)
                return
            var, low, high = self.triple(w)
            prefix.append((var, 0))
            yield from go(low, prefix)
            prefix[-1] = (var, 1)
            yield from go(high, prefix)
            prefix.pop()

        yield from go(u, [])

    def from_expr(self, expr) -> int:
        from . import expr as ex

        if isinstance(expr, ex.Var):
            return self.var_node(expr.index)
        if isinstance(expr, ex.Const):
            return TRUE if expr.value else FALSE
        if isinstance(expr, ex.Not):
            return self.neg(self.from_expr(expr.operand))
        if isinstance(expr, ex.And):
            return self.conj(self.from_expr(expr.left), self.from_expr(expr.right))
        if isinstance(expr, ex.Or):
            return self.disj(self.from_expr(expr.left), self.from_expr(expr.right))
        raise TypeError(f"not a BooleanExpr: {expr!r}")


class FunctionRep:
    """A Boolean function: a node in a manager's shared diagram."""

    __slots__ = ("manager", "node")

    def __init__(self, manager: DiagramManager, node: int):
        self.manager = manager
        self.node = node

    def __eq__(self, other):
        return (
            isinstance(other, FunctionRep)
            and self.manager is other.manager
            and self.node == other.node
        )

    def __hash__(self):
        return hash((id(self.manager), self.node))

    def __repr__(self):
        return f"FunctionRep(node={self.node}, nvars={self.manager.nvars})"

    @property
    def is_false(self) -> bool:
        return self.node == FALSE

    @property
    def is_true(self) -> bool:
        return self.node == TRUE

    def support(self) -> set[int]:
        return self.manager.support(self.node)

    def evaluate(self, bits) -> int:
        return self.manager.evaluate(self.node, bits)

    def truth_table(self) -> int:
        return self.manager.truth_table(self.node)

    def negate(self) -> "FunctionRep":
        return FunctionRep(self.manager, self.manager.neg(self.node))

    def equivalent(self, other: "FunctionRep") -> bool:
        """Same function, possibly across managers with one variable order."""
        if self.manager is other.manager:
            return self.node == other.node
        if self.manager.nvars != other.manager.nvars:
            return False
        memo: dict[tuple[int, int], bool] = {}

        def go(a, b):
            if a < 2 or b < 2:
                return a == b
            key = (a, b)
            r = memo.get(key)
            if r is None:
                avar, alow, ahigh = self.manager.triple(a)
                bvar, blow, bhigh = other.manager.triple(b)
                r = avar == bvar and go(alow, blow) and go(ahigh, bhigh)
                memo[key] = r
            return r

        return go(self.node, other.node)
