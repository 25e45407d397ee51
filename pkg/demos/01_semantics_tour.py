"""
Tour of the four update semantics on a three-component network
==============================================================

The running model: x1 sustains itself unless x3 represses it, x2 copies x1,
and x3 inverts x1.  Two stable states compete, 001 and 110, and which one a
run lands in depends on the update discipline.
"""
from mpunfold import (
    attractors,
    example_a,
    export_dot,
    fixed_points,
    format_expr,
    mp_successors,
    async_successors,
    general_successors,
    reachable_set,
    reaches,
    sync_successor,
)

net = example_a()

print("components:")
for name, rule in net.components():
    print(f"  {name} <- {format_expr(rule, net.names)}")

# the two fixed points: x3 wins (001) or x1/x2 win (110)
print("\nfixed points:", fixed_points(net))

# synchronous update is a function: every component moves at once
x = "111"
print(f"\nsynchronous run from {x}:")
for _ in range(4):
    print(f"  {x} -> {sync_successor(net, x)}")
    x = sync_successor(net, x)

# asynchronous update picks one unstable component per step
print("\nasynchronous successors of 111:", async_successors(net, "111"))

# generalized asynchronous flips any nonempty subset of unstable components;
# the last entry (all of them) is the synchronous image
print("general successors of 111:     ", general_successors(net, "111"))

# most permissive states track components that are between levels:
# i = increasing, d = decreasing.  From 111 both x1 and x3 may start falling.
print("most permissive successors of 111:", mp_successors(net, "111"))

# reachability verdicts depend on the semantics
for semantics in ("sync", "async", "general", "mp"):
    target = "001"
    r = reaches(net, semantics, "111", target)
    print(f"  111 -> {target} under {semantics:8s}: {r.verdict}"
          f" (witness {r.witness})")

# under mp the witness passes through intermediate levels: both x1 and x2
# have to decrease (d) before they commit to 0

# explicit graphs stay small here; DOT output renders with graphviz
stg = reachable_set(net, "async", "111")
print(f"\nasync graph from 111: {len(stg.nodes)} states, {len(stg.edges)} edges")
print(export_dot(stg))

# attractors are the terminal SCCs; for this model just the two stable states
print("attractors (async):")
for a in attractors(net, "async"):
    print(f"  {a.kind}: {a.states}")
