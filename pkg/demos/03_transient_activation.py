"""
A target only transient dynamics can reach
==========================================

Four components: a held signal, x1 copying the signal, x2 copying x1, and
x3 <- !x1 & x2.  Starting from signal on and everything else off, x3 needs
x2 on while x1 is still off -- but x1 turns on before x2 does.  No
asynchronous schedule gets there.  The most permissive semantics does: it
lets x1 linger between levels, and downstream readers may see either value.
"""
from mpunfold import (
    UnfoldSpec,
    encode_state,
    export_dot,
    format_expr,
    mp_boolean_projection,
    reaches,
    signal_model,
    unfold,
)

net = signal_model()
print("components:")
for name, rule in net.components():
    print(f"  {name} <- {format_expr(rule, net.names)}")

START, TARGET = "1000", "***1"

# plain asynchronous: x3 never fires
r = reaches(net, "async", START, TARGET)
print(f"\nasync  {START} -> {TARGET}: {r.verdict}"
      f" ({r.states_explored} states explored)")

# most permissive: reachable, with x1 passing through i (increasing)
r = reaches(net, "mp", START, TARGET)
print(f"mp     {START} -> {TARGET}: {r.verdict}")
print("  witness:", " -> ".join(r.witness))

# the same phenomenon, without leaving Boolean semantics: unfold every
# component and ask for plain asynchronous reachability of the encoding
ext = unfold(net, UnfoldSpec(mode="exact"))
start = encode_state(net, START)
target = "*" * 9 + "111"  # x3's triplet at level 1
r = reaches(ext, "async", start, target)
print(f"unfolded async {start} -> {target}: {r.verdict}")
print(f"  witness: {len(r.witness)} states, {len(r.witness) - 1} bit flips")

# Boolean-to-Boolean summary of the most permissive dynamics: edges that a
# generalized asynchronous step could also take are tagged solid, the
# genuinely new ones dotted.
proj = mp_boolean_projection(net, START)
dotted = [e for e in proj.edges if e.tag == "dotted"]
print(f"\nprojection from {START}: {len(proj.nodes)} Boolean states,"
      f" {len(proj.edges)} edges, {len(dotted)} beyond generalized async")
for e in dotted:
    print(f"  {e.source} -> {e.target} (dotted)")

# render with: python demos/03_transient_activation.py | tail -n +N | dot -Tsvg
print()
print(export_dot(proj))
