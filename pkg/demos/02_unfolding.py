"""
The three-variables-per-component unfolding
===========================================

Each component X of a Boolean network becomes three Boolean variables X_a,
X_b, X_c, with the levels of the most permissive dynamics encoded as

    0 -> 000      i -> 001      d -> 101      1 -> 111

plus two transient patterns (011 and 100) crossed while a commitment to 1 or
to 0 completes.  The point of the construction: plain asynchronous runs of
the unfolded network reproduce most permissive reachability of the input.
"""
from mpunfold import (
    UnfoldSpec,
    build_condition,
    decode_state,
    encode_state,
    example_a,
    fixed_points,
    format_expr,
    mp_successors,
    print_bnet,
    translate_trajectory,
    unfold,
)

net = example_a()
ext = unfold(net, UnfoldSpec(mode="exact"))

print("unfolded network (9 components):\n")
print(print_bnet(ext))

# Every rule is built from two conditions per original component j:
#   plus_j  - f_j can evaluate to 1, reading each regulator's triplet
#   minus_j - f_j can evaluate to 0
# A triplet may read as 1 iff its c variable is set, as 0 iff b is clear.
# For x1 <- x1 & !x3 that gives plus_1 = x1_c & !x3_b: x1 must be readable
# as 1 and x3 readable as 0.
names = ext.names
for j, name in enumerate(net.names):
    print(f"conditions for {name}:")
    for polarity in ("plus", "minus"):
        fr = build_condition(net, j, UnfoldSpec(mode="exact"), polarity)
        reads = sorted(names[v] for v in fr.support())
        print(f"  {polarity:5s} reads {reads}")

# between levels, the two conditions are NOT complementary: at x1 = i the
# rule of x1 can still read either way
state = encode_state(net, "i00")
plus1 = build_condition(net, 0, UnfoldSpec(mode="exact"), "plus")
minus1 = build_condition(net, 0, UnfoldSpec(mode="exact"), "minus")
bits = [int(c) for c in state]
print(f"\nat i00 (encoded {state}): plus_1 = {plus1.evaluate(bits)},"
      f" minus_1 = {minus1.evaluate(bits)}")

# fixed points correspond exactly: 001 <-> 000 000 111, 110 <-> 111 111 000
print("\nfixed points, plain:   ", fixed_points(net))
print("fixed points, unfolded:", fixed_points(ext))
print("decoded:", [decode_state(net, p) for p in fixed_points(ext)])

# a most permissive trajectory replays as single bit flips; the commitments
# i->1 and d->0 take two flips each, through the transient triplets
path = ["111", "d11", "dd1", "d01", "001"]
print("\nmost permissive path:", " -> ".join(path))
for x, y in zip(path, path[1:]):
    assert y in mp_successors(net, x)
print("replayed in the unfolding:")
for s in translate_trajectory(net, path):
    print("  " + " ".join(s[k:k + 3] for k in range(0, 9, 3)))
