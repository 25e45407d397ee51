"""Frozen most permissive transition table for the bundled example_a network
(x1 <- x1 & !x3, x2 <- x1, x3 <- !x1), all 64 states over {0,i,d,1}^3.

Each cell is a tuple of compact patterns: pattern character c at position j
(c != '-') contributes the successor x[j := c], skipped when c equals x_j.
A cell equal to the state itself therefore expands to no successors (fixed
point).  Expansion below; the suite checks every row against the
brute-force oracle and against mp_successors.
"""

TABLE1 = {
    # x1 = 0
    "000": ("00i",),
    "00i": ("001",),
    "00d": ("000", "--i"),
    "001": ("001",),
    "0i0": ("01i", "-d-"),
    "0ii": ("011", "-d-"),
    "0id": ("010", "-di"),
    "0i1": ("011", "-d-"),
    "0d0": ("00i",),
    "0di": ("001",),
    "0dd": ("000", "--i"),
    "0d1": ("001",),
    "010": ("0di",),
    "01i": ("0d1",),
    "01d": ("0d0", "--i"),
    "011": ("0d1",),
    # x1 = i
    "i00": ("1ii", "d--"),
    "i0i": ("1i1", "d-d"),
    "i0d": ("1i0", "d-i"),
    "i01": ("1id", "d--"),
    "ii0": ("11i", "dd-"),
    "iii": ("111", "ddd"),
    "iid": ("110", "ddi"),
    "ii1": ("11d", "dd-"),
    "id0": ("10i", "di-"),
    "idi": ("101", "did"),
    "idd": ("100", "dii"),
    "id1": ("10d", "di-"),
    "i10": ("1di", "d--"),
    "i1i": ("1d1", "d-d"),
    "i1d": ("1d0", "d-i"),
    "i11": ("1dd", "d--"),
    # x1 = d
    "d00": ("0ii", "i--"),
    "d0i": ("0i1", "i-d"),
    "d0d": ("0i0", "i-i"),
    "d01": ("0id",),
    "di0": ("01i", "id-"),
    "dii": ("011", "idd"),
    "did": ("010", "idi"),
    "di1": ("01d", "-d-"),
    "dd0": ("00i", "ii-"),
    "ddi": ("001", "iid"),
    "ddd": ("000", "iii"),
    "dd1": ("00d", "-i-"),
    "d10": ("0di", "i--"),
    "d1i": ("0d1", "i-d"),
    "d1d": ("0d0", "i-i"),
    "d11": ("0dd",),
    # x1 = 1
    "100": ("1i0",),
    "10i": ("di1", "--d"),
    "10d": ("di0",),
    "101": ("did",),
    "1i0": ("110",),
    "1ii": ("d11", "--d"),
    "1id": ("d10",),
    "1i1": ("d1d",),
    "1d0": ("100", "-i-"),
    "1di": ("d01", "-id"),
    "1dd": ("d00", "-i-"),
    "1d1": ("d0d", "-i-"),
    "110": ("110",),
    # at 11i both completions have x1 = 1, so f3 = !x1 = 0 and the rising x3
    # may also turn decreasing; the "--d" move is forced, compare 1ii above
    "11i": ("d11", "--d"),
    "11d": ("d10",),
    "111": ("d1d",),
}

# synchronous images f(x) of the eight Boolean states, same source
SYNC_IMAGES = {
    "000": "001",
    "001": "001",
    "010": "001",
    "011": "001",
    "100": "110",
    "101": "010",
    "110": "110",
    "111": "010",
}


def expand(state: str, patterns) -> set[str]:
    out = set()
    for pattern in patterns:
        for j, c in enumerate(pattern):
            if c != "-" and c != state[j]:
                out.add(state[:j] + c + state[j + 1 :])
    return out
