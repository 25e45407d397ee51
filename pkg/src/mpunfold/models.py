"""Bundled example networks.

example_a is the three-component network used throughout the test suite:
x1 self-sustains unless x3 represses it, x2 copies x1, x3 negates x1.  Its
fixed points are 001 and 110, and from 111 the most permissive dynamics
reaches strictly more Boolean states than the asynchronous one.

signal_model shows a transient activation: a self-maintained signal switches
x1 on; x3 asks for x2 without x1, which only a fleeting window allows.  The
target x3 = 1 is asynchronously unreachable from signal-on-rest-off, yet
most permissive runs (and asynchronous runs of the full unfolding) reach it.
"""
from .network import BooleanNetwork, parse_bnet

EXAMPLE_A_BNET = """\
targets, factors
x1, x1 & !x3
x2, x1
x3, !x1
"""

SIGNAL_BNET = """\
targets, factors
signal, signal
x1, signal
x2, x1
x3, !x1 & x2
"""


def example_a() -> BooleanNetwork:
    return parse_bnet(EXAMPLE_A_BNET)


def signal_model() -> BooleanNetwork:
    return parse_bnet(SIGNAL_BNET)
