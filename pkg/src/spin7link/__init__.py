"""
Exact evaluation of the link invariant attached to the spinor representation
of so7, for framed links presented as closures of braids on at most three
strands. Values are Laurent polynomials in W with integer coefficients.
"""
from .braid import BraidWord, Closure, LinkPresentation, parse_braid
from .exactalg import AlphaSeries, LaurentPoly, RatFunc, W
from .invariant import derive_markov_weights, evaluate_link, evaluate_word, known_examples, quantum_trace
from .repdata import DELTA, build_alpha_generators, build_generators

__all__ = [
    "AlphaSeries",
    "BraidWord",
    "Closure",
    "DELTA",
    "LaurentPoly",
    "LinkPresentation",
    "RatFunc",
    "W",
    "build_alpha_generators",
    "build_generators",
    "derive_markov_weights",
    "evaluate_link",
    "evaluate_word",
    "known_examples",
    "parse_braid",
    "quantum_trace",
]

__version__ = "0.1.0"
