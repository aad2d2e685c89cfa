"""Split/division decisions for quaternion algebras H_K(p, q) with prime parameters.

The fast path evaluates a handful of Legendre symbols; every answer can be
cross-checked against a place-based oracle built on Hilbert symbols.
"""

from quatdiv.errors import DegenerateField, HypothesisViolation, InvalidArgument
from quatdiv.decision import Certificate, Decision, Verdict, replay
from quatdiv.arith import (
    PrimeArg,
    SquarefreeD,
    is_prime,
    legendre,
    squarefree_part,
    third_subfield,
)
from quatdiv.quadfields import MultiQuadField, QuadField, SplitType, discriminant
from quatdiv.local import REAL_PLACE, conic_solvable_mod, hilbert_symbol
from quatdiv.ramq import RamSet, classify_over_Q, ramified_primes_fast, ramified_primes_generic
from quatdiv.classify import classify_biquadratic, classify_multiquadratic, classify_quadratic
from quatdiv.dihedral import (
    HilbertClassFieldDesc,
    KummerFieldDesc,
    class_number_imag_quadratic,
    classify_hilbert_class_field,
    classify_kummer_s3,
)
from quatdiv.oracle import decide, decide_over_Q

__all__ = [
    "Certificate",
    "Decision",
    "DegenerateField",
    "HilbertClassFieldDesc",
    "HypothesisViolation",
    "InvalidArgument",
    "KummerFieldDesc",
    "MultiQuadField",
    "PrimeArg",
    "QuadField",
    "REAL_PLACE",
    "RamSet",
    "SplitType",
    "SquarefreeD",
    "Verdict",
    "class_number_imag_quadratic",
    "classify_biquadratic",
    "classify_hilbert_class_field",
    "classify_kummer_s3",
    "classify_multiquadratic",
    "classify_over_Q",
    "classify_quadratic",
    "conic_solvable_mod",
    "decide",
    "decide_over_Q",
    "discriminant",
    "hilbert_symbol",
    "is_prime",
    "legendre",
    "ramified_primes_fast",
    "ramified_primes_generic",
    "replay",
    "squarefree_part",
    "third_subfield",
]
