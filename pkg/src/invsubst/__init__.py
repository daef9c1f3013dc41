"""Invertible substitutions on a three-letter alphabet.

Decide invertibility, invert, split an invertible substitution into an inner
automorphism and simple factors, and factor substitution matrices.
"""
from .decompose import (
    Decomposition,
    PatternSplit,
    decompose,
    extract_pattern,
    is_simple,
    peel_once,
    strip_once,
)
from .endo import (
    IDENTITY,
    IOTA1,
    PHI_L,
    PHI_R,
    PI1,
    PI2,
    Endomorphism,
    Fib,
    Gen,
    Perm,
    Side,
    Substitution,
    apply,
    compose,
    conjugate,
    det,
    generator,
    inner,
    is_mixed,
    matrix,
    parse_endomorphism,
    parse_substitution,
)
from .errors import (
    EmptyWordError,
    InternalContradiction,
    InvsubstError,
    NegativeEntryError,
    NoPatternError,
    NotInvertibleError,
    ParseError,
    ResourceError,
)
from .matrices import (
    PermutationMatrix,
    Transvection,
    factor_elementary,
    is_substitution_matrix_of_invertible,
)
from .nielsen import NielsenWitness, check_witness, find_witness, invert, is_invertible
from .oracle import (
    enumerate_invertible,
    enumerate_simple,
    is_decomposable_bruteforce,
    iter_invertible,
    iter_simple,
)
from .words import Sign, SignedLetter, Word

__version__ = "0.1.0"
