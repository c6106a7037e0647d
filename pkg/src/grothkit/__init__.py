"""
Schubert and Grothendieck polynomials, bumpless pipe dreams, and the
zero-one classification of Grothendieck polynomials.

>>> from grothkit import Permutation, grothendieck_dd, factorize
>>> str(grothendieck_dd(Permutation.parse("21")))
'x1'
>>> factorize(Permutation.parse("321")).lam
(2, 1, 0)
"""

from .analysis import (
    check_conjecture_1_1,
    check_conjecture_1_2,
    check_conjecture_1_6,
    check_lorentzian_theorem,
    count_positive_eigenvalues,
    is_lorentzian,
    is_m_convex,
)
from .bpd import BumplessPipeDream, Tile, enumerate_bpds, enumerate_bpds_bruteforce, rothe_bpd
from .groth import (
    DOUBLE,
    SINGLE,
    g_hat,
    g_tilde,
    grothendieck_bpd,
    grothendieck_dd,
    s_tilde_double,
    schubert_bpd,
    schubert_dd,
)
from .perm import (
    Permutation,
    avoids_schubert_zero_one_patterns,
    avoids_zero_one_patterns,
    contains_pattern,
    enumerate_sn,
    rothe_diagram,
)
from .poly import Polynomial, VarSpace, divided_difference, isobaric_divided_difference, normalize
from .zeroone import (
    classify_groth,
    classify_schubert,
    factor_F,
    factor_G,
    factorize,
    factorize_double_schubert,
    local_structures,
)

__version__ = "0.1.0"
