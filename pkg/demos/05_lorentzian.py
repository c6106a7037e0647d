"""
Lorentzian checks and support conjectures
=========================================

All eigenvalue questions are answered exactly over the rationals.
"""

from grothkit import Permutation, check_lorentzian_theorem, enumerate_sn
from grothkit.analysis import (
    charpoly,
    closed_form_charpoly,
    closed_form_matrix,
    conjecture_checks,
    inertia,
)
from grothkit.perm import avoids_zero_one_patterns

print("N(S~_321(x;y)) Lorentzian:", bool(check_lorentzian_theorem(Permutation.parse("321"))))

# The quadratic forms met when differentiating the F factor have a known spectrum
for m in (3, 5, 8):
    Q = closed_form_matrix(m)
    assert charpoly(Q) == closed_form_charpoly(m)
    print(f"dimension {m}: inertia (pos, neg, zero) = {inertia(Q)}")

# Support and coefficient conjectures on every permutation of S_5
failures = [w for w in enumerate_sn(5) if not all(conjecture_checks(w))]
zero_one = sum(avoids_zero_one_patterns(w) for w in enumerate_sn(5))
print(f"S_5: {zero_one} zero-one permutations; conjecture failures: {failures or 'none'}")
