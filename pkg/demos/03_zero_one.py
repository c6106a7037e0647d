"""
Which Grothendieck polynomials are zero-one?
============================================

Avoiding six patterns is the same as having every coefficient in {-1, 0, 1}.
When the test fails, a witness monomial is returned.
"""

from grothkit import Permutation, classify_groth, enumerate_sn

for text in ("1342", "13254", "58326147"):
    c = classify_groth(Permutation.parse(text))
    print(f"{text:>9}: patterns {c.by_patterns}, coefficients {c.by_coefficients.zero_one}",
          "" if c.by_coefficients.zero_one else f"witness {c.by_coefficients.witness}")

# Counting zero-one permutations in S_n
for n in range(1, 7):
    count = sum(classify_groth(w).by_patterns for w in enumerate_sn(n))
    print(f"S_{n}: {count} zero-one")
