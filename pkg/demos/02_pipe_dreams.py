"""
Bumpless pipe dreams
====================

Every pipe dream of w is reached from the Rothe pipe dream by droops and
K-theoretic droops.  A brute-force enumeration of all grids confirms it.
"""

from grothkit import Permutation, enumerate_bpds, enumerate_bpds_bruteforce, rothe_bpd
from grothkit.bpd import droops, reduced_bpds, weight_single
from grothkit.poly import to_text

w = Permutation.parse("1342")
start = rothe_bpd(w)
print("Rothe pipe dream of 1342:")
print(start.render(), end="\n\n")

# Two droops of pipe 1, into the two empty boxes
for P in droops(start):
    print(P.render())
    print("weight:", to_text(weight_single(P)), end="\n\n")

assert enumerate_bpds(w) == enumerate_bpds_bruteforce(w)
print("|BPD(1342)| =", len(enumerate_bpds(w)))

# K-theoretic droops add pipe dreams with an extra empty box
v = Permutation.parse("21534")
print(f"21534: {len(reduced_bpds(v))} reduced, {len(enumerate_bpds(v))} in total")
