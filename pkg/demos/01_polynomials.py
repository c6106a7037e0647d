"""
Schubert and Grothendieck polynomials
=====================================

Two independent routes to the same polynomial: divided differences from the
longest permutation, and signed sums over bumpless pipe dreams.
"""

from grothkit import DOUBLE, Permutation, grothendieck_bpd, grothendieck_dd, schubert_dd
from grothkit.poly import homogeneous_component, to_latex, to_text

w = Permutation.parse("1342")

# The single Grothendieck polynomial, in canonical term order
G = grothendieck_dd(w)
print("G_1342(x) =", to_text(G))

# Its lowest homogeneous component is the Schubert polynomial
print("S_1342(x) =", to_text(schubert_dd(w)))
assert homogeneous_component(G, w.length()) == schubert_dd(w)

# The double version, computed both ways
G2 = grothendieck_dd(w, DOUBLE)
assert G2 == grothendieck_bpd(w, DOUBLE)
print(f"G_1342(x;y) has {len(G2)} terms; both engines agree")
print("LaTeX:", to_latex(G))
