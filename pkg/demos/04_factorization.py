"""
Factorizing a zero-one Grothendieck polynomial
==============================================

With signs removed, G_w splits as a monomial x^lambda times one factor per
droopable region of the Rothe diagram.  Each claim is checked by exact division.
"""

import json

from grothkit import Permutation, factorize, factorize_double_schubert, rothe_diagram
from grothkit.poly import to_text

w = Permutation.parse("58326147")
D = rothe_diagram(w)
print("Rothe diagram:")
for r in range(1, w.n + 1):
    print(" ".join("#" if (r, c) in D else "." for c in range(1, w.n + 1)))

rep = factorize(w)
print("\nlambda =", rep.lam)
for f in rep.factors:
    print(f"{f}: {to_text(f.poly)}")

# The same regions factor the unsigned double Schubert polynomial
double = factorize_double_schubert(w)
print(f"\ndouble: {len(double.lambda_cells)} binomials and {len(double.factors)} factors, verified")

print(json.dumps(rep.to_json())[:200], "...")
