"""
Sweeping a symmetric group
==========================

A scan writes one JSON record per permutation, in lexicographic order, so two
runs can be compared byte for byte.  The same thing is available as
``groth-kit scan --n 5 --out s5.jsonl``.
"""

import json
import tempfile
from pathlib import Path

from grothkit.scan import run_scan

out = Path(tempfile.mkdtemp()) / "s5.jsonl"
summary, records = run_scan(5, out=out, workers=2)
print(summary.line())

first = json.loads(out.read_text().splitlines()[0])
print(json.dumps(first, indent=1))

degrees = {}
for r in records:
    degrees[r.degree_d] = degrees.get(r.degree_d, 0) + 1
print("permutations by degree of G_w:", dict(sorted(degrees.items())))
