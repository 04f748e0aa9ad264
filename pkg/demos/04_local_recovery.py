"""
Repairing an erased symbol from q others
========================================

Each non-tangent line through a point carries q other curve points.  The
code restricted to the line is a polynomial of degree below q in the line
parameter t = y, so those q symbols pin down the lost one.  A point has
q^2 - 1 such lines, giving that many disjoint recovery sets.
"""

import numpy as np

from hermlift.code import build_code, encode, random_message
from hermlift.gf import field_create
from hermlift.recovery import erasure_simulation, recover_symbol, recovery_sets

F = field_create(3, 1)
code = build_code(F, "lifted-oracle")
rng = np.random.default_rng(0)
word = encode(code, random_message(code, rng))

i = 11
sets = recovery_sets(code.curve, i)
print(f"position {i}: {len(sets)} recovery sets", [s.indices for s in sets])

damaged = word.copy()
damaged[i] = -1
print("true symbol", word[i], "recovered:", [recover_symbol(damaged, i, s, code) for s in sets])

# seeded trials at q = 9; with three erasures some sets are hit and skipped
big = build_code(field_create(3, 2), "lifted-oracle")
report = erasure_simulation(big, trials=50, seed=1, erasures=3)
print(f"q=9: {report.repairs} repairs, {report.skipped} skipped sets, {len(report.failures)} failures")
