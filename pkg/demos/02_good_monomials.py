"""
Which monomials survive restriction to lines
============================================

x^a y^b is good when, on every non-tangent line, its restriction reduces
to degree below q modulo the intersection polynomial.  The exact oracle
sweeps all q^4 lines; the digit criterion certifies a subset for free.
"""

import time

from hermlift.code import onepoint_basis
from hermlift.gf import field_create
from hermlift.liftcrit import good_monomials, is_good_naive, sufficient_condition

for p, l in [(3, 1), (2, 2), (3, 2)]:
    F = field_create(p, l)
    q = F.q
    t0 = time.perf_counter()
    verdicts = good_monomials(F)
    good = [(v.a, v.b) for v in verdicts if v.oracle_good]
    covered = [(v.a, v.b) for v in verdicts if v.sufficient_good]
    onepoint = onepoint_basis(q, q * q - 1)
    print(f"q={q}: {len(good)} of {len(verdicts)} good, {len(covered)} certified by digits, "
          f"{len(onepoint)} one-point monomials ({time.perf_counter() - t0:.1f}s)")
    assert set(covered) <= set(good) and set(onepoint) <= set(good)

# a good monomial of high degree, certified by digits and confirmed line by line
F = field_create(3, 2)
print("x^0 y^27 sufficient:", sufficient_condition(0, 27, F), " oracle:", is_good_naive(0, 27, F)[0])

# a bad one comes with the first line that breaks it
print("x^2 y^1 at q=3:", is_good_naive(2, 1, field_create(3, 1)))
