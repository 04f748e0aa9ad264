"""
Field arithmetic and the Hermitian curve
========================================

Elements of F_{q^2} are integers whose base-p digits are polynomial
coefficients.  We build F_9, walk its points on x^q + x + y^(q+1) = 0 and
look at how lines meet the curve.
"""

from collections import Counter

from hermlift.curve import HermitianCurve, all_lines, intersection_count, make_line
from hermlift.gf import field_create

F = field_create(3, 1)
print(F, "modulus coefficients (low to high):", F.modulus)

# z is encoded as 3 (digits 0, 1); z^2 = -1 = 2
z = 3
print("z^2 =", F.mul(z, z), " frobenius(z) =", F.frobenius(z), " trace(z) =", F.trace(z), " norm(z) =", F.norm(z))

H = HermitianCurve(F)
print(len(H), "points; the first few as (x, y):", [(P.x, P.y) for P in H.points[:6]])

# every line meets the curve in 1 or q + 1 points, and only tangents in 1
hist = Counter((intersection_count(L), L.tangent) for L in all_lines(F))
print("(points met, tangent) -> number of lines:", dict(hist))

L = make_line(F, 0, 1)
print("line alpha=0, beta=1 meets the curve at", [H.points[i] for i in H.line_points(L)])
