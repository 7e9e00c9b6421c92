"""Antinef divisors on the resolution of the cusp y^2 = x^3.

Shows the intersection matrix, an unloading step and the simple divisors.
"""

from merojump import log_resolution, parse_polynomial
from merojump.divisors import Divisor, excess, intersection_matrix, simple_divisor, unload
from merojump.generators import generators


def show(v):
    return "(" + ", ".join(str(a) for a in v) + ")"


res = log_resolution(parse_polynomial("y^2-x^3"), parse_polynomial("1"))
for row in intersection_matrix(res):
    print(" ".join(f"{v:3d}" for v in row))

D = Divisor.of(res, (0, 0, 1))
print("excess of", show(D.exc), "is", show(excess(D)))
closed = unload(D)
print("unloaded to", show(closed.exc), "with excess", show(excess(closed)))
print("its ideal is generated by", generators(closed))

for i in range(res.size):
    print(f"simple divisor at p{i}:", show(simple_divisor(i, res).exc))
