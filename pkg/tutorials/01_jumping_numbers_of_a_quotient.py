"""Jumping numbers of f/g with f = (y^2-x^3)^4 + x^8*y^5 and g = y^2-x^3.

Run:  python tutorials/01_jumping_numbers_of_a_quotient.py
"""

from fractions import Fraction

from merojump import log_resolution, parse_polynomial
from merojump.cli import render_generator
from merojump.generators import generators
from merojump.multiplier import integer_tail_threshold, jumping_numbers

f = parse_polynomial("(y^2-x^3)^4 + x^8*y^5")
g = parse_polynomial("y^2-x^3")
res = log_resolution(f, g)

print(f"{res.size} exceptional components")
print("N_f =", res.values_f)
print("N_g =", res.values_g)

for rec in jumping_numbers(res, Fraction(2)):
    ideal = generators(rec.divisor)
    print(f"{str(rec.lam):>6}  ", ", ".join(render_generator(h, res) for h in ideal.generators))

n = integer_tail_threshold(res)
print(f"beyond {int(n)} only integers jump (guaranteed: {n.guaranteed})")
