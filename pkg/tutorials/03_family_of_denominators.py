"""f = (y^2-x^3)^5 + x^18 over g_k = (y^2-x^3)^k for k = 0..6.

Raising k pushes the non-integer jumping numbers out until only the
integers are left; the integer-only test sees this from the numerical data.
"""

from merojump import log_resolution, parse_polynomial
from merojump.multiplier import is_integer_only, jumping_number_list

f = parse_polynomial("(y^2-x^3)^5 + x^18")

for k in range(7):
    res = log_resolution(f, parse_polynomial(f"(y^2-x^3)^{k}"))
    jn = jumping_number_list(res, 4)
    fractional = [lam for lam in jn if lam.denominator > 1]
    last = str(fractional[-1]) if fractional else "-"
    print(f"k={k}: {len(fractional):3d} non-integer jumps up to 4, last {last:>7}, integer-only {is_integer_only(res)}")
