"""Two denominators with the same topology, different contact with f.

y^2-x^3 and y^2+x^3 are analytically isomorphic cusps, yet the quotients
f/g jump at different exponents because each cusp meets f differently.
"""

from merojump import log_resolution, parse_polynomial
from merojump.multiplier import jumping_number_list
from merojump.puiseux import branch_contact, puiseux_branches

f = parse_polynomial("(y^2-x^3)^4 + x^8*y^5")

for text in ("y^2-x^3", "y^2+x^3"):
    g = parse_polynomial(text)
    res = log_resolution(f, g)
    jn = jumping_number_list(res, 1)
    print(f"g = {text}: {res.size} components, {len(jn)} jumping numbers in (0,1], first {jn[0]}")
    branches = puiseux_branches(f * g)
    bf, bg = branches[0], branches[1]
    if bf.factor != 0:
        bf, bg = bg, bf
    print("   contact of the branches:", branch_contact(bf, bg))
