"""Reference values for the worked examples, transcribed as plain data."""

from fractions import Fraction


def fracs(text):
    return [Fraction(s) for s in text.split()]


F1 = "(y^2-x^3)^4+x^8*y^5"
G1 = "y^2-x^3"
G2 = "y^2+x^3"
F3 = "(y^2-x^3)^5+x^18"

EX1_NF = [8, 12, 24, 28, 31, 31, 60, 92, 124, 125] + [31] * 22
EX1_NG = [2, 3, 6, 7, 8, 9, 15, 23, 31, 31] + list(range(10, 32))
EX1_N = [6, 9, 18, 21, 23, 22, 45, 69, 93, 94] + list(range(21, -1, -1))

EX2_NF = [8, 12, 24, 28, 31, 60, 92, 124, 125] + [24] * 18
EX2_NG = [2, 3, 6, 6, 6, 12, 18, 24, 24] + list(range(7, 25))
EX2_N = [6, 9, 18, 22, 25, 48, 74, 100, 101] + list(range(17, -1, -1))

# (lambda, printed generators); "f" and "g" stand for the germs above
EX1_TABLE = [
    ("5/18", "x, y"),
    ("35/93", "x^2, y"),
    ("13/31", "x^2, x*y, y^2"),
    ("43/93", "x^3, x*y, y^2"),
    ("47/93", "g, x^2*y, x^3"),
    ("17/31", "g, x^4, x*y^2, x^2*y"),
    ("55/93", "g, x^4, x^3*y"),
    ("11/18", "x*g, x^4, x^3*y, y*g"),
    ("59/93", "x^2*y^2, x^5, x*g, x^3*y, y*g"),
    ("21/31", "x^5, x^4*y, x*g, y*g"),
    ("22/31", "x^2*y^2, x^2*g, x^4*y, y*g, x*y^3"),
    ("67/93", "x^3*y^2, x^2*g, x^4*y, x^6, y*g"),
    ("70/93", "x^2*g, x^3*y^2, x^6, y^2*g, x*y*g, x^4*y"),
    ("71/93", "x^2*g, x^5*y, x^6, y^2*g, x*y*g"),
    ("74/93", "x^3*y^2, x^2*y^3, x^3*g, y^2*g, x*y*g, x^5*y"),
    ("25/31", "x^7, x^3*g, y^2*g, x*y*g, x^5*y, x^4*y^2"),
    ("26/31", "g^2, x^7, x^2*y*g, x^3*g, x^5*y, x^4*y^2"),
    ("79/93", "g^2, x^7, x^2*y*g, x^3*g, x^6*y"),
    ("82/93", "g^2, x*y^2*g, x^4*g, x^2*y*g, x^3*y^3, x^6*y, x^4*y^2"),
    ("83/93", "g^2, x*y^2*g, x^8, x^4*g, x^2*y*g, x^5*y^2, x^6*y"),
    ("86/93", "g^2, x^6*y, x^5*y^2, x^8, x^3*y*g, x^4*g"),
    ("29/31", "g^2, x^7*y, x^3*y*g, x^8, x^4*g"),
    ("17/18", "x^7*y, x*g^2, x^8, y*g^2, x^3*y*g, x^4*g"),
    ("30/31", "x^7*y, x^5*y^2, x*g^2, x^5*g, y*g^2, x^3*y*g, x^4*y^3, x^2*y^2*g"),
    ("91/93", "x^7*y, x^9, x*g^2, x^5*g, y*g^2, x^3*y*g, x^6*y^2, x^2*y^2*g"),
    ("1", "f"),
    ("29/18", "f*x, f*y"),
    ("53/31", "f*y, f*x^2"),
    ("163/93", "f*x^2, f*x*y, f*y^2"),
    ("167/93", "f*x^3, f*x*y, f*y^2"),
    ("57/31", "f*g, f*x^2*y, f*x^3"),
    ("175/93", "f*g, f*x^4, f*x*y^2, f*x^2*y"),
    ("179/93", "f*g, f*x^4, f*x^3*y"),
    ("35/18", "f*x*g, f*x^4, f*x^3*y, f*y*g"),
    ("61/31", "f*x^2*y^2, f*x^5, f*x*g, f*x^3*y, f*y*g"),
    ("2", "f^2"),
    ("53/18", "f^2*x, f^2*y"),
    ("3", "f^3"),
]
EX1_JN = [Fraction(lam) for lam, _ in EX1_TABLE]

EX2_JN = fracs("""
27/100 7/20 39/100 43/100 47/100 51/100 11/20 29/50 59/100 63/100 33/50 67/100 7/10 71/100
37/50 3/4 39/50 79/100 41/50 83/100 43/50 87/100 89/100 9/10 91/100 47/50 19/20 97/100 49/50 99/100
1 151/100 159/100 163/100 167/100 171/100 7/4 179/100 91/50 183/100 187/100 19/10 191/100 97/50
39/20 99/50 199/100
2 11/4 283/100 287/100 291/100 59/20 299/100
3 399/100
4
""")

_EX3_K0_UNIT = fracs("""
1/6 41/180 23/90 17/60 14/45 61/180 11/30 71/180 19/45 77/180 9/20 41/90 43/90 29/60 91/180 23/45
8/15 97/180 101/180 17/30 53/90 107/180 37/60 28/45 113/180 29/45 13/20 59/90 121/180 61/90 41/60
7/10 127/180 32/45 131/180 11/15 133/180 34/45 137/180 23/30 47/60 71/90 143/180 73/90 49/60 37/45
149/180 151/180 38/45 17/20 77/90 13/15 157/180 79/90 53/60 161/180 9/10 163/180 41/45 83/90 167/180
14/15 169/180 19/20 43/45 173/180 29/30 44/45 59/60 89/90 179/180
""")


def _ex3_k0(upto):
    out = []
    for n in range(upto + 1):
        if n:
            out.append(Fraction(n))
        out.extend(n + lam for lam in _EX3_K0_UNIT)
    return sorted(lam for lam in out if lam <= upto)


EX3_COLUMNS = {
    0: _ex3_k0(4),
    1: fracs("""
5/24 41/144 23/72 17/48 7/18 61/144 11/24 71/144 19/36 77/144 9/16 41/72 43/72 29/48 91/144 23/36
2/3 97/144 101/144 17/24 53/72 107/144 37/48 7/9 113/144 29/36 13/16 59/72 121/144 61/72 41/48 7/8
127/144 8/9 131/144 11/12 133/144 17/18 137/144 23/24 47/48 71/72 143/144
1 35/24 221/144 113/72 77/48 59/36 241/144 41/24 251/144 16/9 257/144 29/16 131/72 133/72 89/48
271/144 17/9 23/12 277/144 281/144 47/24 143/72 287/144
2 65/24 401/144 203/72 137/48 26/9 421/144 71/24 431/144
3 95/24
4
"""),
    2: fracs("""
5/18 41/108 23/54 17/36 14/27 61/108 11/18 71/108 19/27 77/108 3/4 41/54 43/54 29/36 91/108 23/27
8/9 97/108 101/108 17/18 53/54 107/108
1 35/18 2 3 4
"""),
    3: fracs("5/12 41/72 23/36 17/24 7/9 61/72 11/12 71/72 1 2 3 4"),
    4: fracs("5/6 1 2 3 4"),
    5: fracs("1 2 3 4"),
}
